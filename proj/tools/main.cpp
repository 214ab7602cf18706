#include <CLI11.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include "fusion/based_module.hpp"
#include "fusion/based_ring.hpp"
#include "fusion/dynkin.hpp"
#include "fusion/errors.hpp"
#include "fusion/json_io.hpp"
#include "fusion/modular_invariants.hpp"
#include "fusion/sl2.hpp"
#include "fusion/small_groups.hpp"

using nlohmann::json;

namespace {

using namespace fusion;

// ---------------------------------------------------------------- printing

std::string join_ints(const std::vector<int>& v, const char* sep) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) out += fmt::format("{}{}", i ? sep : "", v[i]);
    return out;
}

std::string matrix_lines(const IntMat& m, const std::string& indent) {
    std::vector<std::vector<std::string>> cells(static_cast<size_t>(m.rows));
    std::vector<size_t> width(static_cast<size_t>(m.cols), 0);
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) {
            std::string s = m(r, c).get_str();
            width[static_cast<size_t>(c)] = std::max(width[static_cast<size_t>(c)], s.size());
            cells[static_cast<size_t>(r)].push_back(std::move(s));
        }
    std::string out;
    for (int r = 0; r < m.rows; ++r) {
        out += indent;
        for (int c = 0; c < m.cols; ++c)
            out += fmt::format("{}{:>{}}", c ? " " : "", cells[static_cast<size_t>(r)][static_cast<size_t>(c)],
                               width[static_cast<size_t>(c)]);
        out += "\n";
    }
    return out;
}

std::string algebra_text(const std::vector<int>& weights) {
    std::string out;
    for (size_t i = 0; i < weights.size(); ++i) out += fmt::format("{}V{}", i ? "+" : "", weights[i]);
    return out;
}

std::string involution_text(const std::vector<int>& perm) {
    bool id = true;
    for (size_t i = 0; i < perm.size(); ++i) id = id && perm[i] == static_cast<int>(i);
    if (id) return "identity";
    std::string out;
    for (size_t i = 0; i < perm.size(); ++i) out += fmt::format("{}{}", i ? "," : "", perm[i]);
    return out;
}

// Best-effort description of an invariant: diagonal, a permutation, or a sum
// of squared character blocks recovered greedily; empty when no clean
// description is found.
std::string describe_invariant(const ModularInvariant& inv) {
    const int r = inv.l + 1;
    if (inv.Z == IntMat::identity(r)) return "diagonal";

    bool permutation = true;
    std::vector<int> image(static_cast<size_t>(r), -1);
    for (int c = 0; c < r && permutation; ++c) {
        int ones = 0;
        for (int row = 0; row < r; ++row) {
            if (inv.Z(row, c) == 0) continue;
            if (inv.Z(row, c) != 1) permutation = false;
            ++ones;
            image[static_cast<size_t>(c)] = row;
        }
        permutation = permutation && ones == 1;
    }
    if (permutation) {
        std::vector<int> seen(static_cast<size_t>(r), 0);
        for (int v : image) seen[static_cast<size_t>(v)] = 1;
        if (std::count(seen.begin(), seen.end(), 1) == r) {
            std::string out = "permutation:";
            for (int c = 0; c < r; ++c)
                if (image[static_cast<size_t>(c)] != c)
                    out += fmt::format(" chi_{}->chi_{}", c, image[static_cast<size_t>(c)]);
            return out;
        }
    }

    IntMat rest = inv.Z;
    std::vector<std::string> terms;
    while (!is_zero(rest)) {
        int a = -1;
        for (int i = 0; i < r && a < 0; ++i)
            if (rest(i, i) > 0) a = i;
        if (a < 0) return "";
        std::vector<Int> u;
        for (int c = 0; c < r; ++c) {
            if (rest(a, c) % rest(a, a) != 0) return "";
            u.push_back(rest(a, c) / rest(a, a));
        }
        const Int coef = rest(a, a);
        for (int i = 0; i < r; ++i)
            for (int c = 0; c < r; ++c)
                if (rest(i, c) < coef * u[static_cast<size_t>(i)] * u[static_cast<size_t>(c)]) return "";
        for (int i = 0; i < r; ++i)
            for (int c = 0; c < r; ++c) rest(i, c) -= coef * u[static_cast<size_t>(i)] * u[static_cast<size_t>(c)];
        std::string sum;
        for (int c = 0; c < r; ++c) {
            if (u[static_cast<size_t>(c)] == 0) continue;
            if (!sum.empty()) sum += " + ";
            if (u[static_cast<size_t>(c)] != 1) sum += fmt::format("{} ", u[static_cast<size_t>(c)].get_str());
            sum += fmt::format("chi_{}", c);
        }
        terms.push_back(fmt::format("{}|{}|^2", coef == 1 ? "" : coef.get_str() + " ", sum));
    }
    std::string out = "blocks: ";
    for (size_t i = 0; i < terms.size(); ++i) out += fmt::format("{}{}", i ? " + " : "", terms[i]);
    return out;
}

// ------------------------------------------------------------------- input

ZPlusRing cli_resolve_ring(const json& ref) {
    if (ref.is_string()) {
        const std::string s = ref.get<std::string>();
        if (s.rfind("sl2:", 0) != 0) return ring_from_json(load_json_file(s));
    }
    return resolve_ring(ref);
}

ZPlusRing ring_from_flags(const std::string& in, int level) {
    if (!in.empty() && level >= 1) throw structural_error("pass either --in or --level, not both");
    if (!in.empty()) return ring_from_json(load_json_file(in));
    if (level >= 1) return sl2_fusion_ring(level);
    throw structural_error("one of --in or --level is required");
}

ZPlusModule module_from_file(const std::string& path) {
    return module_from_json(load_json_file(path), cli_resolve_ring);
}

void require_jobs(int jobs) {
    if (jobs < 1) throw structural_error("--jobs must be at least 1");
}

// ------------------------------------------------------------------- verbs

int ring_verify(const ZPlusRing& R, const std::string& format) {
    const std::vector<std::string> findings = verify_zplus_ring(R);
    std::optional<std::vector<int>> inv;
    if (findings.empty()) inv = find_based_structure(R);
    if (format == "json") {
        json out;
        out["valid"] = findings.empty();
        out["findings"] = findings;
        out["based"] = findings.empty() ? json(inv.has_value()) : json(nullptr);
        out["involution"] = inv ? json(*inv) : json(nullptr);
        std::cout << out.dump(2) << "\n";
    } else if (!findings.empty()) {
        for (const std::string& f : findings) std::cout << "violation: " << f << "\n";
    } else if (inv) {
        std::cout << "valid Z+-ring; based; involution = " << involution_text(*inv) << "\n";
    } else {
        std::cout << "valid Z+-ring; not based\n";
    }
    return findings.empty() ? 0 : 1;
}

int ring_fusion_matrices(const ZPlusRing& R, const std::string& format) {
    const std::vector<IntMat> mats = fusion_matrices(R);
    if (format == "json") {
        json out;
        out["labels"] = R.labels;
        json arr = json::array();
        for (const IntMat& m : mats) {
            json rows = json::array();
            for (int r = 0; r < m.rows; ++r) {
                json row = json::array();
                for (int c = 0; c < m.cols; ++c) row.push_back(int_to_json(m(r, c)));
                rows.push_back(std::move(row));
            }
            arr.push_back(std::move(rows));
        }
        out["matrices"] = std::move(arr);
        std::cout << out.dump(2) << "\n";
    } else {
        for (int i = 0; i < R.rank; ++i) {
            std::cout << fmt::format("N_{} ({})\n", i, R.labels[static_cast<size_t>(i)]);
            std::cout << matrix_lines(mats[static_cast<size_t>(i)], "  ");
        }
    }
    return 0;
}

int ring_bound(const ZPlusRing& R, const std::string& format) {
    const Int bound = module_search_bound(R);
    if (format == "json")
        std::cout << json{{"bound", int_to_json(bound)}}.dump(2) << "\n";
    else
        std::cout << bound.get_str() << "\n";
    return 0;
}

int module_verify_cmd(const ZPlusModule& M, const std::string& format) {
    const std::vector<std::string> findings = verify_module(M);
    const bool can_base = M.ring.involution.has_value();
    const bool based = findings.empty() && can_base && is_based(M);
    if (format == "json") {
        json out;
        out["valid"] = findings.empty();
        out["findings"] = findings;
        out["based"] = findings.empty() && can_base ? json(based) : json(nullptr);
        std::cout << out.dump(2) << "\n";
    } else if (!findings.empty()) {
        for (const std::string& f : findings) std::cout << "violation: " << f << "\n";
    } else {
        std::cout << fmt::format("valid module of rank {} over a ring of rank {}", M.module_rank, M.ring.rank);
        if (can_base) std::cout << (based ? "; based" : "; not based");
        std::cout << "\n";
    }
    return findings.empty() ? 0 : 1;
}

int module_equiv_cmd(const ZPlusModule& A, const ZPlusModule& B, const std::string& format) {
    const std::optional<std::vector<int>> sigma = module_equiv(A, B);
    if (format == "json") {
        json out;
        out["equivalent"] = sigma.has_value();
        out["bijection"] = sigma ? json(*sigma) : json(nullptr);
        std::cout << out.dump(2) << "\n";
    } else if (sigma) {
        std::cout << "equivalent; bijection = " << join_ints(*sigma, ",") << "\n";
    } else {
        std::cout << "inequivalent\n";
    }
    return sigma ? 0 : 1;
}

int module_enumerate_cmd(const ZPlusRing& R, int max_rank, const Int& max_entry, const json& ring_ref,
                         const std::string& format) {
    const std::vector<std::string> findings = verify_zplus_ring(R);
    if (!findings.empty()) throw structural_error("enumeration requires a valid ring: " + findings.front());
    const std::vector<ZPlusModule> modules = enumerate_irreducible_modules(R, max_rank, max_entry);
    if (format == "json") {
        json out;
        out["count"] = modules.size();
        json arr = json::array();
        for (const ZPlusModule& M : modules) arr.push_back(module_to_json(M, ring_ref));
        out["modules"] = std::move(arr);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << fmt::format("found {} irreducible modules (max rank {}, max entry {})\n", modules.size(),
                                 max_rank, max_entry.get_str());
        for (size_t k = 0; k < modules.size(); ++k) {
            const ZPlusModule& M = modules[k];
            const bool based = M.ring.involution && is_based(M);
            std::cout << fmt::format("module {}: rank {}{}\n", k + 1, M.module_rank, based ? ", based" : "");
            for (int i = 0; i < M.ring.rank; ++i) {
                std::cout << fmt::format("  M_{} =\n", i);
                std::cout << matrix_lines(M.action[static_cast<size_t>(i)], "    ");
            }
        }
    }
    return 0;
}

int nimrep_classify_cmd(int level, const std::string& format) {
    const std::vector<DynkinType> types = classify_nimreps(level);
    if (format == "json") {
        json out = json::array();
        for (const DynkinType& t : types) out.push_back(type_name(t));
        std::cout << out.dump(2) << "\n";
    } else {
        for (const DynkinType& t : types) std::cout << type_name(t) << "\n";
    }
    return 0;
}

int nimrep_from_graph_cmd(const LoopyGraph& g, int level, const std::string& format) {
    const NimrepResult res = nimrep_from_graph(g, level);
    if (format == "json") {
        if (res.accepted)
            std::cout << module_to_json(res.module, fmt::format("sl2:{}", level)).dump(2) << "\n";
        else
            std::cout << json{{"accepted", false}, {"reason", res.reason}}.dump(2) << "\n";
    } else if (res.accepted) {
        std::cout << fmt::format("accepted: NIM-rep of rank {} at level {}{}\n", res.module.module_rank, level,
                                 res.module.based_flag ? "; based" : "");
        for (int i = 0; i <= level; ++i) {
            std::cout << fmt::format("  M_{} =\n", i);
            std::cout << matrix_lines(res.module.action[static_cast<size_t>(i)], "    ");
        }
    } else {
        std::cout << "rejected: " << res.reason << "\n";
    }
    return res.accepted ? 0 : 1;
}

int nimrep_exponents_cmd(const ZPlusModule& M, int level, const std::string& format) {
    const int l = level >= 1 ? level : M.ring.rank - 1;
    const std::vector<int> exps = module_exponents(M, l);
    if (format == "json")
        std::cout << json{{"level", l}, {"exponents", exps}}.dump(2) << "\n";
    else
        std::cout << join_ints(exps, " ") << "\n";
    return 0;
}

int nimrep_paths_cmd(const LoopyGraph& g, int level, const std::string& format) {
    const EssentialPaths ep = essential_path_dims(g, level);
    if (format == "json") {
        json out;
        out["level"] = level;
        json grades = json::array();
        for (const Int& t : ep.grade_totals) grades.push_back(int_to_json(t));
        out["grade_totals"] = std::move(grades);
        out["total"] = int_to_json(ep.total);
        json ws = json::array();
        for (const IntMat& w : ep.W) {
            json rows = json::array();
            for (int r = 0; r < w.rows; ++r) {
                json row = json::array();
                for (int c = 0; c < w.cols; ++c) row.push_back(int_to_json(w(r, c)));
                rows.push_back(std::move(row));
            }
            ws.push_back(std::move(rows));
        }
        out["W"] = std::move(ws);
        std::cout << out.dump(2) << "\n";
    } else {
        std::string grades;
        for (size_t i = 0; i < ep.grade_totals.size(); ++i)
            grades += fmt::format("{}{}", i ? " " : "", ep.grade_totals[i].get_str());
        std::cout << "grade totals: " << grades << "\n";
        std::cout << "total: " << ep.total.get_str() << "\n";
        for (size_t i = 0; i < ep.W.size(); ++i) {
            std::cout << fmt::format("W_{} =\n", i);
            std::cout << matrix_lines(ep.W[i], "  ");
        }
    }
    return 0;
}

int minv_solve_cmd(int level, int bound, const std::string& format) {
    const std::vector<ModularInvariant> invs = enumerate_invariants(level, bound);
    if (format == "json") {
        json out;
        out["level"] = level;
        out["bound"] = bound;
        out["count"] = invs.size();
        json arr = json::array();
        for (const ModularInvariant& inv : invs) {
            json one = invariant_to_json(inv);
            one["trace"] = int_to_json(trace(inv.Z));
            Int sq = 0;
            for (const Int& z : inv.Z.a) sq += z * z;
            one["sum_of_squares"] = int_to_json(sq);
            one["exponents"] = invariant_exponents(inv);
            const std::string desc = describe_invariant(inv);
            one["description"] = desc.empty() ? json(nullptr) : json(desc);
            arr.push_back(std::move(one));
        }
        out["invariants"] = std::move(arr);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << fmt::format("{} invariants at level {} (entry bound {})\n", invs.size(), level, bound);
        for (size_t k = 0; k < invs.size(); ++k) {
            const ModularInvariant& inv = invs[k];
            Int sq = 0;
            for (const Int& z : inv.Z.a) sq += z * z;
            std::cout << fmt::format("\ninvariant {}: trace = {}, sum of squares = {}\n", k + 1,
                                     trace(inv.Z).get_str(), sq.get_str());
            std::cout << "  exponents: " << join_ints(invariant_exponents(inv), " ") << "\n";
            std::cout << "  Z =\n" << matrix_lines(inv.Z, "    ");
            const std::string desc = describe_invariant(inv);
            if (!desc.empty()) std::cout << "  " << desc << "\n";
        }
    }
    return 0;
}

int minv_lattice_cmd(int level, const std::string& format) {
    const IntMat basis = commutant_lattice(level);
    if (format == "json") {
        json out;
        out["level"] = level;
        out["rank"] = basis.rows;
        json arr = json::array();
        for (int r = 0; r < basis.rows; ++r) {
            std::vector<Int> v(basis.a.begin() + static_cast<long>(r) * basis.cols,
                               basis.a.begin() + static_cast<long>(r + 1) * basis.cols);
            const IntMat m = unflatten(v, level + 1);
            json rows = json::array();
            for (int i = 0; i < m.rows; ++i) {
                json row = json::array();
                for (int c = 0; c < m.cols; ++c) row.push_back(int_to_json(m(i, c)));
                rows.push_back(std::move(row));
            }
            arr.push_back(std::move(rows));
        }
        out["basis"] = std::move(arr);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << fmt::format("lattice rank {} at level {}\n", basis.rows, level);
        for (int r = 0; r < basis.rows; ++r) {
            std::vector<Int> v(basis.a.begin() + static_cast<long>(r) * basis.cols,
                               basis.a.begin() + static_cast<long>(r + 1) * basis.cols);
            std::cout << fmt::format("basis {}=\n", r + 1);
            std::cout << matrix_lines(unflatten(v, level + 1), "  ");
        }
    }
    return 0;
}

int minv_check_cmd(const ModularInvariant& inv, const ZPlusModule& M, const std::string& format) {
    const bool commutes = commutes_with_modular_data(inv);
    bool ok = commutes;
    json out;
    out["commutes"] = commutes;
    std::string text = fmt::format("commutes: {}\n", commutes ? "yes" : "no");
    if (commutes) {
        const ClaimReport rep = check_claims(inv, M);
        ok = rep.trace_ok && rep.exponents_ok;
        out["trace_ok"] = rep.trace_ok;
        out["exponents_ok"] = rep.exponents_ok;
        out["cstar_simple_count"] = int_to_json(rep.cstar_simple_count);
        text += fmt::format("trace vs module rank: {}\n", rep.trace_ok ? "ok" : "mismatch");
        text += fmt::format("exponent multisets: {}\n", rep.exponents_ok ? "match" : "mismatch");
        text += fmt::format("reported simple-object count: {}\n", rep.cstar_simple_count.get_str());
    }
    if (format == "json")
        std::cout << out.dump(2) << "\n";
    else
        std::cout << text;
    return ok ? 0 : 1;
}

json catalog_row_json(const DynkinType& t) {
    const CatalogRow row = module_category_exists(t);
    json j;
    j["type"] = type_name(t);
    j["rank"] = t.rank;
    j["h"] = coxeter_number(t);
    j["level"] = row.level;
    j["exists"] = row.exists;
    j["algebra"] = row.algebra_object;
    j["exponents"] = coxeter_exponents(t);
    return j;
}

int catalog_list_cmd(int max_rank, const std::string& format) {
    if (max_rank < 1) throw structural_error("--max-rank must be at least 1");
    std::vector<DynkinType> types;
    for (int n = 1; n <= max_rank; ++n) types.push_back({DynkinFamily::A, n});
    for (int n = 4; n <= max_rank; ++n) types.push_back({DynkinFamily::D, n});
    for (int n = 6; n <= std::min(max_rank, 8); ++n) types.push_back({DynkinFamily::E, n});
    for (int n = 1; n <= max_rank; ++n) types.push_back({DynkinFamily::T, n});
    std::sort(types.begin(), types.end(), type_less);
    if (format == "json") {
        json out = json::array();
        for (const DynkinType& t : types) out.push_back(catalog_row_json(t));
        std::cout << out.dump(2) << "\n";
    } else {
        for (const DynkinType& t : types) {
            const CatalogRow row = module_category_exists(t);
            std::cout << fmt::format("{} h={} level={} exists={} exponents={}\n", type_name(t), coxeter_number(t),
                                     row.level, row.exists ? "yes" : "no",
                                     join_ints(coxeter_exponents(t), ","));
        }
    }
    return 0;
}

int catalog_show_cmd(const std::string& name, const std::string& format) {
    const std::optional<DynkinType> t = parse_type(name);
    if (!t) throw structural_error(fmt::format("unknown type \"{}\"", name));
    if (format == "json") {
        json j = catalog_row_json(*t);
        const LoopyGraph g = build_graph(*t);
        json rows = json::array();
        for (int r = 0; r < g.size; ++r) {
            json row = json::array();
            for (int c = 0; c < g.size; ++c) row.push_back(int_to_json(g.adjacency(r, c)));
            rows.push_back(std::move(row));
        }
        j["adjacency"] = std::move(rows);
        std::cout << j.dump(2) << "\n";
    } else {
        const CatalogRow row = module_category_exists(*t);
        std::cout << fmt::format("type: {}\n", type_name(*t));
        std::cout << fmt::format("h = {}, level = {}\n", coxeter_number(*t), row.level);
        std::cout << fmt::format("exists: {}\n", row.exists ? "yes" : "no");
        std::cout << fmt::format("algebra object: {}\n", algebra_text(row.algebra_object));
        std::cout << fmt::format("exponents: {}\n", join_ints(coxeter_exponents(*t), " "));
        std::cout << "adjacency:\n" << matrix_lines(build_graph(*t).adjacency, "  ");
    }
    return 0;
}

SmallGroup group_from_flags(const std::string& name, const std::string& in) {
    if (!name.empty() && !in.empty()) throw structural_error("pass either --group or --in, not both");
    if (!name.empty()) return group_from_name(name);
    if (!in.empty()) return group_from_json(load_json_file(in));
    throw structural_error("one of --group or --in is required");
}

int repg_subgroups_cmd(const SmallGroup& G, const std::string& format) {
    const std::vector<SubgroupClass> classes = subgroup_classes(G);
    if (format == "json") {
        json out = json::array();
        for (const SubgroupClass& c : classes)
            out.push_back(json{{"order", c.representative.size()},
                               {"class_size", c.class_size},
                               {"iso", c.iso_tag},
                               {"schur_multiplier_order", c.schur_multiplier_order},
                               {"representative", c.representative}});
        std::cout << out.dump(2) << "\n";
    } else {
        for (const SubgroupClass& c : classes)
            std::cout << fmt::format("order={} class_size={} iso={} schur={} rep={}\n", c.representative.size(),
                                     c.class_size, c.iso_tag, c.schur_multiplier_order,
                                     join_ints(c.representative, ","));
    }
    return 0;
}

int print_count(const Int& n, const std::string& format, const char* key) {
    if (format == "json")
        std::cout << json{{key, int_to_json(n)}}.dump(2) << "\n";
    else
        std::cout << n.get_str() << "\n";
    return 0;
}

void print_seed_catalog() {
    std::cout << "A_n level=n-1 algebra=V0 exists=yes\n";
    std::cout << "D_n level=2n-4 algebra=V0+Vl exists=yes\n";
    std::cout << "T_n level=2n-1 algebra=V0+Vl exists=no\n";
    for (int n = 6; n <= 8; ++n) {
        const CatalogRow row = module_category_exists({DynkinFamily::E, n});
        std::cout << fmt::format("E{} level={} algebra={} exists={}\n", n, row.level, algebra_text(row.algebra_object),
                                 row.exists ? "yes" : "no");
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact combinatorics of fusion rings, NIM-reps and modular invariants"};
    app.require_subcommand(0, 1);
    bool seed_catalog = false;
    app.add_flag("--seed-catalog", seed_catalog, "print the diagram existence table and exit");

    int exit_code = 0;

    // ring ------------------------------------------------------------
    auto* ring = app.add_subcommand("ring", "based ring operations");
    ring->require_subcommand(1);
    struct {
        std::string in, format = "text";
        int level = 0;
    } ring_opts;
    for (const char* verb : {"verify", "fusion-matrices", "bound"}) {
        auto* cmd = ring->add_subcommand(verb);
        cmd->add_option("--in", ring_opts.in, "ring JSON file");
        cmd->add_option("--level", ring_opts.level, "use the level-l fusion ring");
        cmd->add_option("--format", ring_opts.format)->check(CLI::IsMember({"text", "json"}));
        const std::string v = verb;
        cmd->callback([&, v] {
            const ZPlusRing R = ring_from_flags(ring_opts.in, ring_opts.level);
            if (v == "verify")
                exit_code = ring_verify(R, ring_opts.format);
            else if (v == "fusion-matrices")
                exit_code = ring_fusion_matrices(R, ring_opts.format);
            else
                exit_code = ring_bound(R, ring_opts.format);
        });
    }

    // module ----------------------------------------------------------
    auto* module = app.add_subcommand("module", "module operations");
    module->require_subcommand(1);
    struct {
        std::string in, against, format = "text";
        int level = 0, max_rank = 0, jobs = 1;
        int bound = 0;
    } mod_opts;
    {
        auto* cmd = module->add_subcommand("verify");
        cmd->add_option("--in", mod_opts.in, "module JSON file")->required();
        cmd->add_option("--format", mod_opts.format)->check(CLI::IsMember({"text", "json"}));
        cmd->callback([&] { exit_code = module_verify_cmd(module_from_file(mod_opts.in), mod_opts.format); });
    }
    {
        auto* cmd = module->add_subcommand("equiv");
        cmd->add_option("--in", mod_opts.in, "first module JSON file")->required();
        cmd->add_option("--against", mod_opts.against, "second module JSON file")->required();
        cmd->add_option("--format", mod_opts.format)->check(CLI::IsMember({"text", "json"}));
        cmd->callback([&] {
            exit_code = module_equiv_cmd(module_from_file(mod_opts.in), module_from_file(mod_opts.against),
                                         mod_opts.format);
        });
    }
    {
        auto* cmd = module->add_subcommand("enumerate");
        cmd->add_option("--in", mod_opts.in, "ring JSON file");
        cmd->add_option("--level", mod_opts.level, "use the level-l fusion ring");
        cmd->add_option("--max-rank", mod_opts.max_rank, "module rank bound (default: the ring's search bound)");
        cmd->add_option("--bound", mod_opts.bound, "entry bound (default: the ring's search bound)");
        cmd->add_option("--jobs", mod_opts.jobs, "worker count (output is schedule-independent)");
        cmd->add_option("--format", mod_opts.format)->check(CLI::IsMember({"text", "json"}));
        cmd->callback([&] {
            require_jobs(mod_opts.jobs);
            const ZPlusRing R = ring_from_flags(mod_opts.in, mod_opts.level);
            const Int fallback = module_search_bound(R);
            const int max_rank = mod_opts.max_rank >= 1 ? mod_opts.max_rank : static_cast<int>(to_long(fallback));
            const Int max_entry = mod_opts.bound >= 1 ? Int(mod_opts.bound) : fallback;
            const json ref = mod_opts.level >= 1 ? json(fmt::format("sl2:{}", mod_opts.level)) : json(nullptr);
            exit_code = module_enumerate_cmd(R, max_rank, max_entry, ref, mod_opts.format);
        });
    }

    // nimrep ----------------------------------------------------------
    auto* nimrep = app.add_subcommand("nimrep", "NIM-rep operations at a level");
    nimrep->require_subcommand(1);
    struct {
        std::string in, format = "text";
        int level = 0, jobs = 1;
    } nim_opts;
    {
        auto* cmd = nimrep->add_subcommand("classify");
        cmd->add_option("--level", nim_opts.level)->required();
        cmd->add_option("--jobs", nim_opts.jobs, "worker count (output is schedule-independent)");
        cmd->add_option("--format", nim_opts.format)->check(CLI::IsMember({"text", "json"}));
        cmd->callback([&] {
            require_jobs(nim_opts.jobs);
            exit_code = nimrep_classify_cmd(nim_opts.level, nim_opts.format);
        });
    }
    {
        auto* cmd = nimrep->add_subcommand("from-graph");
        cmd->add_option("--in", nim_opts.in, "graph JSON file")->required();
        cmd->add_option("--level", nim_opts.level)->required();
        cmd->add_option("--format", nim_opts.format)->check(CLI::IsMember({"text", "json"}));
        cmd->callback([&] {
            exit_code = nimrep_from_graph_cmd(graph_from_json(load_json_file(nim_opts.in)), nim_opts.level,
                                              nim_opts.format);
        });
    }
    {
        auto* cmd = nimrep->add_subcommand("exponents");
        cmd->add_option("--in", nim_opts.in, "module JSON file")->required();
        cmd->add_option("--level", nim_opts.level, "level (default: ring rank - 1)");
        cmd->add_option("--format", nim_opts.format)->check(CLI::IsMember({"text", "json"}));
        cmd->callback([&] {
            exit_code = nimrep_exponents_cmd(module_from_file(nim_opts.in), nim_opts.level, nim_opts.format);
        });
    }
    {
        auto* cmd = nimrep->add_subcommand("paths");
        cmd->add_option("--in", nim_opts.in, "graph JSON file")->required();
        cmd->add_option("--level", nim_opts.level)->required();
        cmd->add_option("--format", nim_opts.format)->check(CLI::IsMember({"text", "json"}));
        cmd->callback([&] {
            exit_code = nimrep_paths_cmd(graph_from_json(load_json_file(nim_opts.in)), nim_opts.level,
                                         nim_opts.format);
        });
    }

    // minv ------------------------------------------------------------
    auto* minv = app.add_subcommand("minv", "modular invariant operations");
    minv->require_subcommand(1);
    struct {
        std::string in, against, format = "text";
        int level = 0, bound = 4, jobs = 1;
    } minv_opts;
    {
        auto* cmd = minv->add_subcommand("solve");
        cmd->add_option("--level", minv_opts.level)->required();
        cmd->add_option("--bound", minv_opts.bound, "entry bound (default 4)");
        cmd->add_option("--jobs", minv_opts.jobs, "worker count (output is schedule-independent)");
        cmd->add_option("--format", minv_opts.format)->check(CLI::IsMember({"text", "json"}));
        cmd->callback([&] {
            require_jobs(minv_opts.jobs);
            exit_code = minv_solve_cmd(minv_opts.level, minv_opts.bound, minv_opts.format);
        });
    }
    {
        auto* cmd = minv->add_subcommand("lattice");
        cmd->add_option("--level", minv_opts.level)->required();
        cmd->add_option("--format", minv_opts.format)->check(CLI::IsMember({"text", "json"}));
        cmd->callback([&] { exit_code = minv_lattice_cmd(minv_opts.level, minv_opts.format); });
    }
    {
        auto* cmd = minv->add_subcommand("check");
        cmd->add_option("--in", minv_opts.in, "invariant JSON file")->required();
        cmd->add_option("--against", minv_opts.against, "module JSON file")->required();
        cmd->add_option("--format", minv_opts.format)->check(CLI::IsMember({"text", "json"}));
        cmd->callback([&] {
            exit_code = minv_check_cmd(invariant_from_json(load_json_file(minv_opts.in)),
                                       module_from_file(minv_opts.against), minv_opts.format);
        });
    }

    // catalog ---------------------------------------------------------
    auto* catalog = app.add_subcommand("catalog", "diagram catalog");
    catalog->require_subcommand(1);
    struct {
        std::string type, format = "text";
        int max_rank = 8;
    } cat_opts;
    {
        auto* cmd = catalog->add_subcommand("list");
        cmd->add_option("--max-rank", cat_opts.max_rank, "largest rank to list (default 8)");
        cmd->add_option("--format", cat_opts.format)->check(CLI::IsMember({"text", "json"}));
        cmd->callback([&] { exit_code = catalog_list_cmd(cat_opts.max_rank, cat_opts.format); });
    }
    {
        auto* cmd = catalog->add_subcommand("show");
        cmd->add_option("--type", cat_opts.type, "type name such as A5, D7, E6, T3")->required();
        cmd->add_option("--format", cat_opts.format)->check(CLI::IsMember({"text", "json"}));
        cmd->callback([&] { exit_code = catalog_show_cmd(cat_opts.type, cat_opts.format); });
    }

    // repg ------------------------------------------------------------
    auto* repg = app.add_subcommand("repg", "module categories over Rep(G) for small G");
    repg->require_subcommand(1);
    struct {
        std::string group, in, format = "text";
    } repg_opts;
    {
        auto* cmd = repg->add_subcommand("subgroups");
        cmd->add_option("--group", repg_opts.group, "built-in group name (Z6, Z2xZ2, D8, Q8, ...)");
        cmd->add_option("--in", repg_opts.in, "group JSON file");
        cmd->add_option("--format", repg_opts.format)->check(CLI::IsMember({"text", "json"}));
        cmd->callback([&] {
            exit_code = repg_subgroups_cmd(group_from_flags(repg_opts.group, repg_opts.in), repg_opts.format);
        });
    }
    {
        auto* cmd = repg->add_subcommand("fiber-count");
        cmd->add_option("--group", repg_opts.group);
        cmd->add_option("--in", repg_opts.in, "group JSON file");
        cmd->add_option("--format", repg_opts.format)->check(CLI::IsMember({"text", "json"}));
        cmd->callback([&] {
            exit_code = print_count(fiber_functor_count(group_from_flags(repg_opts.group, repg_opts.in)),
                                    repg_opts.format, "fiber_functors");
        });
    }
    {
        auto* cmd = repg->add_subcommand("modcat-count");
        cmd->add_option("--group", repg_opts.group);
        cmd->add_option("--in", repg_opts.in, "group JSON file");
        cmd->add_option("--format", repg_opts.format)->check(CLI::IsMember({"text", "json"}));
        cmd->callback([&] {
            exit_code = print_count(module_category_count(group_from_flags(repg_opts.group, repg_opts.in)),
                                    repg_opts.format, "module_categories");
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const budget_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) { // includes structural_error
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    if (app.get_subcommands().empty()) {
        if (seed_catalog) {
            print_seed_catalog();
            return 0;
        }
        std::cerr << app.help();
        return 2;
    }
    return exit_code;
}
