#include "fusion/json_io.hpp"

#include <fmt/format.h>

#include <fstream>

#include "fusion/errors.hpp"
#include "fusion/sl2.hpp"

namespace fusion {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* name) {
    if (!j.is_object()) throw structural_error("expected a JSON object");
    const auto it = j.find(name);
    if (it == j.end()) throw structural_error(fmt::format("missing field \"{}\"", name));
    return *it;
}

int int_field(const json& j, const char* name) {
    const json& f = field(j, name);
    if (!f.is_number_integer()) throw structural_error(fmt::format("field \"{}\" must be an integer", name));
    return f.get<int>();
}

IntMat int_matrix_from_json(const json& j, const char* what) {
    if (!j.is_array() || j.empty()) throw structural_error(fmt::format("{} must be a nonempty array of rows", what));
    const int rows = static_cast<int>(j.size());
    const json& first = j.at(0);
    if (!first.is_array()) throw structural_error(fmt::format("{} rows must be arrays", what));
    const int cols = static_cast<int>(first.size());
    IntMat m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        const json& row = j.at(static_cast<size_t>(r));
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw structural_error(fmt::format("{} rows must all have length {}", what, cols));
        for (int c = 0; c < cols; ++c) m(r, c) = int_from_json(row.at(static_cast<size_t>(c)));
    }
    return m;
}

json int_matrix_to_json(const IntMat& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows; ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols; ++c) row.push_back(int_to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

json int_to_json(const Int& z) {
    if (z.fits_slong_p()) return json(z.get_si());
    return json(z.get_str());
}

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<long>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::invalid_argument&) {
            throw structural_error(fmt::format("not a decimal integer string: \"{}\"", j.get<std::string>()));
        }
    }
    throw structural_error("expected an integer (number or decimal string)");
}

json ring_to_json(const ZPlusRing& R) {
    json j;
    j["rank"] = R.rank;
    j["labels"] = R.labels;
    j["unit_set"] = R.unit_set;
    json c = json::array();
    for (int i = 0; i < R.rank; ++i) {
        json plane = json::array();
        for (int k = 0; k < R.rank; ++k) {
            json row = json::array();
            for (int t = 0; t < R.rank; ++t) row.push_back(int_to_json(R.cc(i, k, t)));
            plane.push_back(std::move(row));
        }
        c.push_back(std::move(plane));
    }
    j["structure_constants"] = std::move(c);
    if (R.involution)
        j["involution"] = *R.involution;
    else
        j["involution"] = nullptr;
    return j;
}

ZPlusRing ring_from_json(const json& j) {
    ZPlusRing R;
    R.rank = int_field(j, "rank");
    const json& labels = field(j, "labels");
    if (!labels.is_array()) throw structural_error("field \"labels\" must be an array");
    for (const auto& l : labels) R.labels.push_back(l.get<std::string>());
    const json& unit = field(j, "unit_set");
    if (!unit.is_array()) throw structural_error("field \"unit_set\" must be an array");
    for (const auto& u : unit) R.unit_set.push_back(u.get<int>());
    const json& c = field(j, "structure_constants");
    if (!c.is_array()) throw structural_error("field \"structure_constants\" must be an array");
    for (const auto& plane : c) {
        std::vector<std::vector<Int>> p;
        if (!plane.is_array()) throw structural_error("structure constant planes must be arrays");
        for (const auto& row : plane) {
            std::vector<Int> r;
            if (!row.is_array()) throw structural_error("structure constant rows must be arrays");
            for (const auto& v : row) r.push_back(int_from_json(v));
            p.push_back(std::move(r));
        }
        R.c.push_back(std::move(p));
    }
    const json& inv = field(j, "involution");
    if (!inv.is_null()) {
        if (!inv.is_array()) throw structural_error("field \"involution\" must be an array or null");
        std::vector<int> perm;
        for (const auto& v : inv) perm.push_back(v.get<int>());
        R.involution = std::move(perm);
    }
    R.check_shape();
    return R;
}

ZPlusRing resolve_ring(const json& ref) {
    if (ref.is_object()) return ring_from_json(ref);
    if (ref.is_string()) {
        const std::string s = ref.get<std::string>();
        if (s.rfind("sl2:", 0) == 0) {
            int l = 0;
            try {
                l = std::stoi(s.substr(4));
            } catch (const std::exception&) {
                throw structural_error(fmt::format("malformed ring reference \"{}\"", s));
            }
            return sl2_fusion_ring(l);
        }
        throw structural_error(fmt::format("unresolvable ring reference \"{}\"", s));
    }
    throw structural_error("field \"ring\" must be an object or a reference string");
}

json module_to_json(const ZPlusModule& M, const json& ring_ref) {
    json j;
    j["ring"] = ring_ref.is_null() ? ring_to_json(M.ring) : ring_ref;
    j["module_rank"] = M.module_rank;
    json action = json::array();
    for (const IntMat& m : M.action) action.push_back(int_matrix_to_json(m));
    j["action"] = std::move(action);
    j["based"] = M.based_flag;
    return j;
}

ZPlusModule module_from_json(const json& j, const RingResolver& resolver) {
    ZPlusModule M;
    M.ring = resolver(field(j, "ring"));
    M.module_rank = int_field(j, "module_rank");
    const json& action = field(j, "action");
    if (!action.is_array()) throw structural_error("field \"action\" must be an array of matrices");
    for (const auto& m : action) {
        if (M.module_rank == 0) {
            if (!m.is_array() || !m.empty()) throw structural_error("rank-0 module matrices must be empty arrays");
            M.action.push_back(IntMat(0, 0));
        } else {
            M.action.push_back(int_matrix_from_json(m, "action matrix"));
        }
    }
    const json& based = field(j, "based");
    if (!based.is_boolean()) throw structural_error("field \"based\" must be a boolean");
    M.based_flag = based.get<bool>();
    M.check_shape();
    return M;
}

json graph_to_json(const LoopyGraph& g) {
    json j;
    j["size"] = g.size;
    j["adjacency"] = int_matrix_to_json(g.adjacency);
    return j;
}

LoopyGraph graph_from_json(const json& j) {
    LoopyGraph g;
    g.size = int_field(j, "size");
    g.adjacency = int_matrix_from_json(field(j, "adjacency"), "adjacency");
    g.check_shape();
    return g;
}

json invariant_to_json(const ModularInvariant& inv) {
    json j;
    j["level"] = inv.l;
    j["Z"] = int_matrix_to_json(inv.Z);
    return j;
}

ModularInvariant invariant_from_json(const json& j) {
    ModularInvariant inv;
    inv.l = int_field(j, "level");
    inv.Z = int_matrix_from_json(field(j, "Z"), "Z");
    if (inv.l < 1 || inv.Z.rows != inv.l + 1 || inv.Z.cols != inv.l + 1)
        throw structural_error("invariant matrix size must be level + 1");
    return inv;
}

json group_to_json(const SmallGroup& G) {
    json j;
    j["order"] = G.order;
    j["table"] = G.table;
    j["labels"] = G.labels;
    return j;
}

SmallGroup group_from_json(const json& j) {
    SmallGroup G;
    G.order = int_field(j, "order");
    const json& table = field(j, "table");
    if (!table.is_array()) throw structural_error("field \"table\" must be an array");
    for (const auto& row : table) {
        std::vector<int> r;
        for (const auto& v : row) r.push_back(v.get<int>());
        G.table.push_back(std::move(r));
    }
    const json& labels = field(j, "labels");
    if (!labels.is_null()) {
        if (!labels.is_array()) throw structural_error("field \"labels\" must be an array");
        for (const auto& l : labels) G.labels.push_back(l.get<std::string>());
    }
    G.check_shape();
    return G;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw structural_error(fmt::format("cannot open {}", path));
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw structural_error(fmt::format("{}: {}", path, e.what()));
    }
}

} // namespace fusion
