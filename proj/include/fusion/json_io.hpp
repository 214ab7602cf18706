#pragma once

#include <json.hpp>

#include <functional>
#include <string>

#include "fusion/based_module.hpp"
#include "fusion/based_ring.hpp"
#include "fusion/dynkin.hpp"
#include "fusion/modular_invariants.hpp"
#include "fusion/small_groups.hpp"

namespace fusion {

// Arbitrary-precision integers travel as JSON numbers when they fit in a
// machine long and as decimal strings otherwise; readers accept both.
nlohmann::json int_to_json(const Int& z);
Int int_from_json(const nlohmann::json& j);

nlohmann::json ring_to_json(const ZPlusRing& R);
ZPlusRing ring_from_json(const nlohmann::json& j);

// Interprets the "ring" field of a module document.  The library resolver
// accepts an inline ring object or the string "sl2:<level>"; the CLI wraps it
// to also treat strings as file paths.
using RingResolver = std::function<ZPlusRing(const nlohmann::json&)>;
ZPlusRing resolve_ring(const nlohmann::json& ref);

// ring_ref is embedded verbatim as the "ring" field; pass a null json to
// embed the module's ring inline.
nlohmann::json module_to_json(const ZPlusModule& M, const nlohmann::json& ring_ref = nullptr);
ZPlusModule module_from_json(const nlohmann::json& j, const RingResolver& resolver = resolve_ring);

nlohmann::json graph_to_json(const LoopyGraph& g);
LoopyGraph graph_from_json(const nlohmann::json& j);

nlohmann::json invariant_to_json(const ModularInvariant& inv);
ModularInvariant invariant_from_json(const nlohmann::json& j);

nlohmann::json group_to_json(const SmallGroup& G);
SmallGroup group_from_json(const nlohmann::json& j);

// Parses a file, converting I/O and syntax problems to structural_error
// with the path in the message.
nlohmann::json load_json_file(const std::string& path);

} // namespace fusion
