#pragma once

// JSON forms of the module reports. Keys are emitted sorted, so a payload is
// byte-identical for identical inputs.

#include <cstdint>
#include <string>
#include <vector>

#include "dmod/curves.hpp"
#include "dmod/dynsys.hpp"
#include "dmod/groebner.hpp"
#include "dmod/inertia.hpp"
#include "json.hpp"

namespace dmod {

using Json = nlohmann::json;

/// A count, or the string "infinite".
Json dimension_json(const Dimension& d);

/// A number when it fits in 64 bits, otherwise its decimal string.
Json bigint_json(const BigInt& v);

Json milnor_report_json(const MilnorReport& r, const std::vector<std::string>& vars);
Json groebner_json(const GroebnerBasis& g, const std::vector<std::string>& vars);
Json inertia_report_json(const InertiaReport& r, const QuotientModule& module, const std::vector<std::string>& vars);
/// Cycles as coordinate lists; tail lengths per state only when full is set.
Json orbit_json(const OrbitDecomposition& d, std::uint64_t p, std::size_t n, bool full);
Json collatz_json(const CollatzRecord& r, bool trace);
Json slice_report_json(const SliceCountReport& r);

/// {"version", "cmd", "config", "payload"} plus "timestamp" when requested.
Json envelope(const std::string& cmd, const Json& config, const Json& payload, bool with_timestamp = true);

}  // namespace dmod
