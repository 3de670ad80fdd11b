#include "dmod/report.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <limits>

#include "dmod/version.hpp"

namespace dmod {

Json dimension_json(const Dimension& d) { return d ? Json(*d) : Json("infinite"); }

Json bigint_json(const BigInt& v) {
    if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) return v.convert_to<std::uint64_t>();
    return v.str();
}

Json milnor_report_json(const MilnorReport& r, const std::vector<std::string>& vars) {
    return {
        {"f", r.f.to_string(vars)},
        {"vars", vars},
        {"p", r.p},
        {"total", dimension_json(r.char_p)},
        {"char_p", dimension_json(r.char_p)},
        {"char_0", dimension_json(r.char_0)},
        {"tame", dimension_json(r.tame)},
        {"wild", r.wild ? Json(*r.wild) : Json("infinite")},
        {"truncation_p", r.truncation_p},
        {"truncation_0", r.truncation_0},
        {"anomalies", r.anomalies},
    };
}

Json groebner_json(const GroebnerBasis& g, const std::vector<std::string>& vars) {
    Json basis = Json::array();
    for (const auto& b : g.generators) basis.push_back(b.to_string(vars));
    Json out{
        {"basis", basis},
        {"order", g.order.name()},
        {"domain", g.domain.name()},
        {"vars", vars},
        {"quotient_dimension", dimension_json(quotient_dimension(g))},
    };
    if (const auto monos = standard_monomials(g); monos && monos->size() <= 1000) {
        Json list = Json::array();
        for (const auto& e : *monos)
            list.push_back(MPoly::monomial(e, FieldElem::one(g.domain)).to_string(vars));
        out["standard_monomials"] = list;
    }
    return out;
}

Json inertia_report_json(const InertiaReport& r, const QuotientModule& module, const std::vector<std::string>& vars) {
    Json per_k = Json::array();
    for (const auto& level : r.per_k) {
        Json entry{
            {"k", level.k},
            {"kernel_dimension", level.kernel_dimension},
            {"kernel_equals_constants", level.kernel_equals_constants},
        };
        if (level.element) {
            entry["element_value"] = level.element->value.to_string(vars);
            entry["element_annihilated"] = level.element->annihilated;
        }
        per_k.push_back(entry);
    }
    return {
        {"operator", r.op.to_string(vars)},
        {"level", r.level},
        {"direction", vars.at(r.direction)},
        {"module", {{"p", module.domain().characteristic()},
                    {"nvars", module.nvars()},
                    {"truncation", module.truncation()},
                    {"dimension", module.dimension()}}},
        {"per_k", per_k},
        {"member", r.member},
        {"semantics", "kernel-equals-constants"},
    };
}

Json orbit_json(const OrbitDecomposition& d, std::uint64_t p, std::size_t n, bool full) {
    Json cycles = Json::array();
    for (const auto& c : d.cycles) {
        Json states = Json::array();
        for (auto s : c) states.push_back(decode_state(s, p, n));
        cycles.push_back(states);
    }
    const auto max_tail =
        d.tail_lengths.empty() ? std::uint32_t{0} : *std::max_element(d.tail_lengths.begin(), d.tail_lengths.end());
    Json out{
        {"state_count", d.tail_lengths.size()},
        {"periodic_count", d.periodic_count},
        {"cycle_count", d.cycles.size()},
        {"tail_states", d.tail_state_count()},
        {"max_tail", max_tail},
        {"cycles", cycles},
    };
    if (full) out["tail_lengths"] = d.tail_lengths;
    return out;
}

Json collatz_json(const CollatzRecord& r, bool trace) {
    Json cycle = Json::array();
    for (const auto& v : r.cycle) cycle.push_back(bigint_json(v));
    BigInt peak = r.start;
    for (const auto& v : r.trajectory) peak = std::max(peak, v);
    Json out{
        {"start", bigint_json(r.start)},
        {"variant", std::string(to_string(r.variant))},
        {"budget", r.budget},
        {"budget_exhausted", r.budget_exhausted},
        {"steps_to_cycle", r.steps_to_cycle ? Json(*r.steps_to_cycle) : Json(nullptr)},
        {"cycle", cycle},
        {"cycle_verified", r.cycle_verified},
        {"trajectory_length", r.trajectory.size()},
        {"max_value", bigint_json(peak)},
    };
    if (trace) {
        Json t = Json::array();
        for (const auto& v : r.trajectory) t.push_back(bigint_json(v));
        out["trajectory"] = t;
    }
    return out;
}

Json slice_report_json(const SliceCountReport& r) {
    return {
        {"p", r.curve.p},
        {"a", r.curve.a},
        {"b", r.curve.b},
        {"equation", "y^2 + a*x^3 + b*x = 0"},
        {"slice_range", "i = 0..p-1"},
        {"l", r.l},
        {"l_with_multiplicity", r.l_with_multiplicity},
        {"slice_sum_plus_one", r.slice_sum_plus_one},
        {"naive_count", r.naive_count},
        {"identity_holds", r.identity_holds},
        {"singular", r.singular},
        {"hasse_ok", r.hasse_ok ? Json(*r.hasse_ok) : Json(nullptr)},
        {"hasse_bound", hasse_bound(r.curve.p)},
    };
}

Json envelope(const std::string& cmd, const Json& config, const Json& payload, bool with_timestamp) {
    Json out{{"version", tool_version}, {"cmd", cmd}, {"config", config}, {"payload", payload}};
    if (with_timestamp) {
        const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
        std::tm utc{};
        gmtime_r(&now, &utc);
        char buf[32];
        std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
        out["timestamp"] = buf;
    }
    return out;
}

}  // namespace dmod
