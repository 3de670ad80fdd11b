#include "dmod/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "dmod/error.hpp"
#include "dmod/version.hpp"
#include "dmod/weyl.hpp"

namespace dmod::cli {

std::vector<std::string> infer_vars(const std::vector<std::string>& explicit_vars,
                                    const std::vector<std::string>& poly_texts,
                                    const std::vector<std::string>& operator_texts) {
    if (!explicit_vars.empty()) return explicit_vars;
    std::vector<std::string> vars;
    auto add = [&](const std::string& name) {
        if (std::find(vars.begin(), vars.end(), name) == vars.end()) vars.push_back(name);
    };
    for (const auto& t : poly_texts)
        for (const auto& name : collect_identifiers(t)) add(name);
    std::vector<std::string> maybe_derivative;
    for (const auto& t : operator_texts)
        for (const auto& name : collect_identifiers(t)) {
            if (name.size() > 1 && name[0] == 'd')
                maybe_derivative.push_back(name);
            else
                add(name);
        }
    std::sort(vars.begin(), vars.end(), natural_less);
    for (const auto& name : maybe_derivative)
        if (!derivative_index(name, vars)) add(name);
    std::sort(vars.begin(), vars.end(), natural_less);
    return vars;
}

namespace {

struct Common {
    std::string format = "json";
    std::uint64_t seed = 0;
    std::uint64_t budget = default_state_budget;
};

void add_common(CLI::App* sub, Common& common, bool with_budget) {
    sub->add_option("--format", common.format, "Output mode")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    sub->add_option("--seed", common.seed, "Random seed (recorded in every report)")->capture_default_str();
    if (with_budget)
        sub->add_option("--budget", common.budget, "State budget for exhaustive enumeration")
            ->envname("DMOD_STATE_BUDGET")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
}

Json common_config(const Common& c, bool with_budget) {
    Json j{{"format", c.format}, {"seed", c.seed}};
    if (with_budget) j["budget"] = c.budget;
    return j;
}

Domain domain_from(const std::optional<std::uint64_t>& p) {
    return (!p || *p == 0) ? Domain::rationals() : Domain::prime(*p);
}

// Re-raises errors from parsing a flag value with the flag name attached.
template <class F>
auto for_flag(const std::string& flag, F&& parse) -> decltype(parse()) {
    try {
        return parse();
    } catch (const ParseError& e) {
        throw ParseError(e.position(), flag + ": " + e.detail());
    } catch (const Error& e) {
        throw Error(e.code(), flag + ": " + e.what());
    }
}

std::vector<std::string> split_list(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    return out;
}

// ---- text rendering --------------------------------------------------------

std::string scalar_text(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

void flatten(const std::string& prefix, const Json& v, std::vector<std::pair<std::string, std::string>>& rows) {
    if (v.is_object()) {
        for (const auto& [k, sub] : v.items()) flatten(prefix.empty() ? k : prefix + "." + k, sub, rows);
        return;
    }
    if (v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_primitive(); })) {
        std::string joined;
        for (const auto& e : v) joined += (joined.empty() ? "" : ", ") + scalar_text(e);
        rows.emplace_back(prefix, joined);
        return;
    }
    if (v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_object(); })) {
        for (std::size_t i = 0; i < v.size(); ++i) flatten(prefix + "[" + std::to_string(i) + "]", v[i], rows);
        return;
    }
    rows.emplace_back(prefix, v.is_primitive() ? scalar_text(v) : v.dump());
}

}  // namespace

std::string render_text(const Json& payload) {
    std::vector<std::pair<std::string, std::string>> rows;
    flatten("", payload, rows);
    std::size_t width = 0;
    for (const auto& [k, v] : rows) width = std::max(width, k.size());
    std::ostringstream out;
    for (const auto& [k, v] : rows) out << std::left << std::setw(static_cast<int>(width) + 2) << k << v << '\n';
    return out.str();
}

Json curve_sweep_summary(const std::vector<SliceCountReport>& reports) {
    struct Tally {
        std::uint64_t cases = 0, identity_ok = 0, nonsingular = 0, hasse_ok = 0;
    };
    std::map<std::uint64_t, Tally> by_prime;
    Tally total;
    for (const auto& r : reports) {
        for (Tally* t : {&by_prime[r.curve.p], &total}) {
            ++t->cases;
            t->identity_ok += r.identity_holds ? 1 : 0;
            t->nonsingular += r.singular ? 0 : 1;
            t->hasse_ok += (r.hasse_ok && *r.hasse_ok) ? 1 : 0;
        }
    }
    Json per_prime = Json::array();
    for (const auto& [p, t] : by_prime)
        per_prime.push_back(
            {{"p", p}, {"cases", t.cases}, {"identity_ok", t.identity_ok}, {"nonsingular", t.nonsingular}, {"hasse_ok", t.hasse_ok}});
    return {
        {"cases", total.cases},
        {"identity_failures", total.cases - total.identity_ok},
        {"nonsingular", total.nonsingular},
        {"hasse_failures", total.nonsingular - total.hasse_ok},
        {"per_prime", per_prime},
    };
}

Json theorem1_probe(const MPoly& f, const std::vector<std::string>& vars, std::uint64_t p, std::int64_t h,
                    std::uint64_t budget, unsigned n_max) {
    if (p == 2) throw Error(ErrorCode::refuse_char2, "the correspondence is only stated away from characteristic 2");
    if (!f.domain().is_rational()) throw Error(ErrorCode::domain_mismatch, "probe expects f over Q");
    const Domain fp = Domain::prime(p);
    const MPoly r_of_f = f * f;  // r(s) = s^2 on the one-dimensional base
    const MPoly f_p = f.in_domain(fp);
    const auto grad = gradient_system(f_p);
    const auto euler = euler_discretize(grad, FieldElem(fp, h));
    const auto orbits = orbit_decomposition(euler, budget);

    Json locus = Json::array();
    for (const auto& pt : critical_locus(f_p, budget)) locus.push_back(pt);

    return {
        {"label", "EXPLORATORY: side-by-side data only; no equality is asserted"},
        {"f", f.to_string(vars)},
        {"vars", vars},
        {"p", p},
        {"h", h},
        {"degenerate", f.is_zero()},
        {"r_of_f", r_of_f.to_string(vars)},
        {"milnor_r_of_f_Q", dimension_json(milnor_number(r_of_f, n_max))},
        {"milnor_r_of_f_p", dimension_json(milnor_number(r_of_f.in_domain(fp), n_max))},
        {"milnor_f_Q", dimension_json(milnor_number(f, n_max))},
        {"milnor_f_p", dimension_json(milnor_number(f_p, n_max))},
        {"gradient_periodic_count", orbits.periodic_count},
        {"gradient_cycle_count", orbits.cycles.size()},
        {"state_count", orbits.tail_lengths.size()},
        {"critical_locus", locus},
    };
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Weyl-algebra, Milnor-number, orbit and point-count toolkit", "dmod"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1, 1);
    app.set_config("--config", "", "Read flags from a key=value file; command-line flags win");
    app.set_version_flag("--version", tool_version);

    Common common;
    std::function<Json()> action;
    std::function<Json()> config;
    std::function<void(const Json&)> emit;  // overrides the single-envelope output

    // ---- milnor ----
    struct {
        std::string f;
        std::uint64_t p = 0;
        std::vector<std::string> vars;
        unsigned nmax = default_truncation_limit;
    } mil;
    auto* milnor = app.add_subcommand("milnor", "Milnor numbers over F_p and Q with the tame/wild split");
    milnor->add_option("--f", mil.f, "Polynomial with integer coefficients, e.g. \"y^3+x^2+x^3\"")->required();
    milnor->add_option("--p", mil.p, "Residue characteristic (prime)")->required();
    milnor->add_option("--vars", mil.vars, "Variable order, comma separated")->delimiter(',');
    milnor->add_option("--nmax", mil.nmax, "Largest m^N truncation tried")->capture_default_str();
    add_common(milnor, common, false);
    milnor->callback([&] {
        config = [&] {
            Json c = common_config(common, false);
            c.update({{"f", mil.f}, {"p", mil.p}, {"vars", mil.vars}, {"nmax", mil.nmax}});
            return c;
        };
        action = [&] {
            const auto vars = infer_vars(mil.vars, {mil.f});
            const MPoly f = for_flag("--f", [&] { return poly_parse(mil.f, vars, Domain::rationals()); });
            Json payload = milnor_report_json(tame_wild_split(f, mil.p, mil.nmax), vars);
            const auto jac_p = jacobian_generators(f.in_domain(Domain::prime(mil.p)));
            const auto jac_0 = jacobian_generators(f);
            auto global = [](const std::vector<MPoly>& gens) -> Dimension {
                std::vector<MPoly> nz;
                for (const auto& g : gens)
                    if (!g.is_zero()) nz.push_back(g);
                if (nz.empty()) return std::nullopt;
                return quotient_dimension(buchberger(nz));
            };
            payload["global_dimension_p"] = dimension_json(global(jac_p));
            payload["global_dimension_0"] = dimension_json(global(jac_0));
            return payload;
        };
    });

    // ---- groebner ----
    struct {
        std::string gens;
        std::string order = "grevlex";
        std::optional<std::uint64_t> p;
        std::vector<std::string> vars;
        std::string reduce;
    } gb;
    auto* groebner = app.add_subcommand("groebner", "Reduced Groebner basis and quotient dimension");
    groebner->add_option("--gens", gb.gens, "Generators separated by ';', e.g. \"x^2-y;y^2\"")->required();
    groebner->add_option("--order", gb.order, "Monomial order")
        ->check(CLI::IsMember({"grevlex", "lex"}))
        ->capture_default_str();
    groebner->add_option("--p", gb.p, "Prime characteristic (omit or 0 for Q)");
    groebner->add_option("--vars", gb.vars, "Variable order = priority, comma separated")->delimiter(',');
    groebner->add_option("--reduce", gb.reduce, "Polynomial to reduce modulo the basis");
    add_common(groebner, common, false);
    groebner->callback([&] {
        config = [&] {
            Json c = common_config(common, false);
            c.update({{"gens", gb.gens}, {"order", gb.order}, {"p", gb.p ? Json(*gb.p) : Json(0)}, {"vars", gb.vars},
                      {"reduce", gb.reduce}});
            return c;
        };
        action = [&] {
            const Domain d = for_flag("--p", [&] { return domain_from(gb.p); });
            const auto vars = infer_vars(gb.vars, {gb.gens, gb.reduce});
            const auto gens = for_flag("--gens", [&] { return poly_parse_list(gb.gens, vars, d); });
            const auto basis = buchberger(gens, MonomialOrder::from_name(gb.order));
            Json payload = groebner_json(basis, vars);
            payload["s_pairs_reduce_to_zero"] = s_pairs_reduce_to_zero(basis);
            if (!gb.reduce.empty()) {
                const MPoly f = for_flag("--reduce", [&] { return poly_parse(gb.reduce, vars, d); });
                payload["normal_form"] = normal_form(f, basis).to_string(vars);
            }
            return payload;
        };
    });

    // ---- inertia ----
    struct {
        std::uint64_t p = 0;
        std::string module;
        std::string op;
        unsigned level = 0;
        std::string element;
        std::vector<std::string> vars;
        std::string direction;
    } in;
    auto* inertia = app.add_subcommand("inertia", "Differential-inertia membership on a truncated module");
    inertia->add_option("--p", in.p, "Prime characteristic")->required();
    inertia->add_option("--module", in.module, "\"x^m\" for F_p[x]/(x^m), or \"m^N\" to drop degree >= N")->required();
    inertia->add_option("--op", in.op, "Operator without zero-order term, e.g. \"d1\" or \"x*dx^2\"")->required();
    inertia->add_option("--level", in.level, "Level i (k runs over 0..i)")->required();
    inertia->add_option("--element", in.element, "Witness element checked for annihilation at every k");
    inertia->add_option("--vars", in.vars, "Variable order, comma separated")->delimiter(',');
    inertia->add_option("--direction", in.direction, "Variable of the d^k factor (default: first)");
    add_common(inertia, common, false);
    inertia->callback([&] {
        config = [&] {
            Json c = common_config(common, false);
            c.update({{"p", in.p}, {"module", in.module}, {"op", in.op}, {"level", in.level}, {"element", in.element},
                      {"vars", in.vars}, {"direction", in.direction}});
            return c;
        };
        action = [&] {
            const auto terms = for_flag("--module", [&] { return parse_terms(in.module); });
            if (terms.size() != 1 || !terms[0].coefficient.empty() || terms[0].negative || terms[0].factors.size() != 1)
                throw Error(ErrorCode::invalid_argument, "--module: expected \"x^m\" or \"m^N\"");
            const RawFactor& mod = terms[0].factors[0];
            std::vector<std::string> vars;
            if (mod.name == "m") {
                vars = infer_vars(in.vars, {in.element}, {in.op});
                if (vars.empty()) vars = {"x"};
            } else {
                vars = in.vars.empty() ? std::vector<std::string>{mod.name} : in.vars;
                if (vars.size() != 1 || vars[0] != mod.name)
                    throw Error(ErrorCode::invalid_argument, "--module: \"x^m\" form needs the single variable x");
            }
            const QuotientModule module(in.p, vars.size(), mod.power);
            const auto d = module.domain();
            const auto op = for_flag("--op", [&] { return operator_parse(in.op, vars, d); });
            std::optional<MPoly> element;
            if (!in.element.empty()) element = for_flag("--element", [&] { return poly_parse(in.element, vars, d); });
            std::size_t direction = 0;
            if (!in.direction.empty()) {
                const auto it = std::find(vars.begin(), vars.end(), in.direction);
                if (it == vars.end()) throw Error(ErrorCode::unknown_variable, "--direction: '" + in.direction + "'");
                direction = static_cast<std::size_t>(it - vars.begin());
            }
            const auto report = inertia_membership(op, in.level, module, element, direction);
            Json payload = inertia_report_json(report, module, vars);
            if (element) payload["element"] = element->to_string(vars);
            return payload;
        };
    });

    // ---- weyl-apply ----
    struct {
        std::string op;
        std::string f;
        std::string compose;
        std::string stable;
        std::optional<std::uint64_t> p;
        std::vector<std::string> vars;
    } wa;
    auto* weyl = app.add_subcommand("weyl-apply", "Normal form, application and composition of Weyl operators");
    weyl->add_option("--op", wa.op, "Operator, e.g. \"d1^3\" or \"x^2*dx^2 + dy\"")->required();
    weyl->add_option("--f", wa.f, "Polynomial to apply the operator to");
    weyl->add_option("--compose", wa.compose, "Right factor Q; reports the normal form of op o Q");
    weyl->add_option("--stable", wa.stable, "Ideal generators separated by ';' to test for d-stability");
    weyl->add_option("--p", wa.p, "Prime characteristic (omit or 0 for Q)");
    weyl->add_option("--vars", wa.vars, "Variable order, comma separated")->delimiter(',');
    add_common(weyl, common, false);
    weyl->callback([&] {
        config = [&] {
            Json c = common_config(common, false);
            c.update({{"op", wa.op}, {"f", wa.f}, {"compose", wa.compose}, {"stable", wa.stable},
                      {"p", wa.p ? Json(*wa.p) : Json(0)}, {"vars", wa.vars}});
            return c;
        };
        action = [&] {
            const Domain d = for_flag("--p", [&] { return domain_from(wa.p); });
            auto vars = infer_vars(wa.vars, {wa.f, wa.stable}, {wa.op, wa.compose});
            if (vars.empty()) vars = {"x"};
            const auto op = for_flag("--op", [&] { return operator_parse(wa.op, vars, d); });
            Json payload{{"domain", d.name()}, {"vars", vars}, {"op", op.to_string(vars)}, {"op_json", op.to_json(vars)}};
            if (!wa.f.empty()) {
                const MPoly f = for_flag("--f", [&] { return poly_parse(wa.f, vars, d); });
                payload["f"] = f.to_string(vars);
                payload["applied"] = op.apply(f).to_string(vars);
            }
            if (!wa.compose.empty()) {
                const auto q = for_flag("--compose", [&] { return operator_parse(wa.compose, vars, d); });
                payload["composed"] = op.compose(q).to_string(vars);
            }
            if (!wa.stable.empty()) {
                const auto gens = for_flag("--stable", [&] { return poly_parse_list(wa.stable, vars, d); });
                const auto rep = is_d_stable(gens);
                Json s{{"stable", rep.stable}};
                if (rep.witness)
                    s["witness"] = {{"generator", rep.witness->generator},
                                    {"variable", vars[rep.witness->variable]},
                                    {"residue", rep.witness->residue.to_string(vars)}};
                payload["d_stable"] = s;
            }
            return payload;
        };
    });

    // ---- orbits ----
    struct {
        std::uint64_t p = 0;
        std::string system;
        std::int64_t h = 1;
        std::string mode = "vector-field";
        std::vector<std::string> vars;
        bool full = false;
    } orb;
    auto* orbits = app.add_subcommand("orbits", "Closed orbits of a polynomial system over (Z/pZ)^n");
    orbits->add_option("--p", orb.p, "Prime modulus")->required();
    orbits->add_option("--system", orb.system, "Components separated by ';', e.g. \"y^2+x^3+x; y-3\"")->required();
    orbits->add_option("--h", orb.h, "Euler step for vector fields")->capture_default_str();
    orbits->add_option("--mode", orb.mode, "Interpretation of the components")
        ->check(CLI::IsMember({"vector-field", "self-map"}))
        ->capture_default_str();
    orbits->add_option("--vars", orb.vars, "Variable order, comma separated")->delimiter(',');
    orbits->add_flag("--full", orb.full, "Include the tail length of every state");
    add_common(orbits, common, true);
    orbits->callback([&] {
        config = [&] {
            Json c = common_config(common, true);
            c.update({{"p", orb.p}, {"system", orb.system}, {"h", orb.h}, {"mode", orb.mode}, {"vars", orb.vars},
                      {"full", orb.full}});
            return c;
        };
        action = [&] {
            const Domain d = for_flag("--p", [&] { return Domain::prime(orb.p); });
            const auto pieces = split_list(orb.system, ';');
            auto vars = infer_vars(orb.vars, {orb.system});
            if (vars.empty() && pieces.size() == 1) vars = {"x"};
            if (vars.size() != pieces.size())
                throw Error(ErrorCode::invalid_argument, "--system has " + std::to_string(pieces.size()) +
                                                             " components but " + std::to_string(vars.size()) +
                                                             " variables; pass --vars");
            auto comps = for_flag("--system", [&] { return poly_parse_list(orb.system, vars, d); });
            const auto mode = orb.mode == "self-map" ? SystemMode::self_map : SystemMode::vector_field;
            DynamicalSystem sys(std::move(comps), mode);
            const DynamicalSystem map = mode == SystemMode::vector_field ? euler_discretize(sys, FieldElem(d, orb.h)) : sys;
            Json payload = orbit_json(orbit_decomposition(map, common.budget), orb.p, vars.size(), orb.full);
            Json map_text = Json::array();
            for (const auto& g : map.components()) map_text.push_back(g.to_string(vars));
            payload.update({{"p", orb.p}, {"vars", vars}, {"mode", orb.mode}, {"h", orb.h}, {"map", map_text}});
            return payload;
        };
    });

    // ---- collatz ----
    struct {
        std::string start;
        std::string variant = "paper";
        std::uint64_t budget = 10000;
        bool trace = false;
    } col;
    auto* collatz = app.add_subcommand("collatz", "Collatz orbit with cycle detection");
    collatz->add_option("--start", col.start, "Nonnegative starting integer (any size)")->required();
    collatz->add_option("--variant", col.variant, "paper: x/2, 3x+1; accelerated: x/2, (3x+1)/2")
        ->check(CLI::IsMember({"paper", "accelerated"}))
        ->capture_default_str();
    collatz->add_option("--budget", col.budget, "Maximum number of steps")->capture_default_str();
    collatz->add_flag("--trace", col.trace, "Include the trajectory");
    add_common(collatz, common, false);
    collatz->callback([&] {
        config = [&] {
            Json c = common_config(common, false);
            c.update({{"start", col.start}, {"variant", col.variant}, {"budget", col.budget}, {"trace", col.trace}});
            return c;
        };
        action = [&] {
            const BigInt start = for_flag("--start", [&] {
                if (col.start.empty() || !std::all_of(col.start.begin(), col.start.end(), [](unsigned char c) { return std::isdigit(c); }))
                    throw ParseError(0, "expected a nonnegative integer");
                return BigInt(col.start);
            });
            return collatz_json(collatz_orbit(start, collatz_variant_from_name(col.variant), col.budget), col.trace);
        };
    });

    // ---- collatz-bijection ----
    unsigned bij_k = 0;
    auto* bijection = app.add_subcommand("collatz-bijection", "Parity-vector bijection on residues mod 2^k");
    bijection->add_option("--k", bij_k, "Precision k (at most 16)")->required()->check(CLI::Range(0, 16));
    add_common(bijection, common, false);
    bijection->callback([&] {
        config = [&] {
            Json c = common_config(common, false);
            c["k"] = bij_k;
            return c;
        };
        action = [&] {
            bool prefixes = true;
            for (unsigned j = 0; j < bij_k; ++j) prefixes = prefixes && parity_bijection_check(j);
            return Json{{"k", bij_k},
                        {"residues", std::uint64_t{1} << bij_k},
                        {"bijective", parity_bijection_check(bij_k)},
                        {"all_smaller_k_bijective", prefixes}};
        };
    });

    // ---- curve-count ----
    struct {
        std::uint64_t p = 0;
        std::int64_t a = 0;
        std::int64_t b = 0;
    } cc;
    auto* curve_count = app.add_subcommand("curve-count", "Slice counts and point count of y^2 + a x^3 + b x = 0");
    curve_count->add_option("--p", cc.p, "Prime")->required();
    curve_count->add_option("--a", cc.a, "Coefficient a (nonzero mod p)")->required();
    curve_count->add_option("--b", cc.b, "Coefficient b")->required();
    add_common(curve_count, common, false);
    curve_count->callback([&] {
        config = [&] {
            Json c = common_config(common, false);
            c.update({{"p", cc.p}, {"a", cc.a}, {"b", cc.b}});
            return c;
        };
        action = [&] { return slice_report_json(verify_identity(CurveSpec::make(cc.p, cc.a, cc.b))); };
    });

    // ---- curve-sweep ----
    struct {
        std::uint64_t pmax = 101;
        unsigned samples = 20;
        std::string jsonl;
    } sw;
    auto* sweep = app.add_subcommand("curve-sweep", "Slice identity and Hasse check over seeded random curves");
    sweep->add_option("--pmax", sw.pmax, "Largest prime")->capture_default_str();
    sweep->add_option("--samples", sw.samples, "Curves per prime")->capture_default_str();
    sweep->add_option("--jsonl", sw.jsonl, "Write one envelope per case to this file");
    add_common(sweep, common, false);
    sweep->callback([&] {
        config = [&] {
            Json c = common_config(common, false);
            c.update({{"pmax", sw.pmax}, {"samples", sw.samples}, {"jsonl", sw.jsonl}});
            return c;
        };
        action = [&] {
            std::vector<SliceCountReport> reports;
            for (const auto& c : sample_curves(sw.pmax, sw.samples, common.seed)) reports.push_back(verify_identity(c));
            Json payload = curve_sweep_summary(reports);
            payload.update({{"pmax", sw.pmax}, {"samples", sw.samples}, {"seed", common.seed}});
            Json cases = Json::array();
            for (const auto& r : reports) cases.push_back(slice_report_json(r));
            return Json{{"summary", payload}, {"cases", cases}};
        };
        emit = [&](const Json& result) {
            const Json cfg = config();
            std::ofstream file;
            if (!sw.jsonl.empty()) {
                file.open(sw.jsonl);
                if (!file) throw Error(ErrorCode::invalid_argument, "--jsonl: cannot open '" + sw.jsonl + "'");
            }
            const bool jsonl_to_stdout = sw.jsonl.empty() && common.format == "json";
            for (const auto& c : result["cases"]) {
                const std::string line = envelope("curve-sweep", cfg, c).dump();
                if (file.is_open()) file << line << '\n';
                if (jsonl_to_stdout) out << line << '\n';
            }
            if (common.format == "json") {
                out << envelope("curve-sweep", cfg, result["summary"]).dump() << '\n';
                return;
            }
            const Json& s = result["summary"];
            out << std::right << std::setw(5) << "p" << std::setw(8) << "cases" << std::setw(12) << "identity"
                << std::setw(13) << "nonsingular" << std::setw(10) << "hasse" << '\n';
            for (const auto& row : s["per_prime"])
                out << std::setw(5) << row["p"].get<std::uint64_t>() << std::setw(8) << row["cases"].get<std::uint64_t>()
                    << std::setw(12) << row["identity_ok"].get<std::uint64_t>() << std::setw(13)
                    << row["nonsingular"].get<std::uint64_t>() << std::setw(10) << row["hasse_ok"].get<std::uint64_t>()
                    << '\n';
            out << "cases " << s["cases"] << ", identity failures " << s["identity_failures"] << ", hasse failures "
                << s["hasse_failures"] << ", seed " << common.seed << '\n';
        };
    });

    // ---- theorem1-probe ----
    struct {
        std::string f;
        std::uint64_t p = 0;
        std::int64_t h = 1;
        std::vector<std::string> vars;
        unsigned nmax = default_truncation_limit;
    } th;
    auto* probe = app.add_subcommand("theorem1-probe",
                                     "EXPLORATORY: Milnor data of r o f beside periodic points of the gradient system");
    probe->add_option("--f", th.f, "Polynomial with integer coefficients")->required();
    probe->add_option("--p", th.p, "Odd prime")->required();
    probe->add_option("--h", th.h, "Euler step")->capture_default_str();
    probe->add_option("--vars", th.vars, "Variable order, comma separated")->delimiter(',');
    probe->add_option("--nmax", th.nmax, "Largest m^N truncation tried")->capture_default_str();
    add_common(probe, common, true);
    probe->callback([&] {
        config = [&] {
            Json c = common_config(common, true);
            c.update({{"f", th.f}, {"p", th.p}, {"h", th.h}, {"vars", th.vars}, {"nmax", th.nmax}});
            return c;
        };
        action = [&] {
            auto vars = infer_vars(th.vars, {th.f});
            if (vars.empty()) vars = {"x"};
            const MPoly f = for_flag("--f", [&] { return poly_parse(th.f, vars, Domain::rationals()); });
            for_flag("--p", [&] { return Domain::prime(th.p); });
            return theorem1_probe(f, vars, th.p, th.h, common.budget, th.nmax);
        };
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        const auto subs = app.get_subcommands();
        err << "error: " << e.what() << "\n\n" << (subs.empty() ? app.help() : subs.back()->help());
        return exit_usage_error;
    }

    CLI::App* active = app.get_subcommands().front();
    try {
        const Json result = action();
        if (emit) {
            emit(result);
        } else if (common.format == "json") {
            out << envelope(active->get_name(), config(), result).dump(2) << '\n';
        } else {
            out << render_text(result);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        if (e.is_usage_error()) {
            err << '\n' << active->help();
            return exit_usage_error;
        }
        return exit_computation_error;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_computation_error;
    }
    return exit_ok;
}

}  // namespace dmod::cli
