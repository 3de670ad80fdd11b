#include "dmod/weyl.hpp"

#include <algorithm>
#include <cctype>

#include "dmod/error.hpp"
#include "dmod/groebner.hpp"

namespace dmod {

WeylOperator WeylOperator::identity(std::size_t nvars, Domain d) {
    return multiplication(MPoly::constant(nvars, FieldElem::one(d)));
}

WeylOperator WeylOperator::partial(std::size_t nvars, std::size_t i, Domain d, std::uint32_t power) {
    if (i >= nvars) throw Error(ErrorCode::index_out_of_range, "derivative index " + std::to_string(i));
    WeylOperator r(nvars, d);
    Exponent alpha(nvars, 0);
    alpha[i] = power;
    r.add_term(alpha, MPoly::constant(nvars, FieldElem::one(d)));
    return r;
}

WeylOperator WeylOperator::multiplication(const MPoly& f) {
    WeylOperator r(f.nvars(), f.domain());
    r.add_term(Exponent(f.nvars(), 0), f);
    return r;
}

std::uint64_t WeylOperator::order() const noexcept {
    std::uint64_t best = 0;
    for (const auto& [alpha, c] : terms_) best = std::max(best, total_degree(alpha));
    return best;
}

std::uint64_t WeylOperator::coefficient_degree() const noexcept {
    std::uint64_t best = 0;
    for (const auto& [alpha, c] : terms_) best = std::max(best, c.total_degree());
    return best;
}

bool WeylOperator::has_zero_order_term() const { return terms_.count(Exponent(nvars_, 0)) != 0; }

void WeylOperator::check_compatible(const WeylOperator& rhs) const {
    require_same_domain(dom_, rhs.dom_);
    if (nvars_ != rhs.nvars_) throw Error(ErrorCode::domain_mismatch, "operator variable counts differ");
}

void WeylOperator::add_term(const Exponent& alpha, const MPoly& coeff) {
    if (alpha.size() != nvars_ || coeff.nvars() != nvars_)
        throw Error(ErrorCode::domain_mismatch, "operator term has the wrong variable count");
    require_same_domain(dom_, coeff.domain());
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(alpha, coeff);
    if (inserted) return;
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
}

MPoly WeylOperator::apply(const MPoly& f) const {
    require_same_domain(dom_, f.domain());
    if (f.nvars() != nvars_) throw Error(ErrorCode::domain_mismatch, "operator and polynomial variable counts differ");
    MPoly result(nvars_, dom_);
    for (const auto& [alpha, coeff] : terms_) {
        MPoly g = f;
        for (std::size_t i = 0; i < nvars_ && !g.is_zero(); ++i)
            for (std::uint32_t k = 0; k < alpha[i] && !g.is_zero(); ++k) g = g.derivative(i);
        if (!g.is_zero()) result += coeff * g;
    }
    return result;
}

WeylOperator WeylOperator::left_partial(std::size_t i) const {
    if (i >= nvars_) throw Error(ErrorCode::index_out_of_range, "derivative index " + std::to_string(i));
    // d_i o (h d^b) = h d^(b + e_i) + (d_i h) d^b
    WeylOperator r(nvars_, dom_);
    for (const auto& [alpha, coeff] : terms_) {
        Exponent raised = alpha;
        ++raised[i];
        r.add_term(raised, coeff);
        r.add_term(alpha, coeff.derivative(i));
    }
    return r;
}

WeylOperator WeylOperator::compose(const WeylOperator& q) const {
    check_compatible(q);
    WeylOperator result(nvars_, dom_);
    for (const auto& [alpha, coeff] : terms_) {
        WeylOperator moved = q;
        for (std::size_t i = 0; i < nvars_; ++i)
            for (std::uint32_t k = 0; k < alpha[i] && !moved.is_zero(); ++k) moved = moved.left_partial(i);
        for (const auto& [beta, c] : moved.terms_) result.add_term(beta, coeff * c);
    }
    return result;
}

WeylOperator& WeylOperator::operator+=(const WeylOperator& rhs) {
    check_compatible(rhs);
    for (const auto& [alpha, c] : rhs.terms_) add_term(alpha, c);
    return *this;
}

WeylOperator& WeylOperator::operator-=(const WeylOperator& rhs) {
    check_compatible(rhs);
    for (const auto& [alpha, c] : rhs.terms_) add_term(alpha, -c);
    return *this;
}

std::string WeylOperator::to_string(const std::vector<std::string>& vars) const {
    if (vars.size() != nvars_) throw Error(ErrorCode::invalid_argument, "variable names do not match nvars");
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [alpha, coeff] : terms_) {
        std::string dpart;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (alpha[i] == 0) continue;
            if (!dpart.empty()) dpart += '*';
            dpart += "d" + vars[i];
            if (alpha[i] > 1) dpart += '^' + std::to_string(alpha[i]);
        }
        for (const auto& [e, c] : coeff.terms()) {
            const bool negative = c.is_negative();
            const std::string mag = negative ? (-c).to_string() : c.to_string();
            out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
            first = false;
            std::string factors;
            for (std::size_t i = 0; i < nvars_; ++i) {
                if (e[i] == 0) continue;
                if (!factors.empty()) factors += '*';
                factors += vars[i];
                if (e[i] > 1) factors += '^' + std::to_string(e[i]);
            }
            if (!dpart.empty()) factors += (factors.empty() ? "" : "*") + dpart;
            if (factors.empty())
                out += mag;
            else if (mag == "1")
                out += factors;
            else
                out += mag + '*' + factors;
        }
    }
    return out;
}

nlohmann::json WeylOperator::to_json(const std::vector<std::string>& vars) const {
    if (vars.size() != nvars_) throw Error(ErrorCode::invalid_argument, "variable names do not match nvars");
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [alpha, coeff] : terms_)
        for (const auto& [e, c] : coeff.terms()) terms.push_back({{"c", c.to_string()}, {"e", e}, {"alpha", alpha}});
    return {{"vars", vars}, {"terms", terms}};
}

bool operator==(const WeylOperator& a, const WeylOperator& b) noexcept {
    return a.nvars_ == b.nvars_ && a.dom_ == b.dom_ && a.terms_ == b.terms_;
}

MPoly op_apply(const WeylOperator& p, const MPoly& f) { return p.apply(f); }

WeylOperator op_compose(const WeylOperator& p, const WeylOperator& q) { return p.compose(q); }

std::optional<std::size_t> derivative_index(const std::string& name, const std::vector<std::string>& vars) {
    if (std::find(vars.begin(), vars.end(), name) != vars.end()) return std::nullopt;
    if (name.size() < 2 || name[0] != 'd') return std::nullopt;
    const std::string rest = name.substr(1);
    if (std::all_of(rest.begin(), rest.end(), [](unsigned char c) { return std::isdigit(c) != 0; })) {
        if (rest.size() > 9) return std::nullopt;
        const auto k = std::stoul(rest);
        if (k >= 1 && k <= vars.size()) return k - 1;
        return std::nullopt;
    }
    const auto it = std::find(vars.begin(), vars.end(), rest);
    if (it == vars.end()) return std::nullopt;
    return static_cast<std::size_t>(it - vars.begin());
}

WeylOperator operator_parse(std::string_view text, const std::vector<std::string>& vars, Domain d) {
    const std::size_t n = vars.size();
    WeylOperator result(n, d);
    for (const RawTerm& t : parse_terms(text)) {
        FieldElem c = t.coefficient.empty() ? FieldElem::one(d) : parse_coefficient(t.coefficient, d);
        if (t.negative) c = -c;
        WeylOperator term = WeylOperator::multiplication(MPoly::constant(n, c));
        for (const RawFactor& f : t.factors) {
            const auto var = std::find(vars.begin(), vars.end(), f.name);
            if (var != vars.end()) {
                Exponent e(n, 0);
                e[static_cast<std::size_t>(var - vars.begin())] = f.power;
                term = term.compose(WeylOperator::multiplication(MPoly::monomial(e, FieldElem::one(d))));
                continue;
            }
            const auto di = derivative_index(f.name, vars);
            if (!di)
                throw Error(ErrorCode::unknown_variable,
                            "'" + f.name + "' at position " + std::to_string(f.position));
            term = term.compose(WeylOperator::partial(n, *di, d, f.power));
        }
        result += term;
    }
    return result;
}

StabilityReport is_d_stable(std::span<const MPoly> gens) {
    if (gens.empty()) throw Error(ErrorCode::invalid_argument, "no generators");
    const GroebnerBasis basis = buchberger(gens);
    for (std::size_t g = 0; g < gens.size(); ++g) {
        for (std::size_t i = 0; i < gens[g].nvars(); ++i) {
            MPoly residue = normal_form(gens[g].derivative(i), basis);
            if (!residue.is_zero()) return {false, StabilityWitness{g, i, std::move(residue)}};
        }
    }
    return {};
}

}  // namespace dmod
