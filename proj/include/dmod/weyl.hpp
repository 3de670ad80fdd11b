#pragma once

// Differential operators sum_a f_a d^a in the Weyl algebra A_n(k).

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dmod/poly.hpp"

namespace dmod {

/// Operator in normal form: polynomial coefficients on the left, derivative
/// multi-indices on the right, one term per multi-index, no zero coefficients.
class WeylOperator {
   public:
    using TermMap = std::map<Exponent, MPoly, GrevlexDescending>;

    WeylOperator(std::size_t nvars, Domain d) : nvars_(nvars), dom_(d) {}

    static WeylOperator identity(std::size_t nvars, Domain d);
    /// d_i^power.
    static WeylOperator partial(std::size_t nvars, std::size_t i, Domain d, std::uint32_t power = 1);
    /// Multiplication by f.
    static WeylOperator multiplication(const MPoly& f);

    std::size_t nvars() const noexcept { return nvars_; }
    const Domain& domain() const noexcept { return dom_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Largest |alpha| among the terms.
    std::uint64_t order() const noexcept;
    /// Largest coefficient degree among the terms.
    std::uint64_t coefficient_degree() const noexcept;
    bool has_zero_order_term() const;

    /// Adds coeff * d^alpha.
    void add_term(const Exponent& alpha, const MPoly& coeff);

    MPoly apply(const MPoly& f) const;

    /// Normal form of (*this) o q.
    WeylOperator compose(const WeylOperator& q) const;

    /// Normal form of d_i o (*this), one rewriting step d_i x = x d_i + 1 per term.
    WeylOperator left_partial(std::size_t i) const;

    WeylOperator& operator+=(const WeylOperator& rhs);
    WeylOperator& operator-=(const WeylOperator& rhs);
    friend WeylOperator operator+(WeylOperator a, const WeylOperator& b) { return a += b; }
    friend WeylOperator operator-(WeylOperator a, const WeylOperator& b) { return a -= b; }
    friend WeylOperator operator*(const WeylOperator& a, const WeylOperator& b) { return a.compose(b); }

    /// e.g. "x^2*dx^2 + 4*x*dx + 2".
    std::string to_string(const std::vector<std::string>& vars) const;
    /// Polynomial JSON with an "alpha" vector per term.
    nlohmann::json to_json(const std::vector<std::string>& vars) const;

    friend bool operator==(const WeylOperator& a, const WeylOperator& b) noexcept;

   private:
    void check_compatible(const WeylOperator& rhs) const;

    std::size_t nvars_;
    Domain dom_;
    TermMap terms_;
};

MPoly op_apply(const WeylOperator& p, const MPoly& f);
WeylOperator op_compose(const WeylOperator& p, const WeylOperator& q);

/// Polynomial grammar extended by derivative tokens: d1..dn (1-based) or
/// d<var> such as dx. Factors are multiplied in written order, so "dx*x"
/// parses to x*dx + 1.
WeylOperator operator_parse(std::string_view text, const std::vector<std::string>& vars, Domain d);

/// Resolves a factor name to a derivative index, if it names one.
std::optional<std::size_t> derivative_index(const std::string& name, const std::vector<std::string>& vars);

struct StabilityWitness {
    std::size_t generator;  // index into the input generators
    std::size_t variable;   // derivative direction
    MPoly residue;          // normal form of d_variable(generator), nonzero
};

struct StabilityReport {
    bool stable = true;
    std::optional<StabilityWitness> witness;
};

/// Whether the ideal generated by gens is closed under every d_i.
StabilityReport is_d_stable(std::span<const MPoly> gens);

}  // namespace dmod
