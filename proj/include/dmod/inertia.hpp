#pragma once

// Differential-inertia membership tests on truncated polynomial modules and
// the Morse (Hessian nondegeneracy) check.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "dmod/matrix.hpp"
#include "dmod/poly.hpp"
#include "dmod/weyl.hpp"

namespace dmod {

/// F_p[x_1..x_n] modulo all monomials of total degree >= m. For n = 1 this is
/// F_p[x]/(x^m).
class QuotientModule {
   public:
    QuotientModule(std::uint64_t p, std::size_t nvars, std::uint32_t m);

    const Domain& domain() const noexcept { return dom_; }
    std::size_t nvars() const noexcept { return nvars_; }
    std::uint32_t truncation() const noexcept { return m_; }
    /// Standard monomials, ascending grevlex (1 first).
    const std::vector<Exponent>& basis() const noexcept { return basis_; }
    std::size_t dimension() const noexcept { return basis_.size(); }

    /// Image of f in the module (terms of degree >= m dropped).
    MPoly reduce(const MPoly& f) const;
    Vector coordinates(const MPoly& f) const;
    MPoly element(const Vector& coords) const;

   private:
    Domain dom_;
    std::size_t nvars_;
    std::uint32_t m_;
    std::vector<Exponent> basis_;
};

/// Matrix of P on the module basis: column j holds the truncated image of basis_j.
Matrix operator_matrix(const WeylOperator& op, const QuotientModule& module);

/// Kernel of P on the module, as module elements in reduced echelon form.
std::vector<MPoly> kernel_on_quotient(const WeylOperator& op, const QuotientModule& module);

struct ElementCheck {
    MPoly value;  // (D o d^k)(u) in the module
    bool annihilated = false;
};

struct InertiaLevel {
    unsigned k = 0;
    std::size_t kernel_dimension = 0;
    bool kernel_equals_constants = false;
    std::optional<ElementCheck> element;
};

struct InertiaReport {
    WeylOperator op;
    unsigned level = 0;
    std::size_t direction = 0;  // variable of the d^k factor
    std::vector<InertiaLevel> per_k;
    bool member = false;
};

/// For k = 0..level composes D o d^k and asks whether its kernel on the
/// module is exactly the constants. An optional witness element is also run
/// through annihilation_check at each k. ZeroOrderTerm if D has an alpha = 0 term.
InertiaReport inertia_membership(const WeylOperator& d, unsigned level, const QuotientModule& module,
                                 const std::optional<MPoly>& element = std::nullopt, std::size_t direction = 0);

/// (D o d^k)(u) reduced in the module, and whether it vanishes.
ElementCheck annihilation_check(const WeylOperator& d, unsigned k, const MPoly& u, const QuotientModule& module,
                                std::size_t direction = 0);

/// Second partials of f evaluated at the origin.
Matrix hessian_at_origin(const MPoly& f);

/// Nondegenerate Hessian at the origin. NotCritical if f has linear terms.
bool morse_check(const MPoly& f);

}  // namespace dmod
