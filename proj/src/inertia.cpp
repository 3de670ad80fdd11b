#include "dmod/inertia.hpp"

#include <algorithm>

#include "dmod/error.hpp"

namespace dmod {

QuotientModule::QuotientModule(std::uint64_t p, std::size_t nvars, std::uint32_t m)
    : dom_(Domain::prime(p)), nvars_(nvars), m_(m) {
    if (m == 0) throw Error(ErrorCode::invalid_argument, "truncation order must be at least 1");
    if (nvars == 0) throw Error(ErrorCode::invalid_argument, "module needs at least one variable");
    // all exponents of total degree < m
    Exponent e(nvars, 0);
    while (true) {
        if (total_degree(e) < m) basis_.push_back(e);
        std::size_t i = 0;
        while (i < nvars && ++e[i] == m) e[i++] = 0;
        if (i == nvars) break;
    }
    std::sort(basis_.begin(), basis_.end(), [](const Exponent& a, const Exponent& b) { return GrevlexDescending{}(b, a); });
}

MPoly QuotientModule::reduce(const MPoly& f) const {
    require_same_domain(dom_, f.domain());
    if (f.nvars() != nvars_) throw Error(ErrorCode::domain_mismatch, "polynomial and module variable counts differ");
    return f.truncated(m_);
}

Vector QuotientModule::coordinates(const MPoly& f) const {
    const MPoly r = reduce(f);
    Vector v;
    v.reserve(basis_.size());
    for (const auto& e : basis_) v.push_back(r.coefficient(e));
    return v;
}

MPoly QuotientModule::element(const Vector& coords) const {
    if (coords.size() != basis_.size()) throw Error(ErrorCode::invalid_argument, "coordinate length mismatch");
    MPoly f(nvars_, dom_);
    for (std::size_t i = 0; i < coords.size(); ++i) f.add_term(basis_[i], coords[i]);
    return f;
}

Matrix operator_matrix(const WeylOperator& op, const QuotientModule& module) {
    require_same_domain(module.domain(), op.domain());
    if (op.nvars() != module.nvars()) throw Error(ErrorCode::domain_mismatch, "operator and module variable counts differ");
    const std::size_t dim = module.dimension();
    Matrix m(dim, dim, module.domain());
    for (std::size_t j = 0; j < dim; ++j) {
        const auto image = module.coordinates(op.apply(MPoly::monomial(module.basis()[j], FieldElem::one(module.domain()))));
        for (std::size_t i = 0; i < dim; ++i) m(i, j) = image[i];
    }
    return m;
}

std::vector<MPoly> kernel_on_quotient(const WeylOperator& op, const QuotientModule& module) {
    std::vector<MPoly> out;
    for (const auto& v : kernel_basis(operator_matrix(op, module))) out.push_back(module.element(v));
    return out;
}

namespace {

WeylOperator composed_with_power(const WeylOperator& d, unsigned k, std::size_t direction) {
    if (direction >= d.nvars()) throw Error(ErrorCode::index_out_of_range, "direction " + std::to_string(direction));
    return d.compose(WeylOperator::partial(d.nvars(), direction, d.domain(), k));
}

bool is_constants(const std::vector<MPoly>& kernel) {
    return kernel.size() == 1 && kernel.front().is_constant() && !kernel.front().is_zero();
}

}  // namespace

ElementCheck annihilation_check(const WeylOperator& d, unsigned k, const MPoly& u, const QuotientModule& module,
                                std::size_t direction) {
    require_same_domain(module.domain(), d.domain());
    const MPoly value = module.reduce(composed_with_power(d, k, direction).apply(module.reduce(u)));
    return {value, value.is_zero()};
}

InertiaReport inertia_membership(const WeylOperator& d, unsigned level, const QuotientModule& module,
                                 const std::optional<MPoly>& element, std::size_t direction) {
    if (d.has_zero_order_term())
        throw Error(ErrorCode::zero_order_term, "operator must represent a class in D/O (no alpha = 0 term)");
    InertiaReport report{d, level, direction, {}, true};
    for (unsigned k = 0; k <= level; ++k) {
        const WeylOperator composed = composed_with_power(d, k, direction);
        const auto kernel = kernel_on_quotient(composed, module);
        InertiaLevel entry{k, kernel.size(), is_constants(kernel), std::nullopt};
        if (element) entry.element = annihilation_check(d, k, *element, module, direction);
        report.member = report.member && entry.kernel_equals_constants;
        report.per_k.push_back(std::move(entry));
    }
    return report;
}

Matrix hessian_at_origin(const MPoly& f) {
    const std::size_t n = f.nvars();
    Matrix h(n, n, f.domain());
    const std::vector<FieldElem> origin(n, FieldElem::zero(f.domain()));
    for (std::size_t i = 0; i < n; ++i) {
        const MPoly fi = f.derivative(i);
        for (std::size_t j = 0; j < n; ++j) h(i, j) = fi.derivative(j).eval(origin);
    }
    return h;
}

bool morse_check(const MPoly& f) {
    for (const auto& [e, c] : f.terms())
        if (total_degree(e) == 1) throw Error(ErrorCode::not_critical, "f has linear terms; origin is not critical");
    return rank(hessian_at_origin(f)) == f.nvars();
}

}  // namespace dmod
