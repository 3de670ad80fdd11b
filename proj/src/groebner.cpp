#include "dmod/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "dmod/error.hpp"

namespace dmod {

namespace {

struct Reducer {
    const std::vector<MPoly>& polys;
    std::vector<Exponent> lms;
    std::vector<FieldElem> lcs;
    const MonomialOrder& order;

    Reducer(const std::vector<MPoly>& ps, const MonomialOrder& ord) : polys(ps), order(ord) {
        for (const auto& g : polys) push(g);
    }

    void push(const MPoly& g) {
        auto [e, c] = g.leading_term(order);
        lms.push_back(std::move(e));
        lcs.push_back(std::move(c));
    }

    // Full reduction: every term of the remainder is irreducible.
    MPoly reduce(MPoly p) const {
        MPoly r(p.nvars(), p.domain());
        while (!p.is_zero()) {
            auto [e, c] = p.leading_term(order);
            std::size_t k = 0;
            while (k < lms.size() && !divides(lms[k], e)) ++k;
            if (k < lms.size()) {
                p.sub_scaled_shift(c / lcs[k], exponent_sub(e, lms[k]), polys[k]);
            } else {
                r.add_term(e, c);
                p.add_term(e, -c);
            }
        }
        return r;
    }
};

MPoly make_monic(const MPoly& f, const MonomialOrder& order) {
    const auto lc = f.leading_term(order).second;
    return lc.is_one() ? f : f.scaled(lc.inv());
}

void check_inputs(std::span<const MPoly> gens) {
    if (gens.empty()) throw Error(ErrorCode::invalid_argument, "no generators");
    for (const auto& g : gens) {
        require_same_domain(gens.front().domain(), g.domain());
        if (g.nvars() != gens.front().nvars())
            throw Error(ErrorCode::domain_mismatch, "generators have different variable counts");
    }
}

}  // namespace

std::vector<Exponent> GroebnerBasis::leading_monomials() const {
    std::vector<Exponent> out;
    out.reserve(generators.size());
    for (const auto& g : generators) out.push_back(g.leading_term(order).first);
    return out;
}

MPoly s_polynomial(const MPoly& f, const MPoly& g, const MonomialOrder& order) {
    const auto [ef, cf] = f.leading_term(order);
    const auto [eg, cg] = g.leading_term(order);
    const Exponent l = exponent_lcm(ef, eg);
    MPoly s = f.shifted(exponent_sub(l, ef)).scaled(cf.inv());
    s.sub_scaled_shift(cg.inv(), exponent_sub(l, eg), g);
    return s;
}

GroebnerBasis buchberger(std::span<const MPoly> gens, const MonomialOrder& order) {
    check_inputs(gens);
    const std::size_t n = gens.front().nvars();
    const Domain dom = gens.front().domain();
    if (!order.is_global())
        throw Error(ErrorCode::invalid_argument, "Buchberger's algorithm needs a global monomial order");
    order.validate(n);

    std::vector<MPoly> basis;
    Reducer reducer(basis, order);
    // (lcm degree, i, j)
    std::set<std::tuple<std::uint64_t, std::size_t, std::size_t>> pairs;
    bool unit = false;

    auto insert = [&](MPoly h) {
        h = make_monic(h, order);
        if (h.is_constant()) unit = true;
        const std::size_t k = basis.size();
        basis.push_back(std::move(h));
        reducer.push(basis.back());
        for (std::size_t i = 0; i < k; ++i)
            pairs.emplace(total_degree(exponent_lcm(reducer.lms[i], reducer.lms[k])), i, k);
    };

    for (const auto& g : gens) {
        if (unit) break;
        MPoly r = reducer.reduce(g);
        if (!r.is_zero()) insert(std::move(r));
    }

    while (!pairs.empty() && !unit) {
        const auto [deg, i, j] = *pairs.begin();
        pairs.erase(pairs.begin());
        if (coprime(reducer.lms[i], reducer.lms[j])) continue;  // product criterion
        MPoly r = reducer.reduce(s_polynomial(basis[i], basis[j], order));
        if (!r.is_zero()) insert(std::move(r));
    }

    GroebnerBasis out{{}, order, n, dom};
    if (unit) {
        out.generators.push_back(MPoly::constant(n, FieldElem::one(dom)));
        return out;
    }

    // Minimalize: drop generators whose leading monomial is divisible by another's.
    std::vector<MPoly> minimal;
    std::vector<Exponent> minimal_lms;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j || !divides(reducer.lms[j], reducer.lms[i])) continue;
            redundant = reducer.lms[j] != reducer.lms[i] || j < i;
        }
        if (!redundant) {
            minimal.push_back(basis[i]);
            minimal_lms.push_back(reducer.lms[i]);
        }
    }

    // Interreduce the tails.
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<MPoly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        const Reducer by_others(others, order);
        MPoly tail = minimal[i];
        const FieldElem lc = tail.coefficient(minimal_lms[i]);
        tail.add_term(minimal_lms[i], -lc);
        MPoly reduced = by_others.reduce(std::move(tail));
        reduced.add_term(minimal_lms[i], lc);
        minimal[i] = std::move(reduced);
    }

    std::vector<std::size_t> idx(minimal.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return order.less(minimal_lms[b], minimal_lms[a]); });
    for (auto i : idx) out.generators.push_back(std::move(minimal[i]));
    return out;
}

MPoly normal_form(const MPoly& f, const GroebnerBasis& basis) {
    require_same_domain(basis.domain, f.domain());
    if (f.nvars() != basis.nvars) throw Error(ErrorCode::domain_mismatch, "polynomial and basis variable counts differ");
    return Reducer(basis.generators, basis.order).reduce(f);
}

bool s_pairs_reduce_to_zero(const GroebnerBasis& basis) {
    const Reducer reducer(basis.generators, basis.order);
    for (std::size_t i = 0; i < basis.generators.size(); ++i)
        for (std::size_t j = i + 1; j < basis.generators.size(); ++j)
            if (!reducer.reduce(s_polynomial(basis.generators[i], basis.generators[j], basis.order)).is_zero())
                return false;
    return true;
}

std::optional<std::vector<Exponent>> standard_monomials(const GroebnerBasis& basis) {
    const std::size_t n = basis.nvars;
    if (basis.is_unit()) return std::vector<Exponent>{};
    const auto lms = basis.leading_monomials();

    // Staircase bound per axis: smallest pure power among the leading monomials.
    std::vector<std::uint32_t> bound(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& e : lms) {
            if (total_degree(e) != e[i] || e[i] == 0) continue;
            if (bound[i] == 0 || e[i] < bound[i]) bound[i] = e[i];
        }
        if (bound[i] == 0) return std::nullopt;
    }

    std::vector<Exponent> out;
    Exponent e(n, 0);
    while (true) {
        if (std::none_of(lms.begin(), lms.end(), [&](const Exponent& lm) { return divides(lm, e); }))
            out.push_back(e);
        std::size_t i = 0;
        while (i < n && ++e[i] == bound[i]) e[i++] = 0;
        if (i == n) break;
    }
    std::sort(out.begin(), out.end(), [](const Exponent& a, const Exponent& b) { return GrevlexDescending{}(b, a); });
    return out;
}

Dimension quotient_dimension(const GroebnerBasis& basis) {
    const auto monos = standard_monomials(basis);
    if (!monos) return std::nullopt;
    return monos->size();
}

std::vector<MPoly> with_maximal_power(std::span<const MPoly> gens, unsigned n) {
    std::vector<MPoly> out(gens.begin(), gens.end());
    const std::size_t nvars = gens.front().nvars();
    const Domain dom = gens.front().domain();
    // enumerate exponent vectors of total degree n
    Exponent e(nvars, 0);
    auto emit = [&](auto&& self, std::size_t i, unsigned left) -> void {
        if (i + 1 == nvars) {
            e[i] = left;
            out.push_back(MPoly::monomial(e, FieldElem::one(dom)));
            return;
        }
        for (unsigned k = 0; k <= left; ++k) {
            e[i] = left - k;
            self(self, i + 1, k);
        }
    };
    if (nvars > 0) emit(emit, 0, n);
    return out;
}

LocalDimension local_dimension(std::span<const MPoly> gens, unsigned n_max) {
    check_inputs(gens);
    if (n_max < 2) throw Error(ErrorCode::invalid_argument, "truncation limit must be at least 2");
    // Pre-reduce the generators once; each truncation only adds monomials.
    std::vector<MPoly> nonzero;
    for (const auto& g : gens)
        if (!g.is_zero()) nonzero.push_back(g);
    std::vector<MPoly> base = nonzero.empty() ? nonzero : buchberger(nonzero).generators;
    if (base.empty()) base.push_back(MPoly(gens.front().nvars(), gens.front().domain()));

    auto d = [&](unsigned n) { return *quotient_dimension(buchberger(with_maximal_power(base, n))); };
    std::size_t prev = d(2);
    for (unsigned n = 2; n + 1 <= n_max; ++n) {
        const std::size_t next = d(n + 1);
        if (next == prev) return {prev, n};
        prev = next;
    }
    throw Error(ErrorCode::no_stabilization,
                "local dimension did not stabilize up to N = " + std::to_string(n_max));
}

std::vector<MPoly> jacobian_generators(const MPoly& f) {
    std::vector<MPoly> out;
    for (std::size_t i = 0; i < f.nvars(); ++i) out.push_back(f.derivative(i));
    return out;
}

MilnorResult milnor(const MPoly& f, unsigned n_max) {
    if (f.nvars() == 0) return {0, 0};
    const auto jac = jacobian_generators(f);
    try {
        const auto ld = local_dimension(jac, n_max);
        return {ld.dimension, ld.stabilized_at};
    } catch (const Error& e) {
        if (e.code() != ErrorCode::no_stabilization) throw;
        return {std::nullopt, n_max};
    }
}

Dimension milnor_number(const MPoly& f, unsigned n_max) { return milnor(f, n_max).dimension; }

MilnorReport tame_wild_split(const MPoly& f, std::uint64_t p, unsigned n_max) {
    if (!f.domain().is_rational()) throw Error(ErrorCode::domain_mismatch, "tame/wild split expects f over Q");
    const Domain fp = Domain::prime(p);
    MilnorReport report{f, p, {}, {}, {}, {}, 0, 0, {}};

    const auto zero = milnor(f, n_max);
    const auto modp = milnor(f.in_domain(fp), n_max);
    report.char_0 = zero.dimension;
    report.char_p = modp.dimension;
    report.truncation_0 = zero.truncation;
    report.truncation_p = modp.truncation;
    report.tame = zero.dimension;

    if (!report.char_p) report.anomalies.emplace_back("characteristic-p Milnor number is infinite (non-isolated mod p)");
    if (!report.char_0) report.anomalies.emplace_back("characteristic-0 Milnor number is infinite (non-isolated)");
    if (report.char_p && report.char_0) {
        report.wild = static_cast<std::int64_t>(*report.char_p) - static_cast<std::int64_t>(*report.char_0);
        if (*report.wild < 0) report.anomalies.emplace_back("char_p < char_0: negative wild part");
    }
    return report;
}

}  // namespace dmod
