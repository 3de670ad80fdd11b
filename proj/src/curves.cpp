#include "dmod/curves.hpp"

#include <random>

#include "dmod/dynsys.hpp"
#include "dmod/error.hpp"

namespace dmod {

CurveSpec CurveSpec::make(std::uint64_t p, std::int64_t a, std::int64_t b) {
    const Domain d = Domain::prime(p);
    const FieldElem ra(d, a);
    if (ra.is_zero()) throw Error(ErrorCode::invalid_argument, "coefficient a must be nonzero mod p");
    return {p, ra.residue(), FieldElem(d, b).residue()};
}

MPoly CurveSpec::equation() const {
    const Domain d = Domain::prime(p);
    MPoly f(2, d);
    f.add_term({0, 2}, FieldElem::one(d));
    f.add_term({3, 0}, FieldElem(d, static_cast<std::int64_t>(a)));
    f.add_term({1, 0}, FieldElem(d, static_cast<std::int64_t>(b)));
    return f;
}

std::uint64_t naive_count(const CurveSpec& c) {
    const MPoly f = c.equation();
    const Domain d = f.domain();
    std::uint64_t count = 1;  // point at infinity
    std::vector<FieldElem> pt(2, FieldElem::zero(d));
    for (std::uint64_t x = 0; x < c.p; ++x) {
        pt[0] = FieldElem(d, static_cast<std::int64_t>(x));
        for (std::uint64_t y = 0; y < c.p; ++y) {
            pt[1] = FieldElem(d, static_cast<std::int64_t>(y));
            if (f.eval(pt).is_zero()) ++count;
        }
    }
    return count;
}

namespace {

std::uint64_t cubic_at(const CurveSpec& c, std::uint64_t x, std::uint64_t t) {
    const std::uint64_t p = c.p;
    const std::uint64_t x3 = x * x % p * x % p;
    return (c.a * x3 % p + c.b * x % p + t) % p;
}

// Multiplicity of r as a root of a x^3 + b x + t by repeated synthetic division.
unsigned root_multiplicity(const CurveSpec& c, std::uint64_t r, std::uint64_t t) {
    const std::uint64_t p = c.p;
    std::vector<std::uint64_t> coeffs{c.a, 0, c.b, t};  // descending degree
    unsigned mult = 0;
    while (coeffs.size() > 1) {
        std::vector<std::uint64_t> quotient;
        std::uint64_t acc = 0;
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            acc = (acc * r + coeffs[i]) % p;
            if (i + 1 < coeffs.size()) quotient.push_back(acc);
        }
        if (acc != 0) break;
        ++mult;
        coeffs = std::move(quotient);
    }
    return mult;
}

}  // namespace

std::vector<unsigned> slice_counts(const CurveSpec& c) {
    std::vector<unsigned> l(c.p, 0);
    for (std::uint64_t i = 0; i < c.p; ++i) {
        const std::uint64_t t = i * i % c.p;
        for (std::uint64_t x = 0; x < c.p; ++x)
            if (cubic_at(c, x, t) == 0) ++l[i];
    }
    return l;
}

std::vector<unsigned> slice_counts_with_multiplicity(const CurveSpec& c) {
    std::vector<unsigned> l(c.p, 0);
    for (std::uint64_t i = 0; i < c.p; ++i) {
        const std::uint64_t t = i * i % c.p;
        for (std::uint64_t x = 0; x < c.p; ++x)
            if (cubic_at(c, x, t) == 0) l[i] += root_multiplicity(c, x, t);
    }
    return l;
}

bool singularity_check(const CurveSpec& c) {
    const MPoly f = c.equation();
    const MPoly fx = f.derivative(0);
    const MPoly fy = f.derivative(1);
    const Domain d = f.domain();
    std::vector<FieldElem> pt(2, FieldElem::zero(d));
    for (std::uint64_t x = 0; x < c.p; ++x) {
        pt[0] = FieldElem(d, static_cast<std::int64_t>(x));
        for (std::uint64_t y = 0; y < c.p; ++y) {
            pt[1] = FieldElem(d, static_cast<std::int64_t>(y));
            if (f.eval(pt).is_zero() && fx.eval(pt).is_zero() && fy.eval(pt).is_zero()) return true;
        }
    }
    return false;
}

std::uint64_t hasse_bound(std::uint64_t p) {
    std::uint64_t r = 0;
    while ((r + 1) * (r + 1) <= p) ++r;
    return 2 * r + 1;
}

bool hasse_check(const CurveSpec& c) {
    if (singularity_check(c)) throw Error(ErrorCode::singular_curve, "Hasse bound needs a nonsingular curve");
    const std::uint64_t n = naive_count(c);
    const std::uint64_t expected = c.p + 1;
    const std::uint64_t dev = n > expected ? n - expected : expected - n;
    return dev <= hasse_bound(c.p);
}

SliceCountReport verify_identity(const CurveSpec& c) {
    SliceCountReport r;
    r.curve = c;
    r.l = slice_counts(c);
    r.l_with_multiplicity = slice_counts_with_multiplicity(c);
    r.slice_sum_plus_one = 1;
    for (auto v : r.l) r.slice_sum_plus_one += v;
    r.naive_count = naive_count(c);
    r.identity_holds = r.slice_sum_plus_one == r.naive_count;
    r.singular = singularity_check(c);
    if (!r.singular) r.hasse_ok = hasse_check(c);
    return r;
}

std::vector<std::vector<std::uint64_t>> critical_locus(const MPoly& f, std::uint64_t budget) {
    const Domain d = f.domain();
    if (!d.is_prime_field()) throw Error(ErrorCode::domain_mismatch, "critical locus is enumerated over F_p");
    const std::uint64_t p = d.characteristic();
    const std::size_t n = f.nvars();
    const std::uint64_t count = state_count(p, n, budget);
    std::vector<MPoly> partials;
    for (std::size_t i = 0; i < n; ++i) partials.push_back(f.derivative(i));

    std::vector<std::vector<std::uint64_t>> out;
    std::vector<FieldElem> pt(n, FieldElem::zero(d));
    for (std::uint64_t code = 0; code < count; ++code) {
        const auto coords = decode_state(code, p, n);
        for (std::size_t i = 0; i < n; ++i) pt[i] = FieldElem(d, static_cast<std::int64_t>(coords[i]));
        bool critical = true;
        for (const auto& g : partials)
            if (!g.eval(pt).is_zero()) {
                critical = false;
                break;
            }
        if (critical) out.push_back(coords);
    }
    return out;
}

std::vector<CurveSpec> sample_curves(std::uint64_t pmax, unsigned samples, std::uint64_t seed) {
    // Raw engine output reduced mod p, no std distributions.
    std::mt19937_64 rng(seed);
    std::vector<CurveSpec> out;
    for (std::uint64_t p = 2; p <= pmax; ++p) {
        if (!is_prime(p)) continue;
        for (unsigned s = 0; s < samples; ++s) {
            const std::uint64_t a = 1 + rng() % (p - 1);
            const std::uint64_t b = rng() % p;
            out.push_back({p, a, b});
        }
    }
    return out;
}

}  // namespace dmod
