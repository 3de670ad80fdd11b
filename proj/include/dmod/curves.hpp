#pragma once

// Point counting on y^2 + a x^3 + b x = 0 over F_p, by whole-curve
// enumeration and by horizontal slices y = i.

#include <cstdint>
#include <optional>
#include <vector>

#include "dmod/poly.hpp"

namespace dmod {

struct CurveSpec {
    std::uint64_t p = 0;
    std::uint64_t a = 0;
    std::uint64_t b = 0;

    /// Reduces a, b mod p. NotPrime for composite p, InvalidArgument if a = 0 mod p.
    static CurveSpec make(std::uint64_t p, std::int64_t a, std::int64_t b);

    /// y^2 + a x^3 + b x in variables (x, y).
    MPoly equation() const;
};

/// Affine solutions by evaluating the curve polynomial at all p^2 points, plus
/// the point at infinity.
std::uint64_t naive_count(const CurveSpec& c);

/// l_i = number of distinct x with a x^3 + b x + i^2 = 0, for i = 0..p-1.
std::vector<unsigned> slice_counts(const CurveSpec& c);

/// Same slices, roots counted with multiplicity.
std::vector<unsigned> slice_counts_with_multiplicity(const CurveSpec& c);

/// Some affine point where the equation and both partials vanish.
bool singularity_check(const CurveSpec& c);

/// 2 floor(sqrt(p)) + 1.
std::uint64_t hasse_bound(std::uint64_t p);

/// |N - (p + 1)| <= hasse_bound(p). SingularCurve on a singular curve.
bool hasse_check(const CurveSpec& c);

struct SliceCountReport {
    CurveSpec curve;
    std::vector<unsigned> l;
    std::vector<unsigned> l_with_multiplicity;
    std::uint64_t slice_sum_plus_one = 0;
    std::uint64_t naive_count = 0;
    bool identity_holds = false;
    bool singular = false;
    std::optional<bool> hasse_ok;  // only for nonsingular curves
};

/// Both sides of |E(F_p)| = sum_i l_i + 1, computed independently.
SliceCountReport verify_identity(const CurveSpec& c);

/// Points of F_p^n where every partial of f vanishes (exhaustive).
std::vector<std::vector<std::uint64_t>> critical_locus(const MPoly& f, std::uint64_t budget);

/// Deterministic sample of `samples` curves per prime p <= pmax, with a != 0.
std::vector<CurveSpec> sample_curves(std::uint64_t pmax, unsigned samples, std::uint64_t seed);

}  // namespace dmod
