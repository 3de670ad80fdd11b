#pragma once

// Buchberger's algorithm, quotient dimensions and Milnor numbers.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dmod/poly.hpp"

namespace dmod {

/// Reduced Groebner basis: monic, no term of any generator divisible by
/// another generator's leading monomial, sorted by descending leading monomial.
struct GroebnerBasis {
    std::vector<MPoly> generators;
    MonomialOrder order;
    std::size_t nvars = 0;
    Domain domain;

    bool is_unit() const noexcept { return generators.size() == 1 && generators.front().is_constant(); }
    std::vector<Exponent> leading_monomials() const;
};

/// Vector-space dimension; nullopt stands for infinite.
using Dimension = std::optional<std::size_t>;

inline constexpr unsigned default_truncation_limit = 20;

MPoly s_polynomial(const MPoly& f, const MPoly& g, const MonomialOrder& order);

/// Pairs are processed by the normal strategy: smallest total degree of the
/// leading-monomial lcm first, ties broken lexicographically on (i, j).
/// InvalidArgument for a local (non-well) order, DomainMismatch on mixed inputs.
GroebnerBasis buchberger(std::span<const MPoly> gens, const MonomialOrder& order = MonomialOrder{});

/// Remainder of multivariate division by the basis; zero iff f is in the ideal.
MPoly normal_form(const MPoly& f, const GroebnerBasis& basis);

/// Every S-polynomial of basis pairs reduces to zero.
bool s_pairs_reduce_to_zero(const GroebnerBasis& basis);

/// Monomials divisible by no leading monomial, in ascending grevlex order;
/// nullopt when the staircase is unbounded along some axis.
std::optional<std::vector<Exponent>> standard_monomials(const GroebnerBasis& basis);
Dimension quotient_dimension(const GroebnerBasis& basis);

/// Generators plus every monomial of total degree n.
std::vector<MPoly> with_maximal_power(std::span<const MPoly> gens, unsigned n);

struct LocalDimension {
    std::size_t dimension = 0;
    unsigned stabilized_at = 0;
};

/// dim of the local algebra at the origin, via d_N = dim k[x]/(gens + m^N)
/// for N = 2, 3, ...; returns the first d_N with d_N = d_{N+1}. Throws
/// NoStabilization once N + 1 would exceed n_max.
LocalDimension local_dimension(std::span<const MPoly> gens, unsigned n_max = default_truncation_limit);

/// The first partials of f.
std::vector<MPoly> jacobian_generators(const MPoly& f);

struct MilnorResult {
    Dimension dimension;
    unsigned truncation = 0;  // N where d_N stabilized, or the limit when infinite
};

/// Local dimension of the Jacobian ideal; infinite when it never stabilizes.
MilnorResult milnor(const MPoly& f, unsigned n_max = default_truncation_limit);
Dimension milnor_number(const MPoly& f, unsigned n_max = default_truncation_limit);

struct MilnorReport {
    MPoly f;
    std::uint64_t p = 0;
    Dimension char_p;
    Dimension char_0;
    Dimension tame;
    std::optional<std::int64_t> wild;  // char_p - char_0 when both are finite
    unsigned truncation_p = 0;
    unsigned truncation_0 = 0;
    std::vector<std::string> anomalies;
};

/// Splits the char-p Milnor number of an integral f into the char-0 (tame)
/// part and the excess (wild). f must be given over Q.
MilnorReport tame_wild_split(const MPoly& f, std::uint64_t p, unsigned n_max = default_truncation_limit);

}  // namespace dmod
