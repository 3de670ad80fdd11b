#pragma once

// Finite dynamical systems over (Z/pZ)^n and the Collatz map.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "dmod/poly.hpp"

namespace dmod {

inline constexpr std::uint64_t default_state_budget = 10'000'000;

enum class SystemMode { vector_field, self_map };

std::string_view to_string(SystemMode mode) noexcept;

/// n polynomials over F_p in n variables: either a vector field
/// dx_i/ds = g_i(x) or a self-map x -> (g_1(x), ..., g_n(x)).
class DynamicalSystem {
   public:
    DynamicalSystem(std::vector<MPoly> components, SystemMode mode);

    std::uint64_t p() const noexcept { return p_; }
    std::size_t dimension() const noexcept { return components_.size(); }
    const std::vector<MPoly>& components() const noexcept { return components_; }
    SystemMode mode() const noexcept { return mode_; }

   private:
    std::vector<MPoly> components_;
    SystemMode mode_;
    std::uint64_t p_;
};

/// Self-map F(x) = x + h g(x). InvalidArgument unless sys is a vector field.
DynamicalSystem euler_discretize(const DynamicalSystem& sys, const FieldElem& h);

/// The vector field grad f.
DynamicalSystem gradient_system(const MPoly& f);

/// Number of states p^n; StateBudgetExceeded above the budget.
std::uint64_t state_count(std::uint64_t p, std::size_t n, std::uint64_t budget);

/// States are encoded as sum x_i p^(n-1-i), so codes follow lex order of points.
std::vector<std::uint64_t> decode_state(std::uint64_t code, std::uint64_t p, std::size_t n);
std::uint64_t encode_state(std::span<const std::uint64_t> point, std::uint64_t p);

/// next[s] = F(s) for every encoded state s. Requires a self-map.
std::vector<std::uint32_t> successor_table(const DynamicalSystem& map, std::uint64_t budget = default_state_budget);

struct OrbitDecomposition {
    /// Each cycle starts at its minimal state and follows F; cycles are
    /// sorted by minimal state.
    std::vector<std::vector<std::uint64_t>> cycles;
    /// Distance from each state to its cycle (0 on cycles), indexed by code.
    std::vector<std::uint32_t> tail_lengths;
    std::uint64_t periodic_count = 0;

    std::uint64_t tail_state_count() const noexcept { return tail_lengths.size() - periodic_count; }
};

/// Complete decomposition of the functional graph of next.
OrbitDecomposition decompose_functional_graph(std::span<const std::uint32_t> next);

OrbitDecomposition orbit_decomposition(const DynamicalSystem& map, std::uint64_t budget = default_state_budget);

/// Periodic points of the Euler map of a vector field.
std::uint64_t periodic_point_count(const DynamicalSystem& sys, const FieldElem& h,
                                   std::uint64_t budget = default_state_budget);

// ---- Collatz ---------------------------------------------------------------

enum class CollatzVariant {
    paper,        // x/2 on even, 3x+1 on odd
    accelerated,  // x/2 on even, (3x+1)/2 on odd
};

std::string_view to_string(CollatzVariant v) noexcept;
CollatzVariant collatz_variant_from_name(std::string_view name);

BigInt collatz_step(const BigInt& x, CollatzVariant variant);

struct CollatzRecord {
    BigInt start;
    CollatzVariant variant = CollatzVariant::paper;
    std::uint64_t budget = 0;
    /// States in visiting order, start first, up to the first repeat.
    std::vector<BigInt> trajectory;
    /// Index in the trajectory where the cycle is entered.
    std::optional<std::uint64_t> steps_to_cycle;
    /// Rotated to begin at its minimal element.
    std::vector<BigInt> cycle;
    bool budget_exhausted = false;
    bool cycle_verified = false;
};

/// Iterates until a state recurs or `budget` steps have been taken. Negative
/// starts are rejected with InvalidArgument.
CollatzRecord collatz_orbit(const BigInt& start, CollatzVariant variant, std::uint64_t budget);

/// Parities of the first k accelerated steps from x.
std::vector<std::uint8_t> parity_vector(std::uint64_t x, unsigned k);

/// Whether residues mod 2^k map bijectively onto parity vectors of length k.
/// InvalidArgument for k > 16.
bool parity_bijection_check(unsigned k);

}  // namespace dmod
