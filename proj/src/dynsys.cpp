#include "dmod/dynsys.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <unordered_map>

#include "dmod/error.hpp"

namespace dmod {

std::string_view to_string(SystemMode mode) noexcept {
    return mode == SystemMode::vector_field ? "vector-field" : "self-map";
}

DynamicalSystem::DynamicalSystem(std::vector<MPoly> components, SystemMode mode)
    : components_(std::move(components)), mode_(mode), p_(0) {
    if (components_.empty()) throw Error(ErrorCode::invalid_argument, "system needs at least one component");
    const Domain d = components_.front().domain();
    if (!d.is_prime_field()) throw Error(ErrorCode::domain_mismatch, "dynamical systems live over a prime field");
    for (const auto& g : components_) {
        require_same_domain(d, g.domain());
        if (g.nvars() != components_.size())
            throw Error(ErrorCode::domain_mismatch, "component has " + std::to_string(g.nvars()) + " variables, expected " +
                                                        std::to_string(components_.size()));
    }
    p_ = d.characteristic();
}

DynamicalSystem euler_discretize(const DynamicalSystem& sys, const FieldElem& h) {
    if (sys.mode() != SystemMode::vector_field)
        throw Error(ErrorCode::invalid_argument, "Euler discretization applies to vector fields");
    const auto& g = sys.components();
    require_same_domain(g.front().domain(), h.domain());
    std::vector<MPoly> f;
    f.reserve(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) f.push_back(MPoly::variable(g.size(), i, h.domain()) + g[i].scaled(h));
    return DynamicalSystem(std::move(f), SystemMode::self_map);
}

DynamicalSystem gradient_system(const MPoly& f) {
    std::vector<MPoly> grad;
    for (std::size_t i = 0; i < f.nvars(); ++i) grad.push_back(f.derivative(i));
    return DynamicalSystem(std::move(grad), SystemMode::vector_field);
}

std::uint64_t state_count(std::uint64_t p, std::size_t n, std::uint64_t budget) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (count > budget / p) throw Error(ErrorCode::state_budget_exceeded, std::to_string(p) + "^" + std::to_string(n) +
                                                                                  " states exceed budget " + std::to_string(budget));
        count *= p;
    }
    if (count > budget)
        throw Error(ErrorCode::state_budget_exceeded, std::to_string(count) + " states exceed budget " + std::to_string(budget));
    return count;
}

std::vector<std::uint64_t> decode_state(std::uint64_t code, std::uint64_t p, std::size_t n) {
    std::vector<std::uint64_t> point(n);
    for (std::size_t i = n; i-- > 0;) {
        point[i] = code % p;
        code /= p;
    }
    return point;
}

std::uint64_t encode_state(std::span<const std::uint64_t> point, std::uint64_t p) {
    std::uint64_t code = 0;
    for (auto x : point) code = code * p + x;
    return code;
}

namespace {

// Residue-level evaluator; avoids FieldElem overhead in the state sweep.
class CompiledMap {
   public:
    explicit CompiledMap(const DynamicalSystem& sys) : p_(sys.p()), n_(sys.dimension()), max_exp_(n_, 0) {
        for (const auto& g : sys.components()) {
            std::vector<Term> terms;
            for (const auto& [e, c] : g.terms()) {
                terms.push_back({c.residue(), e});
                for (std::size_t i = 0; i < n_; ++i) max_exp_[i] = std::max(max_exp_[i], e[i]);
            }
            comps_.push_back(std::move(terms));
        }
    }

    void apply(std::span<const std::uint64_t> x, std::span<std::uint64_t> out) {
        powers_.resize(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            auto& pw = powers_[i];
            pw.assign(max_exp_[i] + 1, 1);
            for (std::uint32_t e = 1; e <= max_exp_[i]; ++e) pw[e] = pw[e - 1] * x[i] % p_;
        }
        for (std::size_t c = 0; c < comps_.size(); ++c) {
            std::uint64_t sum = 0;
            for (const auto& t : comps_[c]) {
                std::uint64_t v = t.coef;
                for (std::size_t i = 0; i < n_; ++i)
                    if (t.exp[i] != 0) v = v * powers_[i][t.exp[i]] % p_;
                sum += v;
                if (sum >= p_) sum -= p_;
            }
            out[c] = sum;
        }
    }

   private:
    struct Term {
        std::uint64_t coef;
        Exponent exp;
    };
    std::uint64_t p_;
    std::size_t n_;
    std::vector<std::uint32_t> max_exp_;
    std::vector<std::vector<Term>> comps_;
    std::vector<std::vector<std::uint64_t>> powers_;
};

}  // namespace

std::vector<std::uint32_t> successor_table(const DynamicalSystem& map, std::uint64_t budget) {
    if (map.mode() != SystemMode::self_map) throw Error(ErrorCode::invalid_argument, "orbit decomposition needs a self-map");
    const std::uint64_t count = state_count(map.p(), map.dimension(), budget);
    if (count > std::numeric_limits<std::uint32_t>::max())
        throw Error(ErrorCode::state_budget_exceeded, "state space exceeds 32-bit codes");
    CompiledMap compiled(map);
    const std::size_t n = map.dimension();
    std::vector<std::uint32_t> next(count);
    std::vector<std::uint64_t> x(n, 0), y(n, 0);
    for (std::uint64_t s = 0; s < count; ++s) {
        compiled.apply(x, y);
        next[s] = static_cast<std::uint32_t>(encode_state(y, map.p()));
        // advance x to the point of code s + 1
        for (std::size_t i = n; i-- > 0;) {
            if (++x[i] < map.p()) break;
            x[i] = 0;
        }
    }
    return next;
}

OrbitDecomposition decompose_functional_graph(std::span<const std::uint32_t> next) {
    const std::size_t count = next.size();
    constexpr std::uint32_t unseen = std::numeric_limits<std::uint32_t>::max();
    constexpr std::uint32_t done = unseen - 1;

    OrbitDecomposition out;
    out.tail_lengths.assign(count, 0);
    // path_pos[s]: position on the current walk, or unseen/done
    std::vector<std::uint32_t> path_pos(count, unseen);
    std::vector<std::uint32_t> path;

    for (std::size_t start = 0; start < count; ++start) {
        if (path_pos[start] != unseen) continue;
        path.clear();
        std::uint32_t s = static_cast<std::uint32_t>(start);
        while (path_pos[s] == unseen) {
            if (next[s] >= count) throw Error(ErrorCode::index_out_of_range, "successor outside the state space");
            path_pos[s] = static_cast<std::uint32_t>(path.size());
            path.push_back(s);
            s = next[s];
        }
        std::size_t tail_end = path.size();
        if (path_pos[s] != done) {
            // closed a new cycle at path[path_pos[s]..]
            const std::size_t first = path_pos[s];
            std::vector<std::uint64_t> cycle(path.begin() + static_cast<std::ptrdiff_t>(first), path.end());
            std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
            out.periodic_count += cycle.size();
            out.cycles.push_back(std::move(cycle));
            for (std::size_t i = first; i < path.size(); ++i) out.tail_lengths[path[i]] = 0;
            tail_end = first;
        }
        for (std::size_t i = tail_end; i-- > 0;) out.tail_lengths[path[i]] = out.tail_lengths[next[path[i]]] + 1;
        for (auto v : path) path_pos[v] = done;
    }
    std::sort(out.cycles.begin(), out.cycles.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

OrbitDecomposition orbit_decomposition(const DynamicalSystem& map, std::uint64_t budget) {
    const auto next = successor_table(map, budget);
    return decompose_functional_graph(next);
}

std::uint64_t periodic_point_count(const DynamicalSystem& sys, const FieldElem& h, std::uint64_t budget) {
    return orbit_decomposition(euler_discretize(sys, h), budget).periodic_count;
}

// ---- Collatz ---------------------------------------------------------------

std::string_view to_string(CollatzVariant v) noexcept { return v == CollatzVariant::paper ? "paper" : "accelerated"; }

CollatzVariant collatz_variant_from_name(std::string_view name) {
    if (name == "paper") return CollatzVariant::paper;
    if (name == "accelerated") return CollatzVariant::accelerated;
    throw Error(ErrorCode::invalid_argument, "unknown Collatz variant '" + std::string(name) + "'");
}

BigInt collatz_step(const BigInt& x, CollatzVariant variant) {
    if (boost::multiprecision::bit_test(x, 0)) {
        BigInt y = 3 * x + 1;
        return variant == CollatzVariant::accelerated ? BigInt(y >> 1) : y;
    }
    return x >> 1;
}

namespace {

constexpr std::uint64_t fast_limit = (std::numeric_limits<std::uint64_t>::max() - 1) / 3;

// Native fast path; returns nullopt when a state would overflow.
std::optional<std::uint64_t> step_native(std::uint64_t x, CollatzVariant variant) {
    if ((x & 1U) == 0) return x >> 1;
    if (x > fast_limit) return std::nullopt;
    const std::uint64_t y = 3 * x + 1;
    return variant == CollatzVariant::accelerated ? y >> 1 : y;
}

template <class Int, class Seen, class Step>
bool run_orbit(const Int& start, std::uint64_t budget, Seen& seen, Step step, CollatzRecord& rec) {
    std::vector<Int> traj{start};
    seen.emplace(start, 0);
    Int x = start;
    for (std::uint64_t n = 0; n < budget; ++n) {
        const auto next = step(x);
        if (!next) return false;
        const auto [it, inserted] = seen.emplace(*next, traj.size());
        if (!inserted) {
            rec.steps_to_cycle = it->second;
            break;
        }
        traj.push_back(*next);
        x = *next;
    }
    rec.trajectory.reserve(traj.size());
    for (const auto& v : traj) rec.trajectory.emplace_back(v);
    return true;
}

}  // namespace

CollatzRecord collatz_orbit(const BigInt& start, CollatzVariant variant, std::uint64_t budget) {
    if (start < 0) throw Error(ErrorCode::invalid_argument, "Collatz start must be nonnegative");
    CollatzRecord rec;
    rec.start = start;
    rec.variant = variant;
    rec.budget = budget;

    bool finished = false;
    if (start <= fast_limit) {
        std::unordered_map<std::uint64_t, std::uint64_t> seen;
        finished = run_orbit(start.convert_to<std::uint64_t>(), budget, seen,
                             [variant](std::uint64_t x) { return step_native(x, variant); }, rec);
    }
    if (!finished) {
        rec.steps_to_cycle.reset();
        std::map<BigInt, std::uint64_t> seen;
        run_orbit(start, budget, seen, [variant](const BigInt& x) { return std::optional<BigInt>(collatz_step(x, variant)); },
                  rec);
    }

    if (!rec.steps_to_cycle) {
        rec.budget_exhausted = true;
        return rec;
    }
    rec.cycle.assign(rec.trajectory.begin() + static_cast<std::ptrdiff_t>(*rec.steps_to_cycle), rec.trajectory.end());
    std::rotate(rec.cycle.begin(), std::min_element(rec.cycle.begin(), rec.cycle.end()), rec.cycle.end());

    // replay: the map must carry each cycle element to the next and close up
    rec.cycle_verified = true;
    for (std::size_t i = 0; i < rec.cycle.size(); ++i)
        if (collatz_step(rec.cycle[i], variant) != rec.cycle[(i + 1) % rec.cycle.size()]) rec.cycle_verified = false;
    return rec;
}

std::vector<std::uint8_t> parity_vector(std::uint64_t x, unsigned k) {
    std::vector<std::uint8_t> out;
    out.reserve(k);
    for (unsigned j = 0; j < k; ++j) {
        const bool odd = (x & 1U) != 0;
        out.push_back(odd ? 1 : 0);
        x = odd ? (3 * x + 1) / 2 : x / 2;
    }
    return out;
}

bool parity_bijection_check(unsigned k) {
    if (k > 16) throw Error(ErrorCode::invalid_argument, "parity bijection check supports k <= 16");
    const std::uint64_t count = std::uint64_t{1} << k;
    std::vector<bool> hit(count, false);
    for (std::uint64_t r = 0; r < count; ++r) {
        std::uint64_t code = 0;
        for (auto bit : parity_vector(r, k)) code = (code << 1U) | bit;
        if (hit[code]) return false;
        hit[code] = true;
    }
    return true;
}

}  // namespace dmod
