#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace oracle {

namespace {

std::vector<dmod::Exponent> monomials_up_to(std::size_t nvars, unsigned degree) {
    std::vector<dmod::Exponent> out;
    dmod::Exponent e(nvars, 0);
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
        if (i == nvars) {
            out.push_back(e);
            return;
        }
        for (unsigned k = 0; k <= left; ++k) {
            e[i] = k;
            rec(i + 1, left - k);
        }
        e[i] = 0;
    };
    rec(0, degree);
    return out;
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

}  // namespace

dmod::MPoly random_poly(Rng& rng, std::size_t nvars, dmod::Domain d, unsigned max_degree, unsigned terms) {
    dmod::MPoly f(nvars, d);
    std::uniform_int_distribution<int> coeff(-4, 4);
    for (unsigned t = 0; t < terms; ++t) {
        dmod::Exponent e(nvars, 0);
        unsigned left = std::uniform_int_distribution<unsigned>(0, max_degree)(rng);
        for (std::size_t i = 0; i < nvars && left > 0; ++i) {
            const unsigned k = i + 1 == nvars ? left : std::uniform_int_distribution<unsigned>(0, left)(rng);
            e[i] = k;
            left -= k;
        }
        std::shuffle(e.begin(), e.end(), rng);
        f.add_term(e, dmod::FieldElem(d, std::int64_t{coeff(rng)}));
    }
    return f;
}

dmod::MPoly without_constant_term(const dmod::MPoly& f) {
    dmod::MPoly r(f.nvars(), f.domain());
    for (const auto& [e, c] : f.terms())
        if (dmod::total_degree(e) > 0) r.add_term(e, c);
    return r;
}

dmod::WeylOperator random_operator(Rng& rng, std::size_t nvars, dmod::Domain d, unsigned max_order,
                                   unsigned coeff_degree, unsigned terms) {
    dmod::WeylOperator op(nvars, d);
    for (unsigned t = 0; t < terms; ++t) {
        dmod::Exponent alpha(nvars, 0);
        for (auto& a : alpha) a = std::uniform_int_distribution<unsigned>(0, max_order)(rng);
        op.add_term(alpha, random_poly(rng, nvars, d, coeff_degree, 2));
    }
    return op;
}

bool member_with_cofactor_degree(const dmod::MPoly& f, const std::vector<dmod::MPoly>& gens,
                                 unsigned cofactor_degree) {
    const std::uint64_t p = f.domain().characteristic();
    const std::size_t n = f.nvars();
    const auto cofactor_monos = monomials_up_to(n, cofactor_degree);

    // Unknowns: coefficient of each cofactor monomial for each generator.
    // Equations: one per monomial appearing in some product or in f.
    std::map<dmod::Exponent, std::size_t> row_of;
    auto row = [&](const dmod::Exponent& e) {
        const auto [it, fresh] = row_of.emplace(e, row_of.size());
        return it->second;
    };
    std::vector<std::vector<std::pair<std::size_t, std::uint64_t>>> columns;
    for (const auto& g : gens)
        for (const auto& m : cofactor_monos) {
            std::vector<std::pair<std::size_t, std::uint64_t>> col;
            for (const auto& [e, c] : g.terms()) {
                dmod::Exponent prod(n);
                for (std::size_t i = 0; i < n; ++i) prod[i] = e[i] + m[i];
                col.emplace_back(row(prod), c.residue());
            }
            columns.push_back(std::move(col));
        }
    std::vector<std::pair<std::size_t, std::uint64_t>> rhs;
    for (const auto& [e, c] : f.terms()) rhs.emplace_back(row(e), c.residue());

    const std::size_t rows = row_of.size();
    const std::size_t cols = columns.size();
    std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols + 1, 0));
    for (std::size_t j = 0; j < cols; ++j)
        for (const auto& [r, c] : columns[j]) a[r][j] = (a[r][j] + c) % p;
    for (const auto& [r, c] : rhs) a[r][cols] = c;

    std::size_t pivot_row = 0;
    for (std::size_t j = 0; j < cols && pivot_row < rows; ++j) {
        std::size_t r = pivot_row;
        while (r < rows && a[r][j] == 0) ++r;
        if (r == rows) continue;
        std::swap(a[r], a[pivot_row]);
        const std::uint64_t inv = powmod(a[pivot_row][j], p - 2, p);
        for (auto& v : a[pivot_row]) v = v * inv % p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == pivot_row || a[i][j] == 0) continue;
            const std::uint64_t factor = a[i][j];
            for (std::size_t k = j; k <= cols; ++k) a[i][k] = (a[i][k] + (p - factor) * a[pivot_row][k]) % p;
        }
        ++pivot_row;
    }
    for (std::size_t i = pivot_row; i < rows; ++i)
        if (a[i][cols] != 0) return false;
    return true;
}

bool cofactor_member(const dmod::MPoly& f, const std::vector<dmod::MPoly>& gens, unsigned max_cofactor_degree) {
    if (f.is_zero()) return true;
    for (unsigned d = 0; d <= max_cofactor_degree; ++d)
        if (member_with_cofactor_degree(f, gens, d)) return true;
    return false;
}

std::uint64_t periodic_points_by_iteration(
    std::uint64_t p, std::size_t n,
    const std::function<std::vector<std::uint64_t>(const std::vector<std::uint64_t>&)>& step) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= p;
    std::uint64_t count = 0;
    std::vector<std::uint64_t> start(n, 0);
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        for (std::size_t i = n; i-- > 0;) {
            start[i] = c % p;
            c /= p;
        }
        auto x = start;
        for (std::uint64_t s = 0; s < total; ++s) {
            x = step(x);
            if (x == start) {
                ++count;
                break;
            }
        }
    }
    return count;
}

std::uint64_t curve_points(std::uint64_t p, std::uint64_t a, std::uint64_t b) {
    std::uint64_t count = 1;
    for (std::uint64_t x = 0; x < p; ++x)
        for (std::uint64_t y = 0; y < p; ++y)
            if ((y * y + a * (x * x % p * x % p) + b * x) % p == 0) ++count;
    return count;
}

std::uint64_t falling_factorial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < k; ++i) r *= n - i;
    return r;
}

}  // namespace oracle
