#include <random>

#include "doctest.h"
#include "dmod/error.hpp"
#include "dmod/field.hpp"
#include "dmod/matrix.hpp"

using namespace dmod;

namespace {
FieldElem fe(Domain d, std::int64_t v) { return FieldElem(d, v); }
Rational q(std::int64_t n, std::int64_t m) { return Rational(n, m); }
}  // namespace

TEST_CASE("primality by trial division") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(101));
    CHECK(is_prime(4294967291ULL));
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
    CHECK_FALSE(is_prime(4294967295ULL));
}

TEST_CASE("domain construction") {
    CHECK(Domain::prime(7).name() == "F_7");
    CHECK(Domain::rationals().name() == "Q");
    CHECK(Domain().is_rational());
    CHECK_THROWS_AS(Domain::prime(6), Error);
    try {
        Domain::prime(9);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::not_prime);
        CHECK(e.is_usage_error());
    }
    CHECK_THROWS_AS(Domain::prime(max_modulus + 2), Error);
}

TEST_CASE("inverses") {
    CHECK(fe(Domain::prime(7), 1).inv() == fe(Domain::prime(7), 1));
    CHECK(fe(Domain::prime(5), 2).inv() == fe(Domain::prime(5), 3));
    CHECK((fe(Domain::prime(5), 2) * fe(Domain::prime(5), 3)).is_one());
    const FieldElem three_quarters(Domain::rationals(), q(3, 4));
    CHECK(field_inv(three_quarters) == FieldElem(Domain::rationals(), q(4, 3)));
    CHECK(field_inv(three_quarters).to_string() == "4/3");
    CHECK_THROWS_AS(FieldElem::zero(Domain::prime(5)).inv(), Error);
    CHECK_THROWS_AS(FieldElem::zero(Domain::rationals()).inv(), Error);
}

TEST_CASE("rationals map into prime fields through the denominator") {
    const auto f5 = Domain::prime(5);
    CHECK(FieldElem(f5, q(1, 2)) == fe(f5, 3));
    CHECK(FieldElem(f5, q(-3, 4)) == fe(f5, 3));  // -3 * 4 = -12 = 3
    CHECK_THROWS_AS(FieldElem(f5, q(1, 5)), Error);
    CHECK(FieldElem(f5, std::int64_t{-1}).residue() == 4);
    CHECK(FieldElem(f5, BigInt("123456789012345678901234567890")).residue() == 0);
}

TEST_CASE("domain mismatch is reported") {
    CHECK_THROWS_AS(fe(Domain::prime(5), 1) + fe(Domain::prime(7), 1), Error);
    CHECK_THROWS_AS(fe(Domain::prime(5), 1) * fe(Domain::rationals(), 1), Error);
}

TEST_CASE("field axioms on random elements") {
    std::mt19937_64 rng(7);
    for (std::uint64_t p : {2ULL, 3ULL, 65537ULL, 4294967291ULL}) {
        const auto d = Domain::prime(p);
        std::uniform_int_distribution<std::int64_t> dist(-1'000'000'000, 1'000'000'000);
        for (int i = 0; i < 200; ++i) {
            const FieldElem a = fe(d, dist(rng)), b = fe(d, dist(rng)), c = fe(d, dist(rng));
            CHECK((a + b) * c == a * c + b * c);
            CHECK(a - a == FieldElem::zero(d));
            if (!a.is_zero()) CHECK((a / a).is_one());
        }
        if (p != 3) CHECK(fe(d, 3).pow(p - 1).is_one());
    }
    const auto qd = Domain::rationals();
    const FieldElem a(qd, q(-7, 3)), b(qd, q(5, 11));
    CHECK((a * b).to_string() == "-35/33");
    CHECK((a + b).to_string() == "-62/33");
    CHECK(a.is_negative());
    CHECK((a / b) * b == a);
}

TEST_CASE("coefficient literals") {
    CHECK(parse_coefficient("12", Domain::prime(5)).residue() == 2);
    CHECK(parse_coefficient("3/4", Domain::rationals()).to_string() == "3/4");
    CHECK(parse_coefficient("1/2", Domain::prime(3)).residue() == 2);
    CHECK_THROWS_AS(parse_coefficient("1/0", Domain::rationals()), Error);
    CHECK_THROWS_AS(parse_coefficient("abc", Domain::rationals()), Error);
}

TEST_CASE("kernel bases") {
    const auto f5 = Domain::prime(5), f3 = Domain::prime(3), f2 = Domain::prime(2);
    const auto id = Matrix::from_rows({{fe(f5, 1), fe(f5, 0)}, {fe(f5, 0), fe(f5, 1)}}, f5);
    CHECK(kernel_basis(id).empty());
    CHECK(kernel_basis(Matrix(2, 2, f3)).size() == 2);
    const auto ones = Matrix::from_rows({{fe(f2, 1), fe(f2, 1)}, {fe(f2, 1), fe(f2, 1)}}, f2);
    const auto k = kernel_basis(ones);
    REQUIRE(k.size() == 1);
    CHECK(k[0] == Vector{fe(f2, 1), fe(f2, 1)});
    CHECK(rank(ones) == 1);
    CHECK_THROWS_AS(Matrix::from_rows({{fe(f2, 1)}, {fe(f2, 1), fe(f2, 0)}}, f2), Error);
    CHECK_THROWS_AS(Matrix::from_rows({{fe(f3, 1)}}, f2), Error);
}

TEST_CASE("rank-nullity and kernel vectors on random matrices") {
    std::mt19937_64 rng(11);
    for (std::uint64_t p : {2ULL, 3ULL, 7ULL}) {
        const auto d = Domain::prime(p);
        for (int trial = 0; trial < 50; ++trial) {
            const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
            Matrix m(r, c, d);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < c; ++j) m(i, j) = fe(d, static_cast<std::int64_t>(rng() % p));
            const auto k = kernel_basis(m);
            CHECK(rank(m) + k.size() == c);
            for (const auto& v : k)
                for (const auto& x : m * v) CHECK(x.is_zero());
            Vector x(c, FieldElem::zero(d));
            for (auto& e : x) e = fe(d, static_cast<std::int64_t>(rng() % p));
            const auto sol = solve(m, m * x);
            REQUIRE(sol);
            CHECK(m * *sol == m * x);
        }
    }
    const auto qd = Domain::rationals();
    const auto m = Matrix::from_rows({{fe(qd, 1), fe(qd, 2)}, {fe(qd, 2), fe(qd, 4)}}, qd);
    CHECK_FALSE(solve(m, {fe(qd, 1), fe(qd, 1)}));
}
