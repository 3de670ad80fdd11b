#include "doctest.h"
#include "dmod/error.hpp"
#include "dmod/weyl.hpp"
#include "oracles.hpp"

using namespace dmod;

namespace {
const std::vector<std::string> x1{"x"};
const std::vector<std::string> xy{"x", "y"};
WeylOperator op(const char* text, Domain d, const std::vector<std::string>& vars = x1) {
    return operator_parse(text, vars, d);
}
MPoly P(const char* text, Domain d, const std::vector<std::string>& vars = x1) { return poly_parse(text, vars, d); }
}  // namespace

TEST_CASE("applying operators") {
    const auto q = Domain::rationals();
    CHECK(op("d1^3", q).apply(P("1 + x + x^2 + x^3", q)) == P("6", q));
    CHECK(WeylOperator::identity(1, q).apply(P("x^2 + 3", q)) == P("x^2 + 3", q));
    CHECK(op("dx", q).apply(P("x^2", q)) == P("2*x", q));
    CHECK(op("x*dx^2 + dy", q, xy).apply(P("x^3*y + y^2", q, xy)) == P("6*x^2*y + x^3 + 2*y", q, xy));
    CHECK(op_apply(op("d1^3", Domain::prime(3)), P("x^3", Domain::prime(3))).is_zero());
}

TEST_CASE("normal form of products") {
    const auto q = Domain::rationals(), f2 = Domain::prime(2);
    CHECK(op("dx*x", q) == op("x*dx + 1", q));
    CHECK(op_compose(op("dx^2", q), op("x^2", q)) == op("x^2*dx^2 + 4*x*dx + 2", q));
    CHECK(op_compose(op("dx^2", f2), op("x^2", f2)) == op("x^2*dx^2", f2));
    CHECK(op("dx^2", q).compose(op("x^2", q)).to_string(x1) == "x^2*dx^2 + 4*x*dx + 2");
    CHECK(op("dy*x", q, xy) == op("x*dy", q, xy));
}

TEST_CASE("derivative tokens") {
    CHECK(derivative_index("d1", xy) == 0u);
    CHECK(derivative_index("d2", xy) == 1u);
    CHECK(derivative_index("dy", xy) == 1u);
    CHECK_FALSE(derivative_index("x", xy));
    CHECK_THROWS_AS(op("d3", Domain::rationals(), xy), Error);
    CHECK_THROWS_AS(op("dz", Domain::rationals(), xy), Error);
}

TEST_CASE("Leibniz expansion of d^k o x^m matches the closed form") {
    // d^k x^m = sum_j C(k,j) m!/(m-j)! x^(m-j) d^(k-j)
    const auto q = Domain::rationals();
    for (unsigned k = 0; k <= 5; ++k)
        for (unsigned m = 0; m <= 5; ++m) {
            const auto lhs = op_compose(WeylOperator::partial(1, 0, q, k), WeylOperator::multiplication(
                                                                              MPoly::monomial({m}, FieldElem::one(q))));
            WeylOperator rhs(1, q);
            std::uint64_t binom = 1;
            for (unsigned j = 0; j <= std::min(k, m); ++j) {
                if (j > 0) binom = binom * (k - j + 1) / j;
                const auto c = static_cast<std::int64_t>(binom * oracle::falling_factorial(m, j));
                rhs.add_term({k - j}, MPoly::monomial({m - j}, FieldElem(q, c)));
            }
            CHECK(lhs == rhs);
        }
}

TEST_CASE("composition agrees with successive application") {
    oracle::Rng rng(99);
    for (const Domain d : {Domain::prime(2), Domain::prime(3), Domain::prime(5), Domain::rationals()})
        for (int i = 0; i < 30; ++i) {
            const auto p = oracle::random_operator(rng, 2, d, 2, 2, 3);
            const auto q = oracle::random_operator(rng, 2, d, 2, 2, 3);
            const auto f = oracle::random_poly(rng, 2, d, 5, 5);
            CHECK(op_apply(op_compose(p, q), f) == op_apply(p, op_apply(q, f)));
        }
}

TEST_CASE("d^p kills every monomial in characteristic p") {
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL}) {
        const auto d = Domain::prime(p);
        const auto dp = WeylOperator::partial(1, 0, d, static_cast<std::uint32_t>(p));
        for (std::uint32_t n = 0; n <= 30; ++n) CHECK(dp.apply(MPoly::monomial({n}, FieldElem::one(d))).is_zero());
    }
}

TEST_CASE("order and zero-order terms") {
    const auto q = Domain::rationals();
    CHECK(op("x*dx^2 + dx + 3", q).order() == 2);
    CHECK(op("x*dx^2 + dx + 3", q).has_zero_order_term());
    CHECK_FALSE(op("x^4*dx", q).has_zero_order_term());
    CHECK(op("x^4*dx", q).coefficient_degree() == 4);
    CHECK(op("dx - dx", q).is_zero());
    const auto j = op("x*dx + 2", q).to_json(x1);
    CHECK(j["terms"].size() == 2);
}

TEST_CASE("stability under derivatives") {
    const auto q = Domain::rationals(), f2 = Domain::prime(2), f3 = Domain::prime(3);
    const std::vector<MPoly> x2q{P("x^2", q)}, x2f2{P("x^2", f2)}, x3f3{P("x^3", f3)};
    CHECK(is_d_stable(x2f2).stable);
    CHECK(is_d_stable(x3f3).stable);
    const auto rep = is_d_stable(x2q);
    CHECK_FALSE(rep.stable);
    REQUIRE(rep.witness);
    CHECK(rep.witness->residue == P("2*x", q));
    const std::vector<MPoly> unit{P("x^2", q), P("x", q)};
    CHECK_FALSE(is_d_stable(unit).stable);
    const std::vector<MPoly> one{P("1 + x", q), P("x", q)};
    CHECK(is_d_stable(one).stable);
}
