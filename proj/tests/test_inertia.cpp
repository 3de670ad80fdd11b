#include "doctest.h"
#include "dmod/error.hpp"
#include "dmod/inertia.hpp"
#include "dmod/weyl.hpp"

using namespace dmod;

namespace {
const std::vector<std::string> x1{"x"};
WeylOperator D(Domain d, std::uint32_t power = 1) { return WeylOperator::partial(1, 0, d, power); }
MPoly P(const char* text, Domain d, const std::vector<std::string>& vars = x1) { return poly_parse(text, vars, d); }
}  // namespace

TEST_CASE("quotient modules") {
    const QuotientModule m(5, 1, 4);
    CHECK(m.dimension() == 4);
    CHECK(m.reduce(P("1 + x^5 + x^3", m.domain())) == P("1 + x^3", m.domain()));
    const QuotientModule m2(3, 2, 3);
    CHECK(m2.dimension() == 6);
    CHECK(m2.basis().front() == Exponent{0, 0});
    const auto f = P("1 + 2*x*y + y^2 + x^3", m2.domain(), {"x", "y"});
    CHECK(m2.element(m2.coordinates(f)) == m2.reduce(f));
    CHECK_THROWS_AS(QuotientModule(4, 1, 2), Error);
    CHECK_THROWS_AS(QuotientModule(5, 1, 0), Error);
}

TEST_CASE("kernels on truncated modules") {
    const QuotientModule f2x4(2, 1, 4);
    const auto k = kernel_on_quotient(D(f2x4.domain()), f2x4);
    REQUIRE(k.size() == 2);
    CHECK(k[0] == P("1", f2x4.domain()));
    CHECK(k[1] == P("x^2", f2x4.domain()));
    CHECK(kernel_on_quotient(WeylOperator::identity(1, f2x4.domain()), f2x4).empty());
    const QuotientModule f3x4(3, 1, 4);
    CHECK(kernel_on_quotient(D(f3x4.domain(), 3), f3x4).size() == 4);
    const auto mat = operator_matrix(D(f2x4.domain()), f2x4);
    CHECK(mat.rows() == 4);
    CHECK(mat(0, 1).is_one());  // d x = 1
}

TEST_CASE("constants are the kernel of d when m <= p") {
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL})
        for (std::uint32_t m = 1; m <= p; ++m) {
            const QuotientModule mod(p, 1, m);
            const auto k = kernel_on_quotient(D(mod.domain()), mod);
            REQUIRE(k.size() == 1);
            CHECK(k[0] == P("1", mod.domain()));
        }
}

TEST_CASE("membership under strict semantics") {
    const QuotientModule f2x4(2, 1, 4);
    const auto r = inertia_membership(D(f2x4.domain()), 1, f2x4);
    REQUIRE(r.per_k.size() == 2);
    CHECK(r.per_k[0].kernel_dimension == 2);
    CHECK(r.per_k[1].kernel_dimension == 4);
    CHECK_FALSE(r.per_k[1].kernel_equals_constants);
    CHECK_FALSE(r.member);

    const QuotientModule f5x2(5, 1, 2);
    const auto r0 = inertia_membership(D(f5x2.domain()), 0, f5x2);
    CHECK(r0.member);
    CHECK(r0.per_k[0].kernel_dimension == 1);

    const QuotientModule f7x3(7, 1, 3);
    CHECK_FALSE(inertia_membership(D(f7x3.domain(), 5), 0, f7x3).member);
    CHECK_THROWS_AS(inertia_membership(WeylOperator::identity(1, f7x3.domain()), 0, f7x3), Error);
}

TEST_CASE("kernel dimension grows with k for powers of d") {
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL})
        for (std::uint32_t power = 1; power <= 3; ++power) {
            const QuotientModule mod(p, 1, 9);
            const auto r = inertia_membership(D(mod.domain(), power), 6, mod);
            for (std::size_t k = 1; k < r.per_k.size(); ++k)
                CHECK(r.per_k[k].kernel_dimension >= r.per_k[k - 1].kernel_dimension);
        }
    const QuotientModule mod(3, 2, 4);
    const auto dx = WeylOperator::partial(2, 0, mod.domain());
    const auto r = inertia_membership(dx, 3, mod, std::nullopt, 1);
    for (std::size_t k = 1; k < r.per_k.size(); ++k)
        CHECK(r.per_k[k].kernel_dimension >= r.per_k[k - 1].kernel_dimension);
}

TEST_CASE("element annihilation") {
    for (const auto& [p, value] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{7, 6}, {11, 6}, {3, 0}, {2, 0}}) {
        const QuotientModule mod(p, 1, 4);
        const auto chk = annihilation_check(D(mod.domain()), 2, P("1 + x + x^2 + x^3", mod.domain()), mod);
        CHECK(chk.value == MPoly::constant(1, FieldElem(mod.domain(), static_cast<std::int64_t>(value))));
        CHECK(chk.annihilated == (value == 0));
    }
    // k = 0 agrees with differentiating and truncating.
    const QuotientModule mod(5, 1, 3);
    const auto u = P("1 + 2*x + 3*x^2", mod.domain());
    CHECK(annihilation_check(D(mod.domain()), 0, u, mod).value == mod.reduce(u.derivative(0)));

    const QuotientModule f2x4(2, 1, 4);
    const auto r = inertia_membership(D(f2x4.domain()), 2, f2x4, P("1 + x + x^2 + x^3", f2x4.domain()));
    for (const auto& lvl : r.per_k) {
        REQUIRE(lvl.element);
    }
    CHECK_FALSE(r.per_k[0].element->annihilated);
    CHECK(r.per_k[1].element->annihilated);
    CHECK(r.per_k[2].element->annihilated);
}

TEST_CASE("Hessian nondegeneracy") {
    const std::vector<std::string> xy{"x", "y"};
    const auto q = Domain::rationals();
    CHECK(morse_check(P("x^2 + y^2", q, xy)));
    CHECK_FALSE(morse_check(P("x^2 + y^2", Domain::prime(2), xy)));
    CHECK_FALSE(morse_check(P("y^3 + x^2 + x^3", q, xy)));
    CHECK(morse_check(P("x*y + x^3", q, xy)));
    CHECK_THROWS_AS(morse_check(P("x + y^2", q, xy)), Error);
    const auto h = hessian_at_origin(P("y^3 + x^2 + x^3", q, xy));
    CHECK(h(0, 0) == FieldElem(q, std::int64_t{2}));
    CHECK(h(1, 1).is_zero());
}
