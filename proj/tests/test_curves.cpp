#include <cmath>
#include <set>

#include "doctest.h"
#include "dmod/curves.hpp"
#include "dmod/error.hpp"
#include "oracles.hpp"

using namespace dmod;

TEST_CASE("point counts") {
    CHECK(naive_count(CurveSpec::make(5, 1, 1)) == 4);
    CHECK(naive_count(CurveSpec::make(2, 1, 1)) == oracle::curve_points(2, 1, 1));
    CHECK(naive_count(CurveSpec::make(3, 1, 0)) == 4);
    CHECK_THROWS_AS(CurveSpec::make(5, 5, 1), Error);
    CHECK_THROWS_AS(CurveSpec::make(6, 1, 1), Error);
    const auto c = CurveSpec::make(7, -1, 9);
    CHECK(c.a == 6);
    CHECK(c.b == 2);
}

TEST_CASE("slices") {
    CHECK(slice_counts(CurveSpec::make(5, 1, 1)) == std::vector<unsigned>{3, 0, 0, 0, 0});
    const auto c = CurveSpec::make(7, 1, 0);
    const auto l = slice_counts(c);
    const auto lm = slice_counts_with_multiplicity(c);
    CHECK(l[0] == 1);   // x^3 = 0
    CHECK(lm[0] == 3);  // triple root
    const auto r = verify_identity(c);
    CHECK(r.identity_holds);
}

TEST_CASE("singular curves") {
    CHECK(singularity_check(CurveSpec::make(2, 1, 1)));
    CHECK_FALSE(singularity_check(CurveSpec::make(5, 1, 1)));
    CHECK(singularity_check(CurveSpec::make(3, 1, 0)));
    CHECK_THROWS_AS(hasse_check(CurveSpec::make(3, 1, 0)), Error);
    const auto r = verify_identity(CurveSpec::make(3, 1, 0));
    CHECK(r.singular);
    CHECK_FALSE(r.hasse_ok);
}

TEST_CASE("Hasse bound") {
    CHECK(hasse_bound(5) == 5);
    CHECK(hasse_bound(101) == 21);
    CHECK(hasse_check(CurveSpec::make(5, 1, 1)));
    CHECK(hasse_check(CurveSpec::make(7, 1, 1)));
}

TEST_CASE("identity on every curve over small primes") {
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL})
        for (std::uint64_t a = 1; a < p; ++a)
            for (std::uint64_t b = 0; b < p; ++b) {
                const auto c = CurveSpec::make(p, static_cast<std::int64_t>(a), static_cast<std::int64_t>(b));
                const auto r = verify_identity(c);
                CHECK(r.identity_holds);
                CHECK(r.naive_count == oracle::curve_points(p, a, b));
                for (unsigned li : r.l) CHECK(li <= 3);
                if (!r.singular) CHECK(*r.hasse_ok);
                CHECK(r.hasse_ok.has_value() == !r.singular);
            }
}

TEST_CASE("critical locus") {
    const std::vector<std::string> xy{"x", "y"};
    const auto pts = critical_locus(poly_parse("y^3 + x^2 + x^3", xy, Domain::prime(2)), 1000);
    CHECK(pts == std::vector<std::vector<std::uint64_t>>{{0, 0}});
    CHECK(critical_locus(poly_parse("x^2 + y^2", xy, Domain::prime(5)), 1000).size() == 1);
    CHECK(critical_locus(poly_parse("4 + x^3 + x", {"x"}, Domain::prime(5)), 1000).empty());
}

TEST_CASE("sampling is seeded") {
    const auto a = sample_curves(31, 5, 42);
    const auto b = sample_curves(31, 5, 42);
    REQUIRE(a.size() == 11 * 5);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].p == b[i].p);
        CHECK(a[i].a == b[i].a);
        CHECK(a[i].b == b[i].b);
        CHECK(a[i].a != 0);
    }
    const auto c = sample_curves(31, 5, 43);
    bool differs = false;
    for (std::size_t i = 0; i < a.size(); ++i) differs = differs || a[i].a != c[i].a || a[i].b != c[i].b;
    CHECK(differs);
}
