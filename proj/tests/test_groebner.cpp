#include "doctest.h"
#include "dmod/error.hpp"
#include "dmod/groebner.hpp"
#include "oracles.hpp"

using namespace dmod;

namespace {
const std::vector<std::string> xy{"x", "y"};
std::vector<MPoly> L(const char* text, Domain d, const std::vector<std::string>& vars = xy) {
    return poly_parse_list(text, vars, d);
}
MPoly P(const char* text, Domain d, const std::vector<std::string>& vars = xy) { return poly_parse(text, vars, d); }
}  // namespace

TEST_CASE("small bases") {
    const auto f2 = Domain::prime(2), q = Domain::rationals();
    CHECK(buchberger(L("x^2; y^2", f2)).generators == L("x^2; y^2", f2));
    CHECK(buchberger(L("x^2 - y; y^2", q)).generators == L("x^2 - y; y^2", q));
    const auto unit = buchberger(L("x; x + 1", q));
    CHECK(unit.is_unit());
    CHECK(unit.generators == L("1", q));
    CHECK(buchberger(L("2*x*y + 4*y", q)).generators == L("x*y + 2*y", q));
    CHECK(buchberger(L("0", q)).generators.empty());
}

TEST_CASE("normal forms") {
    const auto q = Domain::rationals();
    const auto g = buchberger(L("x^2 - y; y^2", q));
    CHECK(normal_form(P("x^3", q), g) == P("x*y", q));
    CHECK(normal_form(P("x^4", q), g).is_zero());
    CHECK(s_polynomial(P("x^2 - y", q), P("y^2", q), MonomialOrder{}) == P("-y^3", q));
}

TEST_CASE("quotient dimensions and standard monomials") {
    const auto f2 = Domain::prime(2), q = Domain::rationals();
    const auto g = buchberger(L("x^2; y^2", f2));
    CHECK(quotient_dimension(g) == 4u);
    const auto sm = standard_monomials(g);
    REQUIRE(sm);
    CHECK(*sm == std::vector<Exponent>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    CHECK(quotient_dimension(buchberger(L("x", q, {"x"}))) == 1u);
    CHECK_FALSE(quotient_dimension(buchberger(L("x*y", q))));
    CHECK(quotient_dimension(buchberger(L("1", q))) == 0u);
}

TEST_CASE("lex and grevlex describe the same ideal") {
    const auto q = Domain::rationals();
    const auto gens = L("x^2 + y^2 - 1; x - y", q);
    const auto lex = buchberger(gens, MonomialOrder(OrderKind::lex));
    const auto grl = buchberger(gens);
    CHECK(quotient_dimension(lex) == 2u);
    CHECK(quotient_dimension(grl) == 2u);
    for (const auto& g : lex.generators) CHECK(normal_form(g, grl).is_zero());
    for (const auto& g : grl.generators) CHECK(normal_form(g, lex).is_zero());
    CHECK(lex.generators.back() == P("y^2 - 1/2", q));
}

TEST_CASE("local orders are rejected") {
    CHECK_THROWS_AS(buchberger(L("x", Domain::rationals()), MonomialOrder(OrderKind::local_degree_anti)), Error);
    const std::vector<MPoly> mixed{P("x", Domain::rationals()), P("x", Domain::prime(3))};
    CHECK_THROWS_AS(buchberger(mixed), Error);
}

TEST_CASE("local dimensions and Milnor numbers") {
    const auto q = Domain::rationals(), f2 = Domain::prime(2);
    CHECK(local_dimension(L("3*y^2; 2*x + 3*x^2", q)).dimension == 2);
    CHECK(local_dimension(L("2*x; 2*y", q)).dimension == 1);
    CHECK(local_dimension(L("3*x^2; -2*y", q)).dimension == 2);
    CHECK(milnor_number(P("y^3 + x^2 + x^3", f2)) == 4u);
    CHECK(milnor_number(P("y^3 + x^2 + x^3", q)) == 2u);
    CHECK(milnor_number(P("x1^2 + x2^2 + x3^2", q, {"x1", "x2", "x3"})) == 1u);
    CHECK(milnor_number(P("x^3 - y^2", q)) == 2u);
    CHECK_FALSE(milnor_number(P("x^2", f2, {"x"})));
    CHECK_FALSE(milnor_number(P("x*y", q).pow(2)));
    CHECK_THROWS_AS(local_dimension(L("x; y", q), 1), Error);
    // The global quotient counts the second critical point x = -2/3; the local one does not.
    CHECK(quotient_dimension(buchberger(L("3*y^2; 2*x + 3*x^2", q))) == 4u);
}

TEST_CASE("tame and wild parts") {
    const auto q = Domain::rationals();
    const auto r2 = tame_wild_split(P("y^3 + x^2 + x^3", q), 2);
    CHECK(r2.char_p == 4u);
    CHECK(r2.tame == 2u);
    CHECK(r2.wild == 2);
    const auto r7 = tame_wild_split(P("y^3 + x^2 + x^3", q), 7);
    CHECK(r7.char_p == 2u);
    CHECK(r7.wild == 0);
    const auto deg = tame_wild_split(P("x^2", q, {"x"}), 2);
    CHECK_FALSE(deg.char_p);
    CHECK_FALSE(deg.wild);
    CHECK_FALSE(deg.anomalies.empty());
    CHECK_THROWS_AS(tame_wild_split(P("x", Domain::prime(3), {"x"}), 3), Error);
}

TEST_CASE("random bases are Groebner bases of their ideals") {
    oracle::Rng rng(5);
    for (const Domain d : {Domain::prime(2), Domain::prime(3), Domain::prime(7), Domain::rationals()})
        for (int i = 0; i < 15; ++i) {
            std::vector<MPoly> gens;
            for (int k = 0; k < 3; ++k) gens.push_back(oracle::random_poly(rng, 3, d, 3, 3));
            const auto g = buchberger(gens);
            CHECK(s_pairs_reduce_to_zero(g));
            for (const auto& f : gens) CHECK(normal_form(f, g).is_zero());
            const auto h = oracle::random_poly(rng, 3, d, 5, 6);
            const auto r = normal_form(h, g);
            CHECK(normal_form(r, g) == r);
            CHECK(normal_form(h - r, g).is_zero());
        }
}

TEST_CASE("membership agrees with the cofactor oracle") {
    oracle::Rng rng(17);
    int members = 0, nonmembers = 0;
    for (const Domain d : {Domain::prime(2), Domain::prime(3)})
        for (int i = 0; i < 30; ++i) {
            std::vector<MPoly> gens;
            for (int k = 0; k < 2; ++k) {
                auto g = oracle::random_poly(rng, 2, d, 2, 3);
                if (i % 4 >= 2) g = oracle::without_constant_term(g);  // ideal inside (x, y)
                gens.push_back(g);
            }
            const auto g = buchberger(gens);
            MPoly f = oracle::random_poly(rng, 2, d, 3, 3);
            if (i % 2 == 0) f = gens[0] * oracle::random_poly(rng, 2, d, 2, 2) + gens[1] * oracle::random_poly(rng, 2, d, 2, 2);
            const bool gb = normal_form(f, g).is_zero();
            CHECK(gb == oracle::cofactor_member(f, gens, 8));
            (gb ? members : nonmembers)++;
        }
    CHECK(members > 10);
    CHECK(nonmembers > 10);
}
