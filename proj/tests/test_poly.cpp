#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "artin/errors.hpp"
#include "artin/parse.hpp"
#include "artin/ring.hpp"

using namespace artin;

namespace {
WeightedRing xy() { return WeightedRing({"x", "y"}, {1, 1}); }
}  // namespace

TEST_CASE("monomial order: weighted degree first, grevlex ties") {
    WeightedRing r({"x", "y"}, {1, 1});
    CHECK(r.cmp(Monomial{2, 0}, Monomial{0, 1}) > 0);   // degree wins
    CHECK(r.cmp(Monomial{1, 1}, Monomial{0, 2}) > 0);   // grevlex: smaller last exponent wins
    CHECK(r.cmp(Monomial{3, 0}, Monomial{1, 1}) > 0);
    CHECK(r.cmp(Monomial{1, 0}, Monomial{1, 0}) == 0);

    WeightedRing w({"b", "c"}, {2, 1});
    // b^3 and c^6 both have weighted degree 6; b^3 is larger.
    CHECK(w.wdeg(Monomial{3, 0}) == 6);
    CHECK(w.cmp(Monomial{3, 0}, Monomial{0, 6}) > 0);

    WeightedRing v({"x", "y", "z"}, {1, 1, 2});
    // y^3 beats x*z at equal weighted degree 3.
    CHECK(v.cmp(Monomial{0, 3, 0}, Monomial{1, 0, 1}) > 0);
}

TEST_CASE("arithmetic and normalization") {
    WeightedRing r = xy();
    Polynomial x = Polynomial::variable(r, 0);
    Polynomial y = Polynomial::variable(r, 1);
    Polynomial s = add(r, x, y);
    Polynomial sq = mul(r, s, s);
    CHECK(sq == parse_polynomial(r, "x^2 + 2*x*y + y^2"));
    CHECK(sub(r, sq, sq).is_zero());
    CHECK(mul(r, s, Polynomial::zero()).is_zero());
    CHECK(pow(r, s, 0) == Polynomial::constant(r, 1));
    CHECK(pow(r, s, 3) == mul(r, sq, s));
    CHECK(scale(r, s, Rational(0)).is_zero());
    // from_terms merges duplicates and drops zeros
    Polynomial z = Polynomial::from_terms(
        r, {Term{Monomial{1, 0}, 1}, Term{Monomial{1, 0}, -1}, Term{Monomial{0, 1}, 2}});
    CHECK(z == scale(r, y, 2));
}

TEST_CASE("homogeneity under weights") {
    WeightedRing bc({"b", "c"}, {2, 1});
    CHECK(parse_polynomial(bc, "b^3 - c^6").is_homogeneous(bc));
    CHECK(parse_polynomial(bc, "b^3 - c^6").homogeneous_degree(bc) == 6);

    WeightedRing abc({"a", "b", "c"}, {1, 2, 3});
    CHECK(parse_polynomial(abc, "a^3 - 3*a*b + 3*c").is_homogeneous(abc));

    WeightedRing r = xy();
    CHECK_FALSE(parse_polynomial(r, "x + y^2").is_homogeneous(r));
    CHECK(Polynomial::zero().is_homogeneous(r));
}

TEST_CASE("parser handles literals, rationals, parens, whitespace") {
    WeightedRing r = xy();
    CHECK(parse_polynomial(r, " (x+y)^2 ") == parse_polynomial(r, "x^2+2*x*y+y^2"));
    CHECK(parse_polynomial(r, "1/2 * x - 3/2*x") == scale(r, Polynomial::variable(r, 0), -1));
    CHECK(parse_polynomial(r, "-x + x").is_zero());
    CHECK(parse_polynomial(r, "0") == Polynomial::zero());
    CHECK(parse_polynomial(r, "7") == Polynomial::constant(r, 7));
    CHECK(parse_polynomial(r, "x^0") == Polynomial::constant(r, 1));
    CHECK(parse_polynomial(r, "2^3") == Polynomial::constant(r, 8));
}

TEST_CASE("parser reports positions") {
    WeightedRing r = xy();
    try {
        parse_polynomial(r, "x + qq");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.line == 1);
        CHECK(e.column == 5);
    }
    try {
        parse_polynomial(r, "x +\n y^");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.line == 2);
    }
    CHECK_THROWS_AS(parse_polynomial(r, "x/(x)"), parse_error);
    CHECK_THROWS_AS(parse_polynomial(r, "x/0"), parse_error);
    CHECK_THROWS_AS(parse_polynomial(r, "(x"), parse_error);
}

TEST_CASE("polynomial list parsing") {
    WeightedRing r = xy();
    auto list = parse_polynomial_list(r, "x^2; \n y^3 ;; x*y");
    CHECK(list.size() == 3);
    CHECK(list[1] == parse_polynomial(r, "y^3"));
}

TEST_CASE("to_string round-trips through the parser") {
    WeightedRing abc({"a", "b", "c"}, {1, 2, 3});
    for (const char* text : {"a^3 - 3*a*b + 3*c", "b^3 - 3*a*b*c + 3*c^2", "c^3", "-a + 1/3"}) {
        Polynomial p = parse_polynomial(abc, text);
        CHECK(parse_polynomial(abc, p.to_string(abc)) == p);
    }
}

TEST_CASE("prime field coefficients") {
    WeightedRing r({"x", "y"}, {1, 1}, FieldSpec::prime(5));
    Polynomial p = parse_polynomial(r, "3*x + 2*x");  // 5x == 0
    CHECK(p.is_zero());
    Polynomial q = parse_polynomial(r, "x/2");  // 2^{-1} = 3 mod 5
    CHECK(q == scale(r, Polynomial::variable(r, 0), 3));
    CHECK_THROWS_AS(FieldSpec::prime(6), semantic_error);
}

TEST_CASE("substitution") {
    WeightedRing r = xy();
    WeightedRing e({"e1", "e2"}, {1, 2});
    // x -> e1^2, y -> e2 turns x*y + x into e1^2*e2 + e1^2.
    Polynomial img = substitute(r, parse_polynomial(r, "x*y + x"), e,
                                {parse_polynomial(e, "e1^2"), parse_polynomial(e, "e2")});
    CHECK(img == parse_polynomial(e, "e1^2*e2 + e1^2"));
}
