#include <cmath>

#include "doctest.h"
#include "helpers.hpp"

using namespace qrat;

TEST_CASE("ring operations")
{
    CHECK(P("1+q") * P("1-q") == P("1-q^2"));
    CHECK(P("q^-1+1") * LaurentPoly::q() == P("1+q"));
    CHECK((P("1+q") + P("-1-q")).is_zero());
    CHECK((P("1+q") + P("-1-q")).terms().empty());
    CHECK(P("2*q^3") - P("q^3") == LaurentPoly::monomial(3));
    CHECK(-P("1-q") == P("q-1"));
    CHECK(P("1+q").unit_scaled(-1, 2) == P("-q^2-q^3"));
}

TEST_CASE("canonical storage has nonzero ends")
{
    auto p = LaurentPoly::from_coeffs(-3, {0, 0, 1, 0, 2, 0});
    CHECK(p.low_degree() == -1);
    CHECK(p.high_degree() == 1);
    CHECK(p.term_count() == 2);
    CHECK(p == P("q^-1+2*q"));
}

TEST_CASE("string round trip")
{
    CHECK(P("1+2*q+q^2+q^3").to_string() == "1+2*q+q^2+q^3");
    CHECK(P("q^-2-q^-1").to_string() == "q^-2-q^-1");
    CHECK(LaurentPoly().to_string() == "0");
    CHECK(P("-3*q^-4+7").to_string() == "-3*q^-4+7");
    CHECK_THROWS_AS(LaurentPoly::parse("1+"), DomainError);
    CHECK_THROWS_AS(LaurentPoly::parse("q^"), DomainError);
    CHECK_THROWS_AS(LaurentPoly::parse("x"), DomainError);
}

TEST_CASE("q-integers")
{
    CHECK(LaurentPoly::q_int(3) == P("1+q+q^2"));
    CHECK(LaurentPoly::q_int(0).is_zero());
    CHECK(LaurentPoly::q_int(-2) == P("-q^-2-q^-1"));
}

TEST_CASE("evaluation")
{
    CHECK(P("1+q").eval(0.3) == doctest::Approx(1.3).epsilon(1e-15));
    CHECK(P("q^-2-q^-1").eval(0.3) == doctest::Approx(1 / 0.09 - 1 / 0.3).epsilon(1e-14));
    CHECK(LaurentPoly().eval(0.4) == 0.0);
    CHECK_THROWS_AS(P("1+q").eval(0.0), DomainError);
    CHECK_THROWS_AS(P("1+q").eval(-1.0), DomainError);
    CHECK(P("q^-2-q^-1").eval_exact(BigRational(3, 10)) == BigRational(70, 9));
}

TEST_CASE("equal up to unit")
{
    CHECK(equal_up_to_unit(P("q^-1+1"), P("1+q")));
    CHECK(equal_up_to_unit(P("1+q"), P("-q-q^2")));
    CHECK_FALSE(equal_up_to_unit(P("1+q"), P("1+q^2")));
    auto u = unit_ratio(P("-q-q^2"), P("1+q"));
    REQUIRE(u);
    CHECK(u->sign == -1);
    CHECK(u->exponent == 1);
    CHECK(equal_up_to_unit(std::vector<LaurentPoly>{P("1"), P("q")}, std::vector<LaurentPoly>{P("q"), P("q^2")}));
    CHECK_FALSE(equal_up_to_unit(std::vector<LaurentPoly>{P("1"), P("q")}, std::vector<LaurentPoly>{P("q"), P("q^3")}));
}

TEST_CASE("rational functions")
{
    RatFunc a(P("2+2*q"), P("2*q^2+2*q^3"));
    CHECK(a.num() == P("q^-2+q^-1"));
    CHECK(a.den() == P("1+q"));
    CHECK(RatFunc(P("1"), P("-q")).num() == P("-q^-1"));
    CHECK(RatFunc::inf().is_inf());
    CHECK(RatFunc::inf().num() == LaurentPoly(1));
    CHECK(RatFunc(P("3"), LaurentPoly()) == RatFunc::inf());
    CHECK(RatFunc(P("1-q^2"), P("1-q")).equivalent(RatFunc(P("1+q"))));
    CHECK_THROWS_AS(RatFunc(LaurentPoly(), LaurentPoly()), DomainError);
}

TEST_CASE("ring axioms on random polynomials")
{
    std::mt19937_64 rng(7);
    for (int i = 0; i < 300; ++i) {
        auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a - a == LaurentPoly());
        CHECK(LaurentPoly::from_terms(a.terms()) == a);
        CHECK(a.inverted_variable().inverted_variable() == a);
    }
}

TEST_CASE("evaluation is multiplicative")
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> qd(0.1, 0.9);
    for (int i = 0; i < 300; ++i) {
        auto a = random_poly(rng, 10), b = random_poly(rng, 10);
        double q = qd(rng);
        double lhs = (a * b).eval(q), rhs = a.eval(q) * b.eval(q);
        double scale = std::max({1.0, std::abs(lhs), (a.abs_coefficients() * b.abs_coefficients()).eval(q)});
        CHECK(std::abs(lhs - rhs) <= 1e-12 * scale);
    }
}
