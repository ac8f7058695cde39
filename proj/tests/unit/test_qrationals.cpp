#include "doctest.h"
#include "helpers.hpp"
#include "qrat/qrationals.hpp"

using namespace qrat;

namespace {

std::vector<Rational> small_rationals(int bound)
{
    std::vector<Rational> out{Rational::infinity()};
    for (int r = -bound; r <= bound; ++r)
        for (int s = 1; s <= bound; ++s)
            if (boost::multiprecision::gcd(BigInt(std::abs(r)), BigInt(s)) == 1)
                out.emplace_back(r, s);
    return out;
}

BigRational at_one(const LaurentPoly& p)
{
    return p.eval_exact(1);
}

}  // namespace

TEST_CASE("q-integers")
{
    CHECK(q_integer_poly(3, Side::Sharp) == P("1+q+q^2"));
    CHECK(q_integer_poly(3, Side::Flat) == P("1+q+q^3"));
    CHECK(q_integer_poly(2, Side::Flat) == P("1+q^2"));
    CHECK(q_integer_poly(1, Side::Flat) == P("q"));
    CHECK(q_integer_poly(-1, Side::Sharp) == P("-q^-1"));
    CHECK(q_integer(-2, Side::Sharp).equivalent(RatFunc(P("1-q^-2"), P("1-q"))));
}

TEST_CASE("special rows")
{
    CHECK(deform(Rational::infinity(), Side::Sharp) == QPair{P("1"), LaurentPoly()});
    CHECK(deform(Rational::infinity(), Side::Flat) == QPair{P("1"), P("1-q")});
    CHECK(deform(Rational(0), Side::Sharp) == QPair{LaurentPoly(), P("1")});
    CHECK(deform(Rational(0), Side::Flat) == QPair{P("1-q^-1"), P("1")});
}

TEST_CASE("deformation values")
{
    CHECK(deform(Rational(5, 2), Side::Sharp) == QPair{P("1+2*q+q^2+q^3"), P("1+q")});
    CHECK(deform(Rational(5, 2), Side::Flat) == QPair{P("1+q+q^2+q^3+q^4"), P("1+q^2")});
    CHECK(deform(Rational(1, 2), Side::Sharp) == QPair{P("q"), P("1+q")});
    CHECK(deform(Rational(-1), Side::Sharp) == QPair{P("-q^-1"), P("1")});
    CHECK(deform(Rational(-2), Side::Sharp) == QPair{P("-q^-2-q^-1"), P("1")});
    CHECK(deform(Rational(-1), Side::Flat) == QPair{P("-q^-2"), P("1")});
    CHECK(deform(Rational(-1, 2), Side::Sharp).ratio().equivalent(RatFunc(P("-q^-2"), P("1+q^-1"))));
    CHECK(deform(Rational(3), Side::Flat) == QPair{P("1+q+q^3"), P("1")});
}

TEST_CASE("drawing coordinates")
{
    CHECK(deform_eval(Rational(1, 2), Side::Sharp, 0.3) == doctest::Approx(0.2307692308).epsilon(1e-9));
    CHECK(deform_eval(Rational(1, 3), Side::Sharp, 0.3) == doctest::Approx(0.0647482014).epsilon(1e-9));
    CHECK(deform_eval(Rational(2, 3), Side::Sharp, 0.3) == doctest::Approx(0.2805755396).epsilon(1e-9));
    CHECK(deform_eval(Rational(1, 2), Side::Sharp, 0.7) == doctest::Approx(0.4117647059).epsilon(1e-9));
}

TEST_CASE("three routes agree")
{
    for (const auto& x : small_rationals(30)) {
        for (Side side : {Side::Sharp, Side::Flat}) {
            QPair b = deform_braid(x, side);
            REQUIRE(deform_cf(x, side) == b);
            REQUIRE(deform_matrix(x, side) == b);
        }
    }
}

TEST_CASE("specialization at q = 1 and positivity")
{
    for (const auto& x : small_rationals(30)) {
        if (x.is_inf() || x.is_zero())
            continue;
        BigRational v(x.num(), x.den());
        for (Side side : {Side::Sharp, Side::Flat}) {
            QPair p = deform(x, side);
            REQUIRE(at_one(p.R) / at_one(p.S) == v);
        }
        if (x.sign() > 0) {
            QPair p = deform(x, Side::Sharp);
            REQUIRE(p.R.all_coefficients_nonnegative());
            REQUIRE(p.S.all_coefficients_nonnegative());
        }
    }
}

TEST_CASE("matrix formula")
{
    CHECK(matrix_formula_check(Rational(5, 2)).ok);
    CHECK(matrix_formula_check(Rational(2)).ok);
    CHECK(matrix_formula_check(Rational(-3, 2)).ok);
    Mat2q beta = word_matrix_q(BraidWord::beta({2, 2})).scaled(1, 2);
    CHECK(beta == Mat2q{P("q^4+q^3+2*q^2+q"), P("q+1"), P("q^2+q"), P("1")});
    for (const auto& x : small_rationals(30)) {
        if (x.is_inf() || x.is_zero())
            continue;
        auto rep = matrix_formula_check(x);
        INFO(x.to_string(), " ", rep.diagnostic);
        REQUIRE(rep.ok);
    }
}

TEST_CASE("left from right")
{
    CHECK(left_from_right(Rational(5, 2)) == QPair{P("1+q+q^2+q^3+q^4"), P("1+q^2")});
    CHECK(left_from_right(P("1"), LaurentPoly(), LaurentPoly(), P("1"), Rational::infinity()) == QPair{P("1"), P("1-q")});
    CHECK(left_from_right(Rational(2)) == QPair{P("1+q^2"), P("1")});
    for (const auto& x : small_rationals(20)) {
        if (x.is_zero())
            continue;
        REQUIRE(left_from_right(x) == deform(x, Side::Flat));
    }
}

TEST_CASE("negation symmetry")
{
    CHECK(negate_symmetry(Rational(1)));
    CHECK(negate_symmetry(Rational::infinity()));
    CHECK(negate_symmetry(Rational(5, 2)));
    CHECK_FALSE(negate_symmetry_qover(Rational(5, 2)));
    CHECK_THROWS_AS(negate_symmetry(Rational(-1)), DomainError);
    for (const auto& x : small_rationals(20))
        if (x.sign() > 0)
            REQUIRE(negate_symmetry(x));
}
