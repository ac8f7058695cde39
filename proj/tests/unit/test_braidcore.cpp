#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "qrat/braid.hpp"

using namespace qrat;

namespace {

BigInt at_one(const LaurentPoly& p)
{
    BigInt s = 0;
    for (auto& c : p.dense())
        s += c;
    return s;
}

}  // namespace

TEST_CASE("parsing")
{
    CHECK(BraidWord::parse("s1^-2 s2^2").letters() == std::vector<int>{-1, -1, 2, 2});
    CHECK(BraidWord::parse("s1 s1^-1").empty());
    CHECK(BraidWord::parse("").empty());
    CHECK(BraidWord::parse("s1^-2 s2^2").to_string() == "s1^-2 s2^2");
    CHECK(BraidWord().to_string() == "e");
    CHECK_THROWS_AS(BraidWord::parse("s3"), DomainError);
    CHECK_THROWS_AS(BraidWord::parse("s1^"), DomainError);
    CHECK_THROWS_AS(BraidWord::parse("s1^x"), DomainError);
    CHECK(BraidWord{1, 2, -2, 1}.letters() == std::vector<int>{1, 1});
}

TEST_CASE("generator matrices and products")
{
    CHECK(word_matrix_q({}) == Mat2q::identity());
    CHECK(equal_up_to_unit(word_matrix_q({1, 2, 1}), word_matrix_q({2, 1, 2})));
    Mat2q m = word_matrix_q(BraidWord::parse("s1^-2 s2^2"));
    CHECK(m.a == P("q^-1+2+q+q^2"));
    CHECK(m.b == P("q^-2+q^-1"));
    CHECK(m.c == P("1+q^-1"));
    CHECK(m.d == P("q^-2"));
    Mat2q n = word_matrix_q({-1, 2});
    CHECK(n == Mat2q{P("q+1"), P("q^-1"), P("1"), P("q^-1")});
    for (int l : {1, -1, 2, -2})
        CHECK(word_matrix_q(BraidWord{l}) * word_matrix_q(BraidWord{-l}) == Mat2q::identity());
}

TEST_CASE("moebius action")
{
    CHECK(mobius_apply(Mat2q::identity(), RatFunc(P("7"), P("3"))) == RatFunc(P("7"), P("3")));
    Mat2q n = word_matrix_q({-1, 2});
    CHECK(mobius_apply(n, RatFunc::inf()).equivalent(RatFunc(P("1+q"))));
    CHECK(mobius_apply(n, RatFunc(P("1"), P("1-q"))).equivalent(RatFunc(P("1+q^2"))));
    CHECK(mobius_apply(n, std::numeric_limits<double>::infinity(), 0.5) == doctest::Approx(1.5));
    CHECK(mobius_apply(Mat2z::generator(2), Rational(1)) == Rational(1, 2));
}

TEST_CASE("integer specialization commutes with products")
{
    for (const auto& w : reduced_words(8)) {
        Mat2q m = word_matrix_q(w);
        Mat2z z = word_matrix_z(w);
        REQUIRE(at_one(m.a) == z.a);
        REQUIRE(at_one(m.b) == z.b);
        REQUIRE(at_one(m.c) == z.c);
        REQUIRE(at_one(m.d) == z.d);
        auto u = unit_ratio(m.det(), LaurentPoly(1));
        REQUIRE(u);
    }
}

TEST_CASE("beta acts on infinity by the continued fraction")
{
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> len(1, 3), dig(1, 4), first(0, 4), sgn(0, 1);
    for (int i = 0; i < 400; ++i) {
        int n = 2 * len(rng);
        EvenCF d;
        bool neg = sgn(rng);
        for (int k = 0; k < n; ++k)
            d.push_back((k == 0 ? first(rng) : dig(rng)) * (neg ? -1 : 1));
        Mat2z z = word_matrix_z(BraidWord::beta(d));
        REQUIRE(Rational(z.a, z.c) == cf_value(d));
    }
}

TEST_CASE("continued normal form examples")
{
    auto nf = continued_normal_form(BraidWord::parse("s1^-2 s2^2"));
    CHECK(nf.form == 1);
    CHECK(nf.digits == EvenCF{2, 2});
    CHECK(nf.M == 0);
    CHECK(nf.N == 0);
    auto om = continued_normal_form(BraidWord::omega());
    CHECK(om.form == 3);
    CHECK(om.M == 0);
    CHECK(om.N == 1);
    auto s5 = continued_normal_form(BraidWord::power(1, 5));
    CHECK(s5.form == 3);
    CHECK(s5.M == 5);
    CHECK(s5.N == 0);
    CHECK(BraidWord::omega().exponent_sum() == 6);
}

TEST_CASE("normal form reassembles the braid")
{
    for (const auto& w : reduced_words(8)) {
        NormalForm nf = continued_normal_form(w);
        BraidWord back = nf.to_word();
        REQUIRE(back.exponent_sum() == w.exponent_sum());
        REQUIRE(equal_up_to_unit(word_matrix_q(back), word_matrix_q(w)));
        if (nf.form == 1)
            for (auto a : nf.digits)
                REQUIRE(a >= 0);
        if (nf.form == 2)
            for (auto a : nf.digits)
                REQUIRE(a <= 0);
    }
}

TEST_CASE("strictify")
{
    NormalForm a{1, {2, 2}, 3, 0};
    auto r = strictify(a);
    CHECK(r.nf == NormalForm{1, {2, 2}, 0, 0});
    CHECK(r.shift == 3);
    NormalForm b{3, {}, -2, 1};
    CHECK(strictify(b).nf == b);
    CHECK(strictify(b).shift == 0);
    auto c = strictify(NormalForm{4, {}, 1, 0});
    CHECK(c.nf == NormalForm{4, {}, 0, 0});
    CHECK(c.shift == 1);
    for (const auto& w : reduced_words(6))
        REQUIRE(strictify(continued_normal_form(w)).nf.strict());
}
