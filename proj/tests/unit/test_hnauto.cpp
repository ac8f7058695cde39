#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "qrat/hnauto.hpp"

using namespace qrat;

namespace {

HNVector vec(const char* p1, const char* p2, const char* p12, const char* p21)
{
    return {P(p1), P(p2), P(p12), P(p21)};
}

BraidWord random_word(std::mt19937_64& rng, int max_len)
{
    std::uniform_int_distribution<int> len(0, max_len), pick(0, 3);
    const int letters[] = {1, -1, 2, -2};
    std::vector<int> l;
    int n = len(rng);
    for (int i = 0; i < n; ++i)
        l.push_back(letters[pick(rng)]);
    return BraidWord(l);
}

}  // namespace

TEST_CASE("automaton structure")
{
    const auto& a = c2_automaton();
    CHECK(a.vertex_count() == 4);
    for (int v = 0; v < 4; ++v)
        CHECK(a.labels(v).size() == 3);
    auto la = a.labels(0);
    std::sort(la.begin(), la.end());
    CHECK(la == std::vector<int>{-2, 1, 2});
    const auto* e = a.edge(0, 2);
    REQUIRE(e);
    CHECK(e->target == 1);
    CHECK(e->matrix == Mat2q::identity());
    const auto* loop = a.edge(0, 1);
    REQUIRE(loop);
    CHECK(loop->matrix == Mat2q{P("q^-1"), P("q^-1"), LaurentPoly(), P("1")});
    const auto* down = a.edge(1, 2);
    REQUIRE(down);
    CHECK(down->matrix == Mat2q{P("q^-1"), LaurentPoly(), P("1"), P("1")});
}

TEST_CASE("shift automaton multiplies by q")
{
    auto a = shift_automaton();
    auto v = a.run({P("1+q"), P("2")}, BraidWord{1, 1, 1});
    REQUIRE(v);
    CHECK((*v)[0] == P("q^3+q^4"));
    CHECK((*v)[1] == P("2*q^3"));
    CHECK_FALSE(a.run({P("1"), P("1")}, BraidWord{2}));
}

TEST_CASE("orbit of P1")
{
    CHECK(orbit({}).vector == HNVector::basic(Basic::P1));
    auto x = orbit({2});
    CHECK(x.vector == HNVector::basic(Basic::P21));
    CHECK(x.states == std::vector<AutoState>{AutoState::B, AutoState::D});
    CHECK(x.label == Rational(1));
    CHECK(orbit({1}).vector == vec("q^-1", "0", "0", "0"));
    CHECK(orbit({-2}).vector == HNVector::basic(Basic::P12));
    CHECK(orbit({1, 2}).vector == HNVector::basic(Basic::P2));
    CHECK(orbit(BraidWord::omega()).vector == vec("q^-2", "0", "0", "0"));
    CHECK(orbit(BraidWord::parse("s1^-2 s2^2")).vector == vec("1+q+q^2", "0", "0", "q^-1+1"));
    CHECK(orbit(BraidWord::parse("s2^-2")).vector == vec("0", "q", "1", "0"));
}

TEST_CASE("occ values")
{
    CHECK(occ(Basic::P1, orbit({2})) == P("1"));
    CHECK(occ(Basic::P2, object_P1()) == P("1"));
    CHECK(occ(Basic::P1, object_P1()).is_zero());
    auto x = orbit(BraidWord::parse("s1^-2 s2^2"));
    auto r = normalize_qrat(occ(Basic::P2, x), occ(Basic::P1, x), Rational(5, 2), Side::Sharp);
    CHECK(r == QPair{P("1+2*q+q^2+q^3"), P("1+q")});
    CHECK(occ_general(orbit({2}), object_P1()) == P("1"));
}

TEST_CASE("occ general with trivial first argument")
{
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
        auto y = orbit(random_word(rng, 8));
        REQUIRE(occ_general(object_P1(), y) == occ(Basic::P1, y));
    }
}

TEST_CASE("bilinear occ identity")
{
    std::mt19937_64 rng(9);
    for (int i = 0; i < 300; ++i) {
        auto x = orbit(random_word(rng, 6));
        auto y = orbit(random_word(rng, 6));
        INFO(x.word.to_string(), " | ", y.word.to_string());
        REQUIRE(bilinear_occ(x, y).holds);
    }
}

TEST_CASE("bilinear identity needs the sign corrections")
{
    auto x = orbit({2});
    auto b = bilinear_occ(x, x);
    CHECK(b.lhs.is_zero());
    CHECK(b.holds);
    CHECK_FALSE(b.holds_literally);
}

TEST_CASE("hom values")
{
    CHECK(hom(Basic::P1, object_P1()) == P("q^-2-q^-1"));
    CHECK(hom(Basic::P1, object_P2()) == P("q^-1"));
    CHECK(hom(Basic::P1, orbit({2})) == P("1"));
    CHECK(hom(Basic::P2, object_P2()) == P("q^-2-q^-1"));
    CHECK(hom(Basic::P2, object_P1()) == P("q^-1"));
    CHECK(hom(Basic::P1, orbit({1})) == P("q^-3-q^-2"));
}

TEST_CASE("right and left values")
{
    CHECK(rz_right(object_P1()).value == QPair{P("1"), LaurentPoly()});
    CHECK(rz_right(orbit({2})).value == QPair{P("1"), P("1")});
    auto x = orbit(BraidWord::parse("s1^-2 s2^2"));
    CHECK(rz_right(x).value == deform(Rational(5, 2), Side::Sharp));
    CHECK(rz_left(object_P1()).value == QPair{P("1"), P("1-q")});
    auto p2 = rz_left(object_P2());
    CHECK(p2.epsilon == 1);
    CHECK(p2.value == QPair{P("1-q^-1"), P("1")});
    CHECK(RatFunc::raw(p2.num, p2.den).equivalent(RatFunc(P("1-q^-1"))));
    CHECK(rz_left(x).value == deform(Rational(5, 2), Side::Flat));
}

TEST_CASE("right and left values on short words")
{
    for (const auto& w : reduced_words(6)) {
        auto x = orbit(w);
        INFO(w.to_string());
        REQUIRE(x.vector.all_nonnegative());
        auto r = rz_right(x);
        REQUIRE(RatFunc::raw(r.num, r.den).equivalent(deform(x.label, Side::Sharp).ratio()));
        REQUIRE(r.value == deform(x.label, Side::Sharp));
        auto l = rz_left(x);
        REQUIRE(RatFunc::raw(l.num, l.den).equivalent(deform(x.label, Side::Flat).ratio()));
        REQUIRE(l.value == deform(x.label, Side::Flat));
    }
}

TEST_CASE("right value is equivariant")
{
    std::mt19937_64 rng(13);
    for (int i = 0; i < 200; ++i) {
        auto x = orbit(random_word(rng, 6));
        auto w = random_word(rng, 6);
        auto y = apply_braid(x, w);
        RatFunc moved = mobius_apply(word_matrix_q(w), rz_right(x).value.ratio());
        REQUIRE(moved.equivalent(rz_right(y).value.ratio()));
    }
}

TEST_CASE("label class matches automaton class")
{
    for (const auto& w : reduced_words(6)) {
        auto x = orbit(w);
        auto a = x.sign_class();
        auto b = label_sign_class(x.label);
        REQUIRE(a.ge == b.ge);
        REQUIRE(a.le == b.le);
    }
}

TEST_CASE("matrix route matches automaton")
{
    CHECK(equal_up_to_unit(occ_matrix_route({}).occ, occ_table_automaton({})));
    auto s3 = occ_matrix_route(BraidWord::parse("s1^3"));
    CHECK(s3.nf.strict());
    CHECK(equal_up_to_unit(s3.occ, occ_table_automaton(BraidWord::parse("s1^3"))));
    auto ns = BraidWord::parse("s1^-2 s2^2 s1^3");
    auto s = occ_matrix_route(ns);
    CHECK_FALSE(s.nf.strict());
    CHECK(equal_up_to_unit(s.occ, occ_table_automaton(ns)));
    for (const auto& w : reduced_words(6)) {
        INFO(w.to_string());
        REQUIRE(equal_up_to_unit(occ_matrix_route(w).occ, occ_table_automaton(w)));
    }
}

TEST_CASE("apply braid matches orbit")
{
    std::mt19937_64 rng(17);
    for (int i = 0; i < 200; ++i) {
        auto a = random_word(rng, 5), b = random_word(rng, 5);
        auto x = apply_braid(orbit(b), a);
        REQUIRE(x.vector == orbit(a * b).vector);
    }
}
