#include "qrat/qrationals.hpp"

#include <numeric>

namespace qrat {

std::string side_name(Side s)
{
    return s == Side::Sharp ? "sharp" : "flat";
}

Side parse_side(const std::string& text)
{
    if (text == "sharp" || text == "right")
        return Side::Sharp;
    if (text == "flat" || text == "left")
        return Side::Flat;
    throw DomainError("unknown side: " + text);
}

double QPair::eval(double q) const
{
    return RatFunc::raw(R, S).eval(q);
}

LaurentPoly q_integer_poly(long long n, Side side)
{
    if (side == Side::Sharp)
        return LaurentPoly::q_int(n);
    return LaurentPoly::q_int(checked_add(n, -1)) + LaurentPoly::monomial(n);
}

RatFunc q_integer(long long n, Side side)
{
    return RatFunc(q_integer_poly(n, side));
}

namespace {

const LaurentPoly kOne(1);
const LaurentPoly kQ = LaurentPoly::monomial(1);
const LaurentPoly kQinv = LaurentPoly::monomial(-1);

QPair fixed_row(const Rational& x, Side side)
{
    if (x.is_inf())
        return side == Side::Sharp ? QPair{kOne, LaurentPoly()} : QPair{kOne, kOne - kQ};
    return side == Side::Sharp ? QPair{LaurentPoly(), kOne} : QPair{kOne - kQinv, kOne};
}

LaurentPoly divide_unit(const LaurentPoly& p, int sign, std::int64_t k)
{
    return p.unit_scaled(sign, -k);
}

long long even_position_sum(const EvenCF& d, std::size_t upto)
{
    long long s = 0;
    for (std::size_t i = 1; i < upto; i += 2)
        s = checked_add(s, d[i]);
    return s;
}

Mat2q flat_factor()
{
    return {kOne, kOne - kQinv, kOne - kQ, kOne};
}

}  // namespace

QPair normalize_qrat(const LaurentPoly& R, const LaurentPoly& S, const Rational& x, Side side)
{
    if (x.is_inf() || x.is_zero())
        return fixed_row(x, side);
    if (S.is_zero())
        throw DomainError("zero denominator for finite rational");
    std::int64_t e = x.sign() > 0 ? S.low_degree() : S.high_degree();
    BigInt c = S.coeff(e);
    if (c != 1 && c != -1)
        throw DomainError("normalizing term is not a unit");
    int sign = c > 0 ? 1 : -1;
    return {R.unit_scaled(sign, -e), S.unit_scaled(sign, -e)};
}

QPair deform_braid(const Rational& x, Side side)
{
    if (x.is_inf() || x.is_zero())
        return fixed_row(x, side);
    Mat2q m = word_matrix_q(BraidWord::beta(to_even_cf(x)));
    if (side == Side::Sharp)
        return normalize_qrat(m.a, m.c, x, side);
    auto [n, d] = mobius_apply_pair(m, kOne, kOne - kQ);
    return normalize_qrat(n, d, x, side);
}

std::pair<LaurentPoly, LaurentPoly> cf_formula_pair(const std::vector<long long>& d, Side side)
{
    if (d.empty())
        throw DomainError("empty digit list");
    LaurentPoly num, den;
    for (std::size_t k = d.size(); k-- > 0;) {
        bool inv = k % 2 == 1;
        Side sd = k + 1 == d.size() ? side : Side::Sharp;
        LaurentPoly a = q_integer_poly(d[k], sd);
        if (inv)
            a = a.inverted_variable();
        if (k + 1 == d.size()) {
            num = a;
            den = kOne;
            continue;
        }
        // a + q^{+-a}/(num/den)
        LaurentPoly u = LaurentPoly::monomial(inv ? -d[k] : d[k]);
        LaurentPoly n2 = a * num + u * den;
        den = num;
        num = n2;
    }
    return {num, den};
}

QPair deform_cf(const Rational& x, Side side)
{
    if (x.is_inf() || x.is_zero())
        return fixed_row(x, side);
    auto [num, den] = cf_formula_pair(to_even_cf(x), side);
    return normalize_qrat(num, den, x, side);
}

QPair deform_matrix(const Rational& x, Side side)
{
    if (x.is_inf() || x.is_zero())
        return fixed_row(x, side);
    EvenCF d = to_even_cf(x);
    Mat2q beta = word_matrix_q(BraidWord::beta(d));
    bool pos = x.sign() > 0;
    if (side == Side::Sharp) {
        Mat2q p = beta.scaled(1, even_position_sum(d, d.size()));
        int sign = pos ? 1 : -1;
        std::int64_t k = pos ? 1 : 0;
        return {divide_unit(p.a, sign, k), divide_unit(p.c, sign, k)};
    }
    Mat2q f = (beta * flat_factor()).scaled(1, even_position_sum(d, d.size() - 1));
    long long last = d.back();
    int sign = pos ? 1 : -1;
    std::int64_t k = pos ? -last : checked_add(-last, 1);
    return {divide_unit(f.a, sign, k), divide_unit(f.c, sign, k)};
}

QRatPair deform_both(const Rational& x)
{
    return {x, deform(x, Side::Sharp), deform(x, Side::Flat)};
}

double deform_eval(const Rational& x, Side side, double q)
{
    return deform(x, side).eval(q);
}

Rational truncated_rational(const Rational& x)
{
    EvenCF d = to_even_cf(x);
    if (d.empty())
        throw DomainError("no truncation for inf");
    d.pop_back();
    return cf_value_any(d);
}

MatrixFormulaReport matrix_formula_check(const Rational& x)
{
    MatrixFormulaReport rep;
    auto fail = [&](const std::string& what) {
        rep.ok = false;
        if (!rep.diagnostic.empty())
            rep.diagnostic += "; ";
        rep.diagnostic += what;
    };
    if (x.is_inf() || x.is_zero()) {
        fail("matrix formula needs a finite nonzero rational");
        return rep;
    }
    EvenCF d = to_even_cf(x);
    Mat2q beta = word_matrix_q(BraidWord::beta(d));
    Rational xp = truncated_rational(x);
    QPair sharp = deform_braid(x, Side::Sharp);
    QPair flat = deform_braid(x, Side::Flat);
    QPair sharp_p = deform_braid(xp, Side::Sharp);
    QPair flat_p = deform_braid(xp, Side::Flat);
    bool pos = x.sign() > 0;

    Mat2q p = beta.scaled(1, even_position_sum(d, d.size()));
    LaurentPoly c1 = pos ? kQ : LaurentPoly(-1);
    if (p.a != c1 * sharp.R || p.c != c1 * sharp.S)
        fail("sharp first column");
    if (p.b != sharp_p.R || p.d != sharp_p.S)
        fail("sharp second column");

    Mat2q f = (beta * flat_factor()).scaled(1, even_position_sum(d, d.size() - 1));
    long long last = d.back();
    LaurentPoly c2 = pos ? LaurentPoly::monomial(-last) : LaurentPoly::monomial(checked_add(-last, 1), -1);
    if (f.a != c2 * flat.R || f.c != c2 * flat.S)
        fail("flat first column");
    if (f.b != flat_p.R || f.d != flat_p.S)
        fail("flat second column");
    return rep;
}

QPair left_from_right(const LaurentPoly& rsharp, const LaurentPoly& ssharp, const LaurentPoly& rsharp_p,
                      const LaurentPoly& ssharp_p, const Rational& x)
{
    // the first matrix column is q(R,S) for x >= 0 and -(R,S) for x < 0
    LaurentPoly f = x.sign() < 0 ? LaurentPoly(-1) : kQ;
    LaurentPoly R = f * rsharp + rsharp_p - kQ * rsharp_p;
    LaurentPoly S = f * ssharp + ssharp_p - kQ * ssharp_p;
    return normalize_qrat(R, S, x, Side::Flat);
}

QPair left_from_right(const Rational& x)
{
    if (x.is_inf())
        return left_from_right(kOne, LaurentPoly(), LaurentPoly(), kOne, x);
    QPair s = deform(x, Side::Sharp);
    QPair sp = deform(truncated_rational(x), Side::Sharp);
    return left_from_right(s.R, s.S, sp.R, sp.S, x);
}

namespace {

bool negation_check(const Rational& x, const LaurentPoly& unit)
{
    if (x.sign() <= 0 && !x.is_inf())
        throw DomainError("negation check needs x > 0");
    Rational y(-x.den(), x.num());
    for (Side side : {Side::Sharp, Side::Flat}) {
        QPair a = deform(x, side);
        QPair b = deform(y, side);
        // -unit/(R/S) = -unit*S/R
        RatFunc lhs = RatFunc::raw(-(unit * a.S), a.R);
        if (!lhs.equivalent(b.ratio()))
            return false;
    }
    return true;
}

}  // namespace

bool negate_symmetry(const Rational& x)
{
    return negation_check(x, kQinv);
}

bool negate_symmetry_qover(const Rational& x)
{
    return negation_check(x, kQ);
}

}  // namespace qrat
