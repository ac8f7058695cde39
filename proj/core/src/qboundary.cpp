#include "qrat/qboundary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qrat {

DigitStream constant_digits(long long a)
{
    return [a](std::size_t) { return a; };
}

DigitStream periodic_digits(std::vector<long long> period, std::vector<long long> preperiod)
{
    if (period.empty())
        throw DomainError("empty period");
    return [period = std::move(period), pre = std::move(preperiod)](std::size_t k) {
        if (k < pre.size())
            return pre[k];
        return period[(k - pre.size()) % period.size()];
    };
}

namespace {

long double q_int_num(long long a, long double Q, Side side)
{
    long double sharp = (1 - std::pow(Q, static_cast<long double>(a))) / (1 - Q);
    if (side == Side::Sharp)
        return sharp;
    return (1 - std::pow(Q, static_cast<long double>(a - 1)) + std::pow(Q, static_cast<long double>(a)) -
            std::pow(Q, static_cast<long double>(a + 1))) /
           (1 - Q);
}

long long odd_position_sum(const std::vector<long long>& d)
{
    long long s = 0;
    for (std::size_t i = 0; i < d.size(); i += 2)
        s = checked_add(s, d[i]);
    return s;
}

void check_q(double q)
{
    if (!(q > 0 && q < 1))
        throw DomainError("q must lie in (0,1)");
}

BigRational rpow(const BigRational& q, long long k)
{
    BigRational base = k < 0 ? BigRational(1) / q : q;
    BigRational r = 1;
    for (long long e = k < 0 ? -k : k; e > 0; --e)
        r *= base;
    return r;
}

}  // namespace

long double cf_eval(const std::vector<long long>& d, Side side, long double q)
{
    if (d.empty())
        throw DomainError("empty digit list");
    if (!(q > 0))
        throw DomainError("q must be positive");
    long double x = 0;
    for (std::size_t k = d.size(); k-- > 0;) {
        long double Q = k % 2 == 0 ? q : 1 / q;
        long double A = Q == 1 ? static_cast<long double>(d[k])
                               : q_int_num(d[k], Q, k + 1 == d.size() ? side : Side::Sharp);
        if (k + 1 == d.size())
            x = A;
        else
            x = A + std::pow(Q, static_cast<long double>(d[k])) / x;
    }
    return x;
}

BigRational cf_eval_exact(const std::vector<long long>& digits, Side side, const BigRational& q)
{
    if (q <= 0)
        throw DomainError("q must be positive");
    auto [num, den] = cf_formula_pair(digits, side);
    BigRational d = den.eval_exact(q);
    if (d == 0)
        throw DomainError("pole of the continued fraction");
    return num.eval_exact(q) / d;
}

BigRational error_bound_exact(const std::vector<long long>& digits, const BigRational& q)
{
    return rpow(q, checked_add(odd_position_sum(digits), -1));
}

double error_bound(const std::vector<long long>& digits, double q)
{
    return std::pow(q, static_cast<double>(odd_position_sum(digits) - 1));
}

IrrationalValue q_irrational(double q, const DigitStream& digits, std::size_t depth)
{
    check_q(q);
    if (depth < 2)
        throw DomainError("depth must be at least 2");
    std::vector<long long> d;
    for (std::size_t k = 0; k < depth; ++k) {
        long long a = digits(k);
        if (a < 1)
            throw DomainError("digit stream must be positive");
        d.push_back(a);
    }
    return {static_cast<double>(cf_eval(d, Side::Sharp, q)), error_bound(d, q)};
}

TailSide parse_tail_side(const std::string& text)
{
    if (text == "left" || text == "flat")
        return TailSide::Left;
    if (text == "right" || text == "sharp")
        return TailSide::Right;
    throw DomainError("unknown tail side: " + text);
}

std::vector<long long> tail_sequence(const EvenCF& base, TailSide side, long long m)
{
    std::vector<long long> d(base.begin(), base.end());
    if (side == TailSide::Left) {
        d.push_back(m);
        return d;
    }
    if (d.empty())
        throw DomainError("no right tail for inf");
    if (d.back() > 1) {
        d.back() -= 1;
        d.push_back(1);
        d.push_back(m);
    } else {
        d.pop_back();
        d.back() += 1;
        d.push_back(m);
    }
    return d;
}

TailReport tail_limit_check(const Rational& base, TailSide side, const QValue& q, long long m_max, double tol)
{
    check_q(q.value);
    if (!base.is_inf() && base.sign() <= 0)
        throw DomainError("tail sequences need a positive base");
    EvenCF d = base.is_inf() ? EvenCF{} : to_even_cf(base);
    Side target_side = side == TailSide::Left ? Side::Flat : Side::Sharp;
    TailReport rep;
    rep.exact = q.exact.has_value();
    QPair tp = deform(base, target_side);
    std::optional<BigRational> target_exact;
    if (rep.exact) {
        target_exact = tp.R.eval_exact(*q.exact) / tp.S.eval_exact(*q.exact);
        rep.target = target_exact->convert_to<double>();
    } else {
        rep.target = static_cast<double>(tp.R.eval_long(q.value) / tp.S.eval_long(q.value));
    }
    for (long long m = 1; m <= m_max; ++m) {
        std::vector<long long> seq = tail_sequence(d, side, m);
        TailStep st;
        st.m = m;
        if (rep.exact) {
            BigRational a = cf_eval_exact(seq, Side::Sharp, *q.exact);
            BigRational e = abs(a - *target_exact);
            BigRational b = error_bound_exact(seq, *q.exact);
            st.approx = a.convert_to<double>();
            st.error = e.convert_to<double>();
            st.bound = b.convert_to<double>();
            st.bound_ok = e <= b;
        } else {
            long double a = cf_eval(seq, Side::Sharp, q.value);
            st.approx = static_cast<double>(a);
            st.error = static_cast<double>(std::fabs(a - rep.target));
            st.bound = error_bound(seq, q.value);
            // rounding slack for the floating evaluation
            st.bound_ok = st.error <= st.bound + 1e-14 * std::max(1.0, std::fabs(rep.target));
        }
        rep.bound_dominates = rep.bound_dominates && st.bound_ok;
        rep.steps.push_back(st);
    }
    rep.final_error = rep.steps.empty() ? std::numeric_limits<double>::infinity() : rep.steps.back().error;
    rep.converged = rep.final_error < tol;
    return rep;
}

namespace {

double to_d(long double x)
{
    return static_cast<double>(x);
}

double to_d(const BigRational& x)
{
    return x.convert_to<double>();
}

struct LongArith {
    using Num = long double;
    long double q;
    double tolerance = kClassifyTolerance;
    Num eval(const LaurentPoly& p) const { return p.eval_long(q); }
    Num from_double(double x) const { return x; }
};

struct ExactArith {
    using Num = BigRational;
    BigRational q;
    double tolerance = kClassifyExactTolerance;
    Num eval(const LaurentPoly& p) const { return p.eval_exact(q); }
    Num from_double(double x) const { return BigRational(x); }
};

template <class Arith>
typename Arith::Num endpoint(const Arith& ar, const Rational& x, Side side)
{
    QPair v = deform(x, side);
    return ar.eval(v.R) / ar.eval(v.S);
}

template <class Num>
Num abs_num(const Num& x)
{
    return x < 0 ? Num(-x) : x;
}

// t in [0,1] within [lo, hi], snapped at the endpoints
template <class Num>
double affine_t(const Num& p, const Num& lo, const Num& hi, const Num& tol)
{
    if (abs_num(Num(p - hi)) <= tol)
        return 1.0;
    if (abs_num(Num(p - lo)) <= tol)
        return 0.0;
    double t = to_d(Num((p - lo) / (hi - lo)));
    return std::clamp(t, 0.0, 1.0);
}

template <class Arith>
BoundaryClass classify_positive(const Arith& ar, const typename Arith::Num& p, std::size_t max_depth)
{
    using Num = typename Arith::Num;
    Num one(1);
    Num tol = ar.from_double(ar.tolerance) * std::max(one, p);
    BoundaryClass bc;
    Num inf_flat = one / (one - ar.q);
    if (p >= inf_flat - tol) {
        bc.kind = BoundaryKind::IntervalPoint;
        bc.rational = Rational::infinity();
        // projective position on [1/(1-q), inf]
        bc.t = p <= inf_flat + tol ? 0.0 : std::clamp(to_d(Num(one - inf_flat / p)), 0.0, 1.0);
        return bc;
    }
    BigInt lr = 0, ls = 1, rr = 1, rs = 0;
    int dir = 1;
    long long run = 0;
    for (std::size_t step = 0; step < kClassifyMaxSteps; ++step) {
        Rational m(lr + rr, ls + rs);
        Num f = endpoint(ar, m, Side::Flat);
        Num s = endpoint(ar, m, Side::Sharp);
        if (p >= f - tol && p <= s + tol) {
            bc.kind = BoundaryKind::IntervalPoint;
            bc.rational = m;
            bc.t = affine_t(p, f, s, tol);
            bc.cf_prefix.clear();
            return bc;
        }
        int d = p < f ? -1 : 1;
        if (d == dir) {
            ++run;
        } else {
            bc.cf_prefix.push_back(run);
            if (bc.cf_prefix.size() >= max_depth)
                return bc;
            dir = d;
            run = 1;
        }
        if (d < 0) {
            rr = m.num();
            rs = m.den();
        } else {
            lr = m.num();
            ls = m.den();
        }
    }
    // step cap reached: the open run is a lower bound for its digit
    bc.cf_prefix.push_back(run);
    return bc;
}

// the classical expansion of -1/y from that of y > 0, with digits negated
std::vector<long long> negated_reciprocal_prefix(const std::vector<long long>& b)
{
    std::vector<long long> d{0};
    d.insert(d.end(), b.begin(), b.end());
    if (d.size() >= 3 && d[1] == 0) {
        std::vector<long long> m{d[0] + d[2]};
        m.insert(m.end(), d.begin() + 3, d.end());
        d = std::move(m);
    }
    for (auto& a : d)
        a = -a;
    return d;
}

template <class Arith>
BoundaryClass classify(const Arith& ar, double pd, std::size_t max_depth)
{
    using Num = typename Arith::Num;
    Num p = ar.from_double(pd);
    Num tol = ar.from_double(ar.tolerance) * std::max(Num(1), abs_num(p));
    if (abs_num(p) <= tol && p <= 0) {
        BoundaryClass bc;
        bc.kind = BoundaryKind::IntervalPoint;
        bc.rational = Rational(0);
        bc.t = 1.0;
        return bc;
    }
    if (p > 0)
        return classify_positive(ar, p, max_depth);
    // x -> -1/(qx) swaps the halves
    Num y = Num(-1) / (ar.q * p);
    BoundaryClass inner = classify_positive(ar, y, max_depth);
    if (inner.kind == BoundaryKind::Irrational) {
        inner.cf_prefix = negated_reciprocal_prefix(inner.cf_prefix);
        if (inner.cf_prefix.size() > max_depth)
            inner.cf_prefix.resize(max_depth);
        return inner;
    }
    const Rational& r = *inner.rational;
    Rational back = r.is_inf() ? Rational(0) : Rational(-r.den(), r.num());
    BoundaryClass bc;
    bc.kind = BoundaryKind::IntervalPoint;
    bc.rational = back;
    Num f = endpoint(ar, back, Side::Flat);
    Num s = endpoint(ar, back, Side::Sharp);
    bc.t = affine_t(p, f, s, tol);
    return bc;
}

}  // namespace

BoundaryClass classify_boundary_point(double p, const QValue& q, std::size_t max_depth)
{
    check_q(q.value);
    if (!std::isfinite(p))
        throw DomainError("boundary point must be finite");
    if (max_depth == 0)
        throw DomainError("depth must be positive");
    if (q.exact)
        return classify(ExactArith{*q.exact}, p, max_depth);
    return classify(LongArith{q.value}, p, max_depth);
}

OrderReport order_check(const Rational& t, const Rational& t2, const QValue& q)
{
    check_q(q.value);
    if (!(t < t2))
        throw DomainError("order check needs t < t'");
    OrderReport rep;
    const Rational* xs[2] = {&t, &t2};
    auto run = [&](const auto& ar) {
        using Num = typename std::decay_t<decltype(ar)>::Num;
        std::vector<Num> v;
        for (int i = 0; i < 2; ++i) {
            v.push_back(endpoint(ar, *xs[i], Side::Flat));
            if (xs[i]->is_inf())
                v.emplace_back(0);
            else
                v.push_back(endpoint(ar, *xs[i], Side::Sharp));
        }
        bool inf2 = t2.is_inf();
        for (int i = 0; i < 4; ++i)
            rep.values[i] = to_d(v[static_cast<std::size_t>(i)]);
        if (inf2)
            rep.values[3] = std::numeric_limits<double>::infinity();
        rep.ok = v[0] < v[1] && v[1] < v[2] && (inf2 || v[2] < v[3]);
    };
    if (q.exact)
        run(ExactArith{*q.exact});
    else
        run(LongArith{q.value});
    return rep;
}

}  // namespace qrat
