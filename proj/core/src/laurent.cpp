#include "qrat/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <sstream>

namespace qrat {

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("exponent overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("exponent overflow");
    return r;
}

LaurentPoly::LaurentPoly(long long c)
{
    if (c != 0)
        c_.emplace_back(c);
}

LaurentPoly::LaurentPoly(const BigInt& c)
{
    if (c != 0)
        c_.push_back(c);
}

LaurentPoly LaurentPoly::monomial(std::int64_t e, const BigInt& c)
{
    LaurentPoly p;
    if (c != 0) {
        p.low_ = e;
        p.c_.push_back(c);
    }
    return p;
}

LaurentPoly LaurentPoly::from_terms(const std::map<std::int64_t, BigInt>& terms)
{
    LaurentPoly p;
    if (terms.empty())
        return p;
    std::int64_t lo = terms.begin()->first;
    std::int64_t hi = terms.rbegin()->first;
    p.low_ = lo;
    p.c_.assign(static_cast<std::size_t>(hi - lo + 1), BigInt(0));
    for (auto& [e, c] : terms)
        p.c_[static_cast<std::size_t>(e - lo)] += c;
    p.trim();
    return p;
}

LaurentPoly LaurentPoly::from_coeffs(std::int64_t low, std::vector<BigInt> coeffs)
{
    LaurentPoly p;
    p.low_ = low;
    p.c_ = std::move(coeffs);
    p.trim();
    return p;
}

LaurentPoly LaurentPoly::q_int(std::int64_t n)
{
    // (1 - q^n)/(1 - q)
    if (n >= 0)
        return from_coeffs(0, std::vector<BigInt>(static_cast<std::size_t>(n), BigInt(1)));
    return from_coeffs(n, std::vector<BigInt>(static_cast<std::size_t>(-n), BigInt(-1)));
}

void LaurentPoly::trim()
{
    std::size_t first = 0;
    while (first < c_.size() && c_[first] == 0)
        ++first;
    if (first == c_.size()) {
        c_.clear();
        low_ = 0;
        return;
    }
    std::size_t last = c_.size();
    while (c_[last - 1] == 0)
        --last;
    if (first > 0 || last < c_.size()) {
        c_ = std::vector<BigInt>(c_.begin() + static_cast<std::ptrdiff_t>(first),
                                 c_.begin() + static_cast<std::ptrdiff_t>(last));
        low_ = checked_add(low_, static_cast<std::int64_t>(first));
    }
}

std::int64_t LaurentPoly::low_degree() const
{
    if (is_zero())
        throw DomainError("degree of zero polynomial");
    return low_;
}

std::int64_t LaurentPoly::high_degree() const
{
    if (is_zero())
        throw DomainError("degree of zero polynomial");
    return low_ + static_cast<std::int64_t>(c_.size()) - 1;
}

std::size_t LaurentPoly::term_count() const
{
    return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [](const BigInt& c) { return c != 0; }));
}

BigInt LaurentPoly::coeff(std::int64_t e) const
{
    if (is_zero() || e < low_ || e > high_degree())
        return 0;
    return c_[static_cast<std::size_t>(e - low_)];
}

std::map<std::int64_t, BigInt> LaurentPoly::terms() const
{
    std::map<std::int64_t, BigInt> t;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0)
            t.emplace(low_ + static_cast<std::int64_t>(i), c_[i]);
    return t;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o)
{
    if (o.is_zero())
        return *this;
    if (is_zero())
        return *this = o;
    std::int64_t lo = std::min(low_, o.low_);
    std::int64_t hi = std::max(high_degree(), o.high_degree());
    std::vector<BigInt> r(static_cast<std::size_t>(hi - lo + 1), BigInt(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        r[static_cast<std::size_t>(low_ - lo) + i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        r[static_cast<std::size_t>(o.low_ - lo) + i] += o.c_[i];
    low_ = lo;
    c_ = std::move(r);
    trim();
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o)
{
    return *this += -o;
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly r = *this;
    for (auto& c : r.c_)
        c = -c;
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            r[i + j] += a.c_[i] * b.c_[j];
    }
    return LaurentPoly::from_coeffs(checked_add(a.low_, b.low_), std::move(r));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o)
{
    return *this = *this * o;
}

LaurentPoly LaurentPoly::shifted(std::int64_t k) const
{
    LaurentPoly r = *this;
    if (!r.is_zero())
        r.low_ = checked_add(r.low_, k);
    return r;
}

LaurentPoly LaurentPoly::unit_scaled(int sign, std::int64_t k) const
{
    LaurentPoly r = shifted(k);
    return sign < 0 ? -r : r;
}

LaurentPoly LaurentPoly::inverted_variable() const
{
    if (is_zero())
        return {};
    LaurentPoly r;
    r.low_ = -high_degree();
    r.c_.assign(c_.rbegin(), c_.rend());
    return r;
}

BigInt LaurentPoly::content() const
{
    BigInt g = 0;
    for (auto& c : c_)
        if (c != 0)
            g = boost::multiprecision::gcd(g, abs(c));
    return g;
}

LaurentPoly LaurentPoly::divided_by_integer(const BigInt& d) const
{
    if (d == 0)
        throw DomainError("division by zero");
    LaurentPoly r = *this;
    for (auto& c : r.c_) {
        if (c % d != 0)
            throw DomainError("inexact integer division");
        c /= d;
    }
    return r;
}

LaurentPoly LaurentPoly::abs_coefficients() const
{
    LaurentPoly r = *this;
    for (auto& c : r.c_)
        c = abs(c);
    return r;
}

bool LaurentPoly::all_coefficients_nonnegative() const
{
    return std::all_of(c_.begin(), c_.end(), [](const BigInt& c) { return c >= 0; });
}

double LaurentPoly::eval(double q) const
{
    return static_cast<double>(eval_long(q));
}

long double LaurentPoly::eval_long(long double q) const
{
    if (!(q > 0))
        throw DomainError("evaluation requires q > 0");
    if (is_zero())
        return 0.0L;
    // Horner from the top, then scale by q^low
    long double acc = 0.0L;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * q + it->convert_to<long double>();
    return acc * std::pow(q, static_cast<long double>(low_));
}

BigRational LaurentPoly::eval_exact(const BigRational& q) const
{
    if (q <= 0)
        throw DomainError("evaluation requires q > 0");
    BigRational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * q + BigRational(*it);
    if (is_zero())
        return acc;
    BigRational base = low_ >= 0 ? q : BigRational(1) / q;
    std::int64_t n = low_ >= 0 ? low_ : -low_;
    BigRational p = 1;
    while (n > 0) {
        if (n & 1)
            p *= base;
        base *= base;
        n >>= 1;
    }
    return acc * p;
}

std::string LaurentPoly::to_string() const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        const BigInt& c = c_[i];
        if (c == 0)
            continue;
        std::int64_t e = low_ + static_cast<std::int64_t>(i);
        BigInt mag = abs(c);
        if (c < 0)
            os << '-';
        else if (!first)
            os << '+';
        first = false;
        if (e == 0) {
            os << mag;
            continue;
        }
        if (mag != 1)
            os << mag << '*';
        os << 'q';
        if (e != 1)
            os << '^' << e;
    }
    return os.str();
}

LaurentPoly LaurentPoly::parse(const std::string& text)
{
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            s.push_back(ch);
    if (s.empty())
        throw DomainError("empty polynomial");
    std::map<std::int64_t, BigInt> terms;
    std::size_t i = 0;
    auto read_int = [&](std::size_t& pos) {
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+'))
            ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
            throw DomainError("malformed polynomial: " + text);
        return s.substr(start, pos - start);
    };
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        }
        BigInt coef = 1;
        bool have_coef = false;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            coef = BigInt(read_int(i));
            have_coef = true;
        }
        std::int64_t e = 0;
        if (i < s.size() && s[i] == '*') {
            if (!have_coef)
                throw DomainError("malformed polynomial: " + text);
            ++i;
        }
        if (i < s.size() && s[i] == 'q') {
            ++i;
            e = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                e = std::stoll(read_int(i));
            }
        } else if (!have_coef) {
            throw DomainError("malformed polynomial: " + text);
        }
        terms[e] += sign * coef;
        if (i < s.size() && s[i] != '+' && s[i] != '-')
            throw DomainError("malformed polynomial: " + text);
    }
    return from_terms(terms);
}

QValue QValue::from_rational(const BigRational& r)
{
    return {r.convert_to<double>(), r};
}

QValue QValue::parse(const std::string& text)
{
    std::string t;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            t.push_back(ch);
    auto slash = t.find('/');
    auto is_int = [](const std::string& s) {
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i >= s.size())
            return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                return false;
        return true;
    };
    if (slash != std::string::npos) {
        std::string a = t.substr(0, slash), b = t.substr(slash + 1);
        if (!is_int(a) || !is_int(b))
            throw DomainError("malformed q: " + text);
        if (a[0] == '+')
            a.erase(0, 1);
        if (b[0] == '+')
            b.erase(0, 1);
        BigInt den(b);
        if (den == 0)
            throw DomainError("malformed q: " + text);
        return from_rational(BigRational(BigInt(a), den));
    }
    std::size_t pos = 0;
    double v;
    try {
        v = std::stod(t, &pos);
    } catch (const std::logic_error&) {
        throw DomainError("malformed q: " + text);
    }
    if (pos != t.size() || !std::isfinite(v))
        throw DomainError("malformed q: " + text);
    return from_double(v);
}

std::string QValue::to_string() const
{
    if (exact) {
        std::ostringstream os;
        os << numerator(*exact) << '/' << denominator(*exact);
        return os.str();
    }
    std::ostringstream os;
    os.precision(12);
    os << value;
    return os.str();
}

std::optional<UnitFactor> unit_ratio(const LaurentPoly& a, const LaurentPoly& b)
{
    if (a.is_zero() || b.is_zero()) {
        if (a.is_zero() && b.is_zero())
            return UnitFactor{};
        return std::nullopt;
    }
    if (a.dense().size() != b.dense().size())
        return std::nullopt;
    const BigInt& la = a.dense().front();
    const BigInt& lb = b.dense().front();
    int sign;
    if (la == lb)
        sign = 1;
    else if (la == -lb)
        sign = -1;
    else
        return std::nullopt;
    UnitFactor u{sign, a.low_degree() - b.low_degree()};
    if (b.unit_scaled(u.sign, u.exponent) != a)
        return std::nullopt;
    return u;
}

bool equal_up_to_unit(const LaurentPoly& a, const LaurentPoly& b)
{
    return unit_ratio(a, b).has_value();
}

std::optional<UnitFactor> unit_ratio(const std::vector<LaurentPoly>& a, const std::vector<LaurentPoly>& b)
{
    if (a.size() != b.size())
        return std::nullopt;
    std::optional<UnitFactor> common;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero() != b[i].is_zero())
            return std::nullopt;
        if (a[i].is_zero())
            continue;
        auto u = unit_ratio(a[i], b[i]);
        if (!u)
            return std::nullopt;
        if (common && !(*common == *u))
            return std::nullopt;
        common = u;
    }
    return common ? common : std::optional<UnitFactor>(UnitFactor{});
}

bool equal_up_to_unit(const std::vector<LaurentPoly>& a, const std::vector<LaurentPoly>& b)
{
    return unit_ratio(a, b).has_value();
}

RatFunc::RatFunc(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den))
{
    if (num_.is_zero() && den_.is_zero())
        throw DomainError("0/0 is not a rational function");
    *this = canonical();
}

RatFunc RatFunc::inf()
{
    return raw(LaurentPoly(1), LaurentPoly());
}

RatFunc RatFunc::raw(LaurentPoly num, LaurentPoly den)
{
    RatFunc r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    return r;
}

RatFunc RatFunc::canonical() const
{
    if (den_.is_zero())
        return inf();
    if (num_.is_zero())
        return raw(LaurentPoly(), LaurentPoly(1));
    BigInt g = boost::multiprecision::gcd(num_.content(), den_.content());
    LaurentPoly n = num_.divided_by_integer(g);
    LaurentPoly d = den_.divided_by_integer(g);
    int sign = d.dense().front() < 0 ? -1 : 1;
    std::int64_t k = -d.low_degree();
    return raw(n.unit_scaled(sign, k), d.unit_scaled(sign, k));
}

bool RatFunc::equivalent(const RatFunc& o) const
{
    return num_ * o.den_ == o.num_ * den_;
}

double RatFunc::eval(double q) const
{
    if (is_inf())
        return std::numeric_limits<double>::infinity();
    return static_cast<double>(num_.eval_long(q) / den_.eval_long(q));
}

std::string RatFunc::to_string() const
{
    if (is_inf())
        return "1/0";
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace qrat
