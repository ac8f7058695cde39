#include "qrat/contfrac.hpp"

#include <cctype>
#include <limits>
#include <sstream>

namespace qrat {

Rational::Rational(const BigInt& r, const BigInt& s)
{
    if (r == 0 && s == 0)
        throw DomainError("0/0 is not a rational number");
    BigInt rr = r, ss = s;
    if (ss < 0) {
        rr = -rr;
        ss = -ss;
    }
    if (ss == 0) {
        r_ = 1;
        s_ = 0;
        return;
    }
    BigInt g = boost::multiprecision::gcd(abs(rr), ss);
    r_ = rr / g;
    s_ = ss / g;
}

Rational Rational::parse(const std::string& text)
{
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            t.push_back(c);
    if (t == "inf" || t == "oo")
        return infinity();
    auto valid_int = [](const std::string& s) {
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i == s.size())
            return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                return false;
        return true;
    };
    auto slash = t.find('/');
    std::string a = t.substr(0, slash);
    std::string b = slash == std::string::npos ? "1" : t.substr(slash + 1);
    if (!valid_int(a) || !valid_int(b))
        throw DomainError("malformed rational: " + text);
    if (a[0] == '+')
        a.erase(0, 1);
    if (b[0] == '+')
        b.erase(0, 1);
    return Rational(BigInt(a), BigInt(b));
}

double Rational::to_double() const
{
    if (is_inf())
        return std::numeric_limits<double>::infinity();
    return BigRational(r_, s_).convert_to<double>();
}

std::string Rational::to_string() const
{
    std::ostringstream os;
    os << r_ << '/' << s_;
    return os.str();
}

bool operator<(const Rational& a, const Rational& b)
{
    if (a.is_inf())
        return false;
    if (b.is_inf())
        return true;
    return a.r_ * b.s_ < b.r_ * a.s_;
}

namespace {

EvenCF positive_cf(BigInt r, BigInt s)
{
    EvenCF d;
    while (s != 0) {
        BigInt a = r / s;
        if (a > std::numeric_limits<long long>::max())
            throw DomainError("continued fraction digit out of range");
        d.push_back(a.convert_to<long long>());
        BigInt t = r - a * s;
        r = s;
        s = t;
    }
    if (d.size() % 2 == 1) {
        d.back() -= 1;
        d.push_back(1);
    }
    return d;
}

}  // namespace

EvenCF to_even_cf(const Rational& x)
{
    if (x.is_inf())
        return {};
    if (x.is_zero())
        return {-1, 1};
    if (x.sign() > 0)
        return positive_cf(x.num(), x.den());
    EvenCF d = positive_cf(-x.num(), x.den());
    for (auto& a : d)
        a = -a;
    return d;
}

Rational cf_value_any(const std::vector<long long>& digits)
{
    if (digits.empty())
        return Rational::infinity();
    // homogeneous pair, so a vanishing tail just gives inf
    BigInt num = digits.back(), den = 1;
    for (auto it = digits.rbegin() + 1; it != digits.rend(); ++it) {
        BigInt n = BigInt(*it) * num + den;
        den = num;
        num = n;
    }
    return Rational(num, den);
}

bool is_valid_even_cf(const EvenCF& cf)
{
    if (cf.empty())
        return true;
    if (cf.size() % 2 == 1)
        return false;
    if (cf == EvenCF{-1, 1})
        return true;
    // a1 = 0 is shared by both signs, so a2 decides
    bool pos = cf[1] > 0;
    if (pos ? cf[0] < 0 : cf[0] > 0)
        return false;
    for (std::size_t i = 1; i < cf.size(); ++i)
        if (pos ? cf[i] < 1 : cf[i] > -1)
            return false;
    return true;
}

Rational cf_value(const EvenCF& cf)
{
    if (!is_valid_even_cf(cf))
        throw DomainError("not an even continued fraction: " + cf_to_string(cf));
    return cf_value_any(cf);
}

std::string cf_to_string(const EvenCF& cf)
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < cf.size(); ++i)
        os << (i ? "," : "") << cf[i];
    os << ']';
    return os.str();
}

EvenCF parse_cf(const std::string& text)
{
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            t.push_back(c);
    if (t.size() < 2 || t.front() != '[' || t.back() != ']')
        throw DomainError("malformed continued fraction: " + text);
    t = t.substr(1, t.size() - 2);
    EvenCF d;
    if (t.empty())
        return d;
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            long long v = std::stoll(item, &pos);
            if (pos != item.size())
                throw DomainError("malformed continued fraction: " + text);
            d.push_back(v);
        } catch (const std::logic_error&) {
            throw DomainError("malformed continued fraction: " + text);
        }
    }
    return d;
}

}  // namespace qrat
