#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qrat {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// exponent arithmetic with overflow detection
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

// Integer Laurent polynomial in q, stored densely from the lowest exponent.
// Invariant: the first and last stored coefficients are non-zero.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long long c);  // NOLINT: integers convert implicitly
    LaurentPoly(const BigInt& c);

    static LaurentPoly monomial(std::int64_t e, const BigInt& c = 1);
    static LaurentPoly q() { return monomial(1); }
    static LaurentPoly from_terms(const std::map<std::int64_t, BigInt>& terms);
    static LaurentPoly from_coeffs(std::int64_t low, std::vector<BigInt> coeffs);
    // 1 + q + ... + q^(n-1) as a Laurent polynomial for any integer n
    static LaurentPoly q_int(std::int64_t n);

    bool is_zero() const { return c_.empty(); }
    std::int64_t low_degree() const;
    std::int64_t high_degree() const;
    std::size_t term_count() const;
    BigInt coeff(std::int64_t e) const;
    const std::vector<BigInt>& dense() const { return c_; }
    std::map<std::int64_t, BigInt> terms() const;
    // coefficients from low to high degree, zeros included
    std::vector<BigInt> coefficient_sequence() const { return c_; }

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly operator-() const;

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b)
    {
        return a.low_ == b.low_ && a.c_ == b.c_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    // multiply by q^k
    LaurentPoly shifted(std::int64_t k) const;
    // scalar multiply by s*q^k, s = +-1
    LaurentPoly unit_scaled(int sign, std::int64_t k) const;
    // substitute q -> q^-1
    LaurentPoly inverted_variable() const;
    // gcd of absolute values of the coefficients (0 for the zero polynomial)
    BigInt content() const;
    LaurentPoly divided_by_integer(const BigInt& d) const;
    // coefficients with absolute value taken
    LaurentPoly abs_coefficients() const;
    bool all_coefficients_nonnegative() const;

    double eval(double q) const;
    long double eval_long(long double q) const;
    BigRational eval_exact(const BigRational& q) const;

    // "1+2*q+q^2", ascending degree; "0" for zero
    std::string to_string() const;
    static LaurentPoly parse(const std::string& text);

private:
    void trim();

    std::int64_t low_ = 0;
    std::vector<BigInt> c_;
};

// a = sign * q^exponent * b
struct UnitFactor {
    int sign = 1;
    std::int64_t exponent = 0;
    friend bool operator==(const UnitFactor&, const UnitFactor&) = default;
};

std::optional<UnitFactor> unit_ratio(const LaurentPoly& a, const LaurentPoly& b);
bool equal_up_to_unit(const LaurentPoly& a, const LaurentPoly& b);
// componentwise with one common unit; zero entries must match zero entries
std::optional<UnitFactor> unit_ratio(const std::vector<LaurentPoly>& a, const std::vector<LaurentPoly>& b);
bool equal_up_to_unit(const std::vector<LaurentPoly>& a, const std::vector<LaurentPoly>& b);

// Value of q given as a decimal or as an exact fraction "3/10".
struct QValue {
    double value = 0.5;
    std::optional<BigRational> exact;

    static QValue parse(const std::string& text);
    static QValue from_double(double v) { return {v, std::nullopt}; }
    static QValue from_rational(const BigRational& r);
    std::string to_string() const;
};

// Ratio of Laurent polynomials. INF is (1, 0).
class RatFunc {
public:
    RatFunc() : num_(0), den_(1) {}
    RatFunc(LaurentPoly num, LaurentPoly den);  // canonicalizes
    RatFunc(const LaurentPoly& p) : RatFunc(p, LaurentPoly(1)) {}  // NOLINT

    static RatFunc inf();
    // stores the pair as given, no canonicalization
    static RatFunc raw(LaurentPoly num, LaurentPoly den);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_inf() const { return den_.is_zero(); }

    // equality as rational functions (cross multiplication)
    bool equivalent(const RatFunc& o) const;
    friend bool operator==(const RatFunc& a, const RatFunc& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    RatFunc canonical() const;
    double eval(double q) const;
    std::string to_string() const;

private:
    LaurentPoly num_;
    LaurentPoly den_;
};

}  // namespace qrat
