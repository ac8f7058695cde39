#pragma once

#include <string>
#include <vector>

#include "qrat/laurent.hpp"

namespace qrat {

// Element of Q u {inf}; inf is 1/0, zero is 0/1.
class Rational {
public:
    Rational() : r_(0), s_(1) {}
    Rational(const BigInt& r, const BigInt& s = 1);  // NOLINT

    static Rational infinity() { return Rational(1, 0); }
    // "r/s", "r", or "inf"
    static Rational parse(const std::string& text);

    const BigInt& num() const { return r_; }
    const BigInt& den() const { return s_; }
    bool is_inf() const { return s_ == 0; }
    bool is_zero() const { return r_ == 0; }
    int sign() const { return r_ > 0 ? 1 : (r_ < 0 ? -1 : 0); }
    double to_double() const;

    std::string to_string() const;
    friend bool operator==(const Rational&, const Rational&) = default;
    // total order with inf on top
    friend bool operator<(const Rational& a, const Rational& b);

private:
    BigInt r_;
    BigInt s_;
};

using EvenCF = std::vector<long long>;

EvenCF to_even_cf(const Rational& x);
Rational cf_value(const EvenCF& cf);
// any finite digit list, no parity requirement; an empty list is inf
Rational cf_value_any(const std::vector<long long>& digits);
bool is_valid_even_cf(const EvenCF& cf);

std::string cf_to_string(const EvenCF& cf);
EvenCF parse_cf(const std::string& text);

}  // namespace qrat
