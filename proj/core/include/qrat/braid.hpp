#pragma once

#include <array>
#include <string>
#include <vector>

#include "qrat/contfrac.hpp"
#include "qrat/laurent.hpp"

namespace qrat {

// Letters are +-1 (sigma1^{+-1}) and +-2 (sigma2^{+-1}).
// The leftmost letter acts last.
class BraidWord {
public:
    BraidWord() = default;
    BraidWord(std::initializer_list<int> letters);
    explicit BraidWord(std::vector<int> letters);

    // "s1^-2 s2^2"; also accepts "" or "e" for the empty word
    static BraidWord parse(const std::string& text);
    // s1^{-a1} s2^{a2} s1^{-a3} ...
    static BraidWord beta(const EvenCF& cf);
    static BraidWord power(int gen, long long exp);
    static BraidWord omega();

    const std::vector<int>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    long long exponent_sum() const;
    BraidWord inverse() const;

    friend BraidWord operator*(const BraidWord& a, const BraidWord& b);
    friend bool operator==(const BraidWord&, const BraidWord&) = default;

    std::string to_string() const;

private:
    void reduce();
    std::vector<int> letters_;
};

// all freely reduced words of length <= max_len, shortest first
std::vector<BraidWord> reduced_words(int max_len);

struct Mat2q {
    LaurentPoly a{1}, b{0}, c{0}, d{1};

    static Mat2q identity() { return {}; }
    static Mat2q generator(int letter);
    LaurentPoly det() const { return a * d - b * c; }
    std::array<LaurentPoly, 4> entries() const { return {a, b, c, d}; }
    Mat2q scaled(int sign, std::int64_t k) const;
    Mat2q inverted_variable() const;
    friend Mat2q operator*(const Mat2q& x, const Mat2q& y);
    friend bool operator==(const Mat2q&, const Mat2q&) = default;
};

bool equal_up_to_unit(const Mat2q& x, const Mat2q& y);

struct Mat2z {
    BigInt a{1}, b{0}, c{0}, d{1};
    static Mat2z generator(int letter);
    friend Mat2z operator*(const Mat2z& x, const Mat2z& y);
    friend bool operator==(const Mat2z&, const Mat2z&) = default;
};

Mat2q word_matrix_q(const BraidWord& w);
Mat2z word_matrix_z(const BraidWord& w);

// (a x + b)/(c x + d); inf handled as 1/0
RatFunc mobius_apply(const Mat2q& m, const RatFunc& x);
// homogeneous version: returns (a n + b d, c n + d d) without reduction
std::pair<LaurentPoly, LaurentPoly> mobius_apply_pair(const Mat2q& m, const LaurentPoly& n, const LaurentPoly& d);
// numeric; x may be +-inf
double mobius_apply(const Mat2q& m, double x, double q);
Rational mobius_apply(const Mat2z& m, const Rational& x);

// q = 1 image of the first basis vector, sign fixed so that s >= 0
Rational braid_label(const BraidWord& w);

struct NormalForm {
    int form = 3;
    EvenCF digits;
    long long M = 0;
    long long N = 0;

    bool strict() const;
    BraidWord prefix() const;
    // prefix * s1^M * omega^N
    BraidWord to_word() const;
    friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

NormalForm continued_normal_form(const BraidWord& w);

struct StrictResult {
    NormalForm nf;
    // sigma1 exponent removed; word.P1 = strict.P1 [-shift]
    long long shift = 0;
};

StrictResult strictify(const NormalForm& nf);

}  // namespace qrat
