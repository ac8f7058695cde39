#include "qrat/braid.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <sstream>

namespace qrat {

namespace {

constexpr std::size_t kMaxWordLength = 1u << 20;

bool valid_letter(int l)
{
    return l == 1 || l == -1 || l == 2 || l == -2;
}

}  // namespace

BraidWord::BraidWord(std::initializer_list<int> letters) : BraidWord(std::vector<int>(letters)) {}

BraidWord::BraidWord(std::vector<int> letters) : letters_(std::move(letters))
{
    for (int l : letters_)
        if (!valid_letter(l))
            throw DomainError("invalid braid letter " + std::to_string(l));
    reduce();
}

void BraidWord::reduce()
{
    std::vector<int> out;
    out.reserve(letters_.size());
    for (int l : letters_) {
        if (!out.empty() && out.back() == -l)
            out.pop_back();
        else
            out.push_back(l);
    }
    letters_ = std::move(out);
}

BraidWord BraidWord::power(int gen, long long exp)
{
    if (gen != 1 && gen != 2)
        throw DomainError("generator must be 1 or 2");
    unsigned long long n = exp < 0 ? 0ULL - static_cast<unsigned long long>(exp) : static_cast<unsigned long long>(exp);
    if (n > kMaxWordLength)
        throw DomainError("braid word too long");
    BraidWord w;
    w.letters_.assign(static_cast<std::size_t>(n), exp < 0 ? -gen : gen);
    return w;
}

BraidWord BraidWord::omega()
{
    return BraidWord{2, 1, 2, 1, 2, 1};
}

BraidWord BraidWord::beta(const EvenCF& cf)
{
    std::vector<int> l;
    for (std::size_t i = 0; i < cf.size(); ++i) {
        BraidWord p = i % 2 == 0 ? power(1, -cf[i]) : power(2, cf[i]);
        l.insert(l.end(), p.letters_.begin(), p.letters_.end());
    }
    return BraidWord(std::move(l));
}

BraidWord BraidWord::parse(const std::string& text)
{
    std::istringstream is(text);
    std::string tok;
    std::vector<int> l;
    while (is >> tok) {
        if (tok == "e")
            continue;
        if (tok.size() < 2 || tok[0] != 's' || (tok[1] != '1' && tok[1] != '2'))
            throw DomainError("bad braid token: " + tok);
        int gen = tok[1] - '0';
        long long exp = 1;
        if (tok.size() > 2) {
            if (tok[2] != '^' || tok.size() == 3)
                throw DomainError("bad braid token: " + tok);
            std::string e = tok.substr(3);
            std::size_t pos = 0;
            try {
                exp = std::stoll(e, &pos);
            } catch (const std::logic_error&) {
                throw DomainError("bad braid exponent: " + tok);
            }
            if (pos != e.size())
                throw DomainError("bad braid exponent: " + tok);
        }
        BraidWord p = power(gen, exp);
        if (l.size() + p.letters_.size() > kMaxWordLength)
            throw DomainError("braid word too long");
        l.insert(l.end(), p.letters_.begin(), p.letters_.end());
    }
    return BraidWord(std::move(l));
}

long long BraidWord::exponent_sum() const
{
    long long s = 0;
    for (int l : letters_)
        s += l > 0 ? 1 : -1;
    return s;
}

BraidWord BraidWord::inverse() const
{
    BraidWord w;
    w.letters_.assign(letters_.rbegin(), letters_.rend());
    for (int& l : w.letters_)
        l = -l;
    return w;
}

BraidWord operator*(const BraidWord& a, const BraidWord& b)
{
    std::vector<int> l = a.letters_;
    l.insert(l.end(), b.letters_.begin(), b.letters_.end());
    return BraidWord(std::move(l));
}

std::string BraidWord::to_string() const
{
    if (letters_.empty())
        return "e";
    std::ostringstream os;
    std::size_t i = 0;
    bool first = true;
    while (i < letters_.size()) {
        int g = std::abs(letters_[i]);
        long long e = 0;
        std::size_t j = i;
        while (j < letters_.size() && std::abs(letters_[j]) == g) {
            e += letters_[j] > 0 ? 1 : -1;
            ++j;
        }
        if (!first)
            os << ' ';
        first = false;
        os << 's' << g;
        if (e != 1)
            os << '^' << e;
        i = j;
    }
    return os.str();
}

std::vector<BraidWord> reduced_words(int max_len)
{
    std::vector<BraidWord> out{BraidWord()};
    std::vector<std::vector<int>> frontier{{}};
    for (int len = 0; len < max_len; ++len) {
        std::vector<std::vector<int>> next;
        for (const auto& w : frontier) {
            for (int l : {1, -1, 2, -2}) {
                if (!w.empty() && w.back() == -l)
                    continue;
                auto x = w;
                x.push_back(l);
                next.push_back(std::move(x));
            }
        }
        for (const auto& w : next)
            out.emplace_back(w);
        frontier = std::move(next);
    }
    return out;
}

Mat2q Mat2q::generator(int letter)
{
    const LaurentPoly one(1), zero;
    switch (letter) {
    case 1:
        return {LaurentPoly::monomial(-1), LaurentPoly::monomial(-1, -1), zero, one};
    case -1:
        return {LaurentPoly::monomial(1), one, zero, one};
    case 2:
        return {one, zero, one, LaurentPoly::monomial(-1)};
    case -2:
        return {one, zero, LaurentPoly::monomial(1, -1), LaurentPoly::monomial(1)};
    default:
        throw DomainError("invalid braid letter");
    }
}

Mat2q Mat2q::scaled(int sign, std::int64_t k) const
{
    return {a.unit_scaled(sign, k), b.unit_scaled(sign, k), c.unit_scaled(sign, k), d.unit_scaled(sign, k)};
}

Mat2q Mat2q::inverted_variable() const
{
    return {a.inverted_variable(), b.inverted_variable(), c.inverted_variable(), d.inverted_variable()};
}

Mat2q operator*(const Mat2q& x, const Mat2q& y)
{
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

bool equal_up_to_unit(const Mat2q& x, const Mat2q& y)
{
    auto ex = x.entries();
    auto ey = y.entries();
    return equal_up_to_unit(std::vector<LaurentPoly>(ex.begin(), ex.end()),
                            std::vector<LaurentPoly>(ey.begin(), ey.end()));
}

Mat2z Mat2z::generator(int letter)
{
    switch (letter) {
    case 1:
        return {1, -1, 0, 1};
    case -1:
        return {1, 1, 0, 1};
    case 2:
        return {1, 0, 1, 1};
    case -2:
        return {1, 0, -1, 1};
    default:
        throw DomainError("invalid braid letter");
    }
}

Mat2z operator*(const Mat2z& x, const Mat2z& y)
{
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Mat2q word_matrix_q(const BraidWord& w)
{
    Mat2q m;
    for (int l : w.letters())
        m = m * Mat2q::generator(l);
    return m;
}

Mat2z word_matrix_z(const BraidWord& w)
{
    Mat2z m;
    for (int l : w.letters())
        m = m * Mat2z::generator(l);
    return m;
}

std::pair<LaurentPoly, LaurentPoly> mobius_apply_pair(const Mat2q& m, const LaurentPoly& n, const LaurentPoly& d)
{
    return {m.a * n + m.b * d, m.c * n + m.d * d};
}

RatFunc mobius_apply(const Mat2q& m, const RatFunc& x)
{
    auto [n, d] = mobius_apply_pair(m, x.num(), x.den());
    if (n.is_zero() && d.is_zero())
        throw DomainError("indeterminate Moebius image");
    return RatFunc(n, d);
}

double mobius_apply(const Mat2q& m, double x, double q)
{
    double a = m.a.eval(q), b = m.b.eval(q), c = m.c.eval(q), d = m.d.eval(q);
    double n, den;
    if (std::isinf(x)) {
        n = a;
        den = c;
    } else {
        n = a * x + b;
        den = c * x + d;
    }
    if (den == 0.0) {
        if (n == 0.0)
            throw DomainError("indeterminate Moebius image");
        return std::numeric_limits<double>::infinity();
    }
    return n / den;
}

Rational mobius_apply(const Mat2z& m, const Rational& x)
{
    return Rational(m.a * x.num() + m.b * x.den(), m.c * x.num() + m.d * x.den());
}

Rational braid_label(const BraidWord& w)
{
    Mat2z m = word_matrix_z(w);
    return Rational(m.a, m.c);
}

bool NormalForm::strict() const
{
    switch (form) {
    case 1:
        return M <= 0;
    case 2:
        return M >= 0;
    case 3:
        return true;
    default:
        return M <= 0;
    }
}

BraidWord NormalForm::prefix() const
{
    if (form == 3)
        return {};
    if (form == 4)
        return BraidWord{1, 2};
    return BraidWord::beta(digits);
}

BraidWord NormalForm::to_word() const
{
    BraidWord w = prefix() * BraidWord::power(1, M);
    BraidWord om = N >= 0 ? BraidWord::omega() : BraidWord::omega().inverse();
    for (long long i = 0; i < (N >= 0 ? N : -N); ++i)
        w = w * om;
    return w;
}

NormalForm continued_normal_form(const BraidWord& w)
{
    Rational lab = braid_label(w);
    NormalForm nf;
    if (lab.is_inf()) {
        nf.form = 3;
    } else if (lab.is_zero()) {
        nf.form = 4;
    } else {
        nf.form = lab.sign() > 0 ? 1 : 2;
        nf.digits = to_even_cf(lab);
    }
    BraidWord pre = nf.prefix();
    Mat2z t = word_matrix_z(pre.inverse() * w);
    // t = +-[[1,-M],[0,1]]
    if (t.c != 0 || abs(t.a) != 1 || t.d != t.a)
        throw std::logic_error("normal form: residual is not a power of s1");
    BigInt m = -t.b * t.a;
    if (abs(m) > BigInt(std::numeric_limits<long long>::max() / 2))
        throw DomainError("normal form exponent out of range");
    nf.M = m.convert_to<long long>();
    long long rem = w.exponent_sum() - pre.exponent_sum() - nf.M;
    if (rem % 6 != 0)
        throw std::logic_error("normal form: exponent sum not divisible by 6");
    nf.N = rem / 6;
    return nf;
}

StrictResult strictify(const NormalForm& nf)
{
    if (nf.strict())
        return {nf, 0};
    StrictResult r{nf, nf.M};
    r.nf.M = 0;
    return r;
}

}  // namespace qrat
