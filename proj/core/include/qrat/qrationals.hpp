#pragma once

#include <string>

#include "qrat/braid.hpp"
#include "qrat/contfrac.hpp"
#include "qrat/laurent.hpp"

namespace qrat {

enum class Side { Sharp, Flat };

std::string side_name(Side s);
Side parse_side(const std::string& text);

struct QPair {
    LaurentPoly R;
    LaurentPoly S;
    friend bool operator==(const QPair&, const QPair&) = default;
    RatFunc ratio() const { return RatFunc::raw(R, S); }
    double eval(double q) const;
};

struct QRatPair {
    Rational base;
    QPair sharp;
    QPair flat;
};

// [n] for the given side as a Laurent polynomial; negative n allowed
LaurentPoly q_integer_poly(long long n, Side side);
RatFunc q_integer(long long n, Side side);

// the fixed rows for 0 and inf, otherwise divides by the lowest (x > 0) or
// highest (x < 0) degree term of S
QPair normalize_qrat(const LaurentPoly& R, const LaurentPoly& S, const Rational& x, Side side);

// unnormalized pair of the nested q-continued fraction for any nonempty digit
// list; odd positions use q, even positions q^-1, the last digit uses side
std::pair<LaurentPoly, LaurentPoly> cf_formula_pair(const std::vector<long long>& digits, Side side);

// beta_a applied to inf (sharp) or to 1/(1-q) (flat)
QPair deform_braid(const Rational& x, Side side);
// nested continued fraction in q and q^-1
QPair deform_cf(const Rational& x, Side side);
// first column of the matrix formula divided by its stated unit
QPair deform_matrix(const Rational& x, Side side);
inline QPair deform(const Rational& x, Side side) { return deform_braid(x, side); }
QRatPair deform_both(const Rational& x);
double deform_eval(const Rational& x, Side side, double q);

struct MatrixFormulaReport {
    bool ok = true;
    std::string diagnostic;
};

// the truncated rational r'/s' with CF a1..a_{2n-1}
Rational truncated_rational(const Rational& x);
MatrixFormulaReport matrix_formula_check(const Rational& x);

QPair left_from_right(const LaurentPoly& rsharp, const LaurentPoly& ssharp, const LaurentPoly& rsharp_p,
                      const LaurentPoly& ssharp_p, const Rational& x);
QPair left_from_right(const Rational& x);

// -1/(q [x]) = [-s/r] on both sides
bool negate_symmetry(const Rational& x);
// the same check with the map x -> -q/x
bool negate_symmetry_qover(const Rational& x);

}  // namespace qrat
