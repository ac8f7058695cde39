#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qrat/contfrac.hpp"
#include "qrat/laurent.hpp"
#include "qrat/qrationals.hpp"

namespace qrat {

// digit k (0-based) of an infinite positive continued fraction
using DigitStream = std::function<long long(std::size_t)>;

DigitStream constant_digits(long long a);
DigitStream periodic_digits(std::vector<long long> period, std::vector<long long> preperiod = {});

struct IrrationalValue {
    double value = 0;
    double error_bound = 0;
};

// [a1..a_depth] sharp, numerically, with the bound q^{a1+a3+...-1}
IrrationalValue q_irrational(double q, const DigitStream& digits, std::size_t depth);

// nested q-continued fraction of any nonempty digit list
long double cf_eval(const std::vector<long long>& digits, Side side, long double q);
BigRational cf_eval_exact(const std::vector<long long>& digits, Side side, const BigRational& q);
// q^{a1+a3+...-1} over the given digits
BigRational error_bound_exact(const std::vector<long long>& digits, const BigRational& q);
double error_bound(const std::vector<long long>& digits, double q);

enum class TailSide { Left, Right };
TailSide parse_tail_side(const std::string& text);

// digit lists whose values converge to [x]flat (left) or [x]sharp (right)
std::vector<long long> tail_sequence(const EvenCF& base, TailSide side, long long m);

struct TailStep {
    long long m = 0;
    double approx = 0;
    double error = 0;
    double bound = 0;
    bool bound_ok = true;
};

struct TailReport {
    double target = 0;
    std::vector<TailStep> steps;
    double final_error = 0;
    bool converged = false;
    bool bound_dominates = true;
    bool exact = false;
};

// errors and bounds are exact when q carries an exact value
TailReport tail_limit_check(const Rational& base, TailSide side, const QValue& q, long long m_max,
                            double tol = 1e-6);

struct OrderReport {
    bool ok = false;
    // flat(t), sharp(t), flat(t'), sharp(t'); +inf for sharp(inf)
    double values[4] = {0, 0, 0, 0};
};

OrderReport order_check(const Rational& t, const Rational& t2, const QValue& q);

enum class BoundaryKind { IntervalPoint, Irrational };

struct BoundaryClass {
    BoundaryKind kind = BoundaryKind::Irrational;
    std::optional<Rational> rational;
    std::optional<double> t;
    std::vector<long long> cf_prefix;
};

// relative endpoint tolerance; with an exact q only the rounding of p itself is absorbed
constexpr double kClassifyTolerance = 1e-12;
constexpr double kClassifyExactTolerance = 8 * 2.220446049250313e-16;
constexpr std::size_t kClassifyMaxSteps = 4000;

BoundaryClass classify_boundary_point(double p, const QValue& q, std::size_t max_depth);

}  // namespace qrat
