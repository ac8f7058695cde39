#pragma once

#include <array>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "qrat/braid.hpp"
#include "qrat/hnauto.hpp"

namespace qrat {

struct InequalityViolation : std::domain_error {
    using std::domain_error::domain_error;
};

// which extension is semistable when phi1 != phi2
enum class TypeConvention {
    AWhenPhi1BelowPhi2,  // P21 semistable iff phi1 <= phi2
    AWhenPhi1AbovePhi2,  // P21 semistable iff phi1 >= phi2
};

TypeConvention parse_convention(const std::string& text);
std::string convention_name(TypeConvention c);

constexpr TypeConvention kDefaultConvention = TypeConvention::AWhenPhi1BelowPhi2;

// phase in (0,1] of a nonzero point of the closed upper half plane minus the positive reals
double phase(std::complex<double> z);

struct StdStabCond {
    std::complex<double> z1{0, 1};
    std::complex<double> z2{0, 1};
    double phi1 = 0.5;
    double phi2 = 0.5;
    bool type_a = true;
    bool type_b = true;

    static StdStabCond from_charges(std::complex<double> z1, std::complex<double> z2,
                                    TypeConvention conv = kDefaultConvention);
    bool degenerate() const { return type_a && type_b; }
    // C-action: rotate and scale so that z1 = 1 up to its phase, |z1| = 1
    StdStabCond normalized() const;
};

std::complex<double> parse_complex(const std::string& text);

struct BasicMasses {
    double p1 = 0, p2 = 0, p12 = 0, p21 = 0;
};

BasicMasses basic_masses(const StdStabCond& tau, double q);

struct GromovCoords {
    double a = 0, b = 0, c = 0;
};

enum class StabType { A, B };

constexpr double kGromovTolerance = 1e-12;

// type A: m1 = b+c, m2 = a+qc, m21 = a+b; type B reads m12 and uses q^-1
GromovCoords gromov(double m1, double m2, double m_ext, double q, StabType type = StabType::A);
GromovCoords gromov(const StdStabCond& tau, double q);

// the three triangle inequalities as margins (nonnegative when they hold)
std::array<double, 3> triangle_margins(double m1, double m2, double m_ext, double q, StabType type);

struct Probe {
    std::string name;
    BraidWord word;  // probe object is word.P1
};

Probe probe_for(const Rational& x);
std::vector<Probe> default_probes();
std::vector<Probe> parse_probes(const std::string& text);

struct MassVector {
    std::vector<std::string> names;
    std::vector<double> values;
};

// a occ(P1)(X) + b occ(P2)(X) + c occ(P21 or P12)(X)
double mass_of(const StdStabCond& tau, double q, const SphericalObject& x);
// the same mass summed over the HN factors of x with the basic masses
double mass_direct(const StdStabCond& tau, double q, const SphericalObject& x);
MassVector mass_vector(const StdStabCond& tau, double q, const std::vector<Probe>& probes);

// occ_q(P21, -) and occ_q(P12, -) on an HN vector
LaurentPoly occ_p21(const HNVector& v);
LaurentPoly occ_p12(const HNVector& v);

enum class Degeneracy { Strict, Equality, Violation };
std::string degeneracy_name(Degeneracy d);

struct DegeneracyReport {
    Degeneracy kind = Degeneracy::Strict;
    std::array<double, 3> margins{};
    bool sum_identity = false;  // m(P21) = m(P1) + m(P2) within tolerance
};

constexpr double kDegeneracyTolerance = 1e-9;

DegeneracyReport degeneracy_check(const StdStabCond& tau, double q);

// q^{phi(1+w_t)} |1+w_t| with w_t of phase t and length q^-t c
double sss_T(double q, double c, double t);

struct BoundaryLimitStep {
    long long m = 0;
    double distance = 0;
};

struct BoundaryLimitReport {
    std::vector<std::string> names;
    std::vector<double> target;  // hom(P1, w^-1 X)
    std::vector<double> last;    // normalized occ vector at m_max
    std::vector<BoundaryLimitStep> steps;
    double final_distance = 0;
};

// max minus min of log(v_i / t_i); infinite on sign mismatch or zeros
double projective_distance(const std::vector<double>& v, const std::vector<double>& t);

BoundaryLimitReport boundary_limit(const BraidWord& w, double q, const std::vector<Probe>& probes, long long m_max);

}  // namespace qrat
