#include "qrat/stabmass.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace qrat {

TypeConvention parse_convention(const std::string& text)
{
    if (text == "phi1<phi2" || text == "below")
        return TypeConvention::AWhenPhi1BelowPhi2;
    if (text == "phi1>phi2" || text == "above")
        return TypeConvention::AWhenPhi1AbovePhi2;
    throw DomainError("unknown type convention: " + text);
}

std::string convention_name(TypeConvention c)
{
    return c == TypeConvention::AWhenPhi1BelowPhi2 ? "phi1<phi2" : "phi1>phi2";
}

double phase(std::complex<double> z)
{
    if (z == 0.0)
        throw DomainError("zero central charge");
    double p = std::arg(z) / M_PI;
    if (!(p > 0 && p <= 1))
        throw DomainError("central charge outside the upper half plane");
    return p;
}

StdStabCond StdStabCond::from_charges(std::complex<double> z1, std::complex<double> z2, TypeConvention conv)
{
    StdStabCond t;
    t.z1 = z1;
    t.z2 = z2;
    t.phi1 = phase(z1);
    t.phi2 = phase(z2);
    if (std::fabs(t.phi1 - t.phi2) <= 1e-12) {
        t.type_a = t.type_b = true;
        return t;
    }
    bool below = t.phi1 < t.phi2;
    t.type_a = conv == TypeConvention::AWhenPhi1BelowPhi2 ? below : !below;
    t.type_b = !t.type_a;
    return t;
}

StdStabCond StdStabCond::normalized() const
{
    StdStabCond t = *this;
    double s = 1 / std::abs(z1);
    t.z1 *= s;
    t.z2 *= s;
    return t;
}

std::complex<double> parse_complex(const std::string& text)
{
    std::string t;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            t.push_back(ch);
    if (t.empty())
        throw DomainError("empty complex number");
    auto num = [&](const std::string& s) {
        if (s.empty() || s == "+")
            return 1.0;
        if (s == "-")
            return -1.0;
        std::size_t pos = 0;
        double v;
        try {
            v = std::stod(s, &pos);
        } catch (const std::logic_error&) {
            throw DomainError("malformed complex number: " + text);
        }
        if (pos != s.size())
            throw DomainError("malformed complex number: " + text);
        return v;
    };
    if (t.back() != 'i')
        return {num(t), 0.0};
    std::string body = t.substr(0, t.size() - 1);
    // split at the last sign that is not part of an exponent
    std::size_t split = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    if (split == std::string::npos)
        return {0.0, num(body)};
    return {num(body.substr(0, split)), num(body.substr(split))};
}

BasicMasses basic_masses(const StdStabCond& tau, double q)
{
    if (!(q > 0))
        throw DomainError("q must be positive");
    BasicMasses m;
    m.p1 = std::pow(q, tau.phi1) * std::abs(tau.z1);
    m.p2 = std::pow(q, tau.phi2) * std::abs(tau.z2);
    std::complex<double> z = tau.z1 + tau.z2;
    double ext = std::pow(q, phase(z)) * std::abs(z);
    m.p21 = tau.type_a ? ext : m.p1 + m.p2;
    m.p12 = tau.type_b ? ext : m.p1 + m.p2;
    return m;
}

std::array<double, 3> triangle_margins(double m1, double m2, double m_ext, double q, StabType type)
{
    double u = type == StabType::A ? q : 1 / q;
    // (1+u) c, (1+u) b, (1+u) a / u
    return {m1 + m2 - m_ext, m_ext + u * m1 - m2, m_ext - m1 + m2 / u};
}

GromovCoords gromov(double m1, double m2, double m_ext, double q, StabType type)
{
    if (!(q > 0))
        throw DomainError("q must be positive");
    double u = type == StabType::A ? q : 1 / q;
    auto mg = triangle_margins(m1, m2, m_ext, q, type);
    GromovCoords g;
    g.c = mg[0] / (1 + u);
    g.b = mg[1] / (1 + u);
    g.a = u * mg[2] / (1 + u);
    double tol = kGromovTolerance * std::max({1.0, std::fabs(m1), std::fabs(m2), std::fabs(m_ext)});
    for (double* x : {&g.a, &g.b, &g.c}) {
        if (*x < -tol) {
            std::ostringstream os;
            os << "triangle inequality violated: gromov coordinates (" << g.a << ", " << g.b << ", " << g.c << ")";
            throw InequalityViolation(os.str());
        }
        *x = std::max(*x, 0.0);
    }
    return g;
}

GromovCoords gromov(const StdStabCond& tau, double q)
{
    BasicMasses m = basic_masses(tau, q);
    if (tau.type_a)
        return gromov(m.p1, m.p2, m.p21, q, StabType::A);
    return gromov(m.p1, m.p2, m.p12, q, StabType::B);
}

LaurentPoly occ_p21(const HNVector& v)
{
    const LaurentPoly q = LaurentPoly::monomial(1);
    return v.p1 + q * v.p2 + (LaurentPoly(1) + q) * v.p12;
}

LaurentPoly occ_p12(const HNVector& v)
{
    const LaurentPoly qi = LaurentPoly::monomial(-1);
    return v.p1 + qi * v.p2 + (LaurentPoly(1) + qi) * v.p21;
}

Probe probe_for(const Rational& x)
{
    return {x.is_inf() ? "inf" : x.to_string(), BraidWord::beta(x.is_inf() ? EvenCF{} : to_even_cf(x))};
}

std::vector<Probe> default_probes()
{
    std::vector<Probe> p;
    for (const char* s : {"0", "1", "-1", "2", "-2", "1/2", "-1/2", "1/3", "2/3", "3/2", "5/2", "inf"})
        p.push_back(probe_for(Rational::parse(s)));
    Probe one = probe_for(Rational(1));
    p.push_back({"s2.1", BraidWord{2} * one.word});
    return p;
}

std::vector<Probe> parse_probes(const std::string& text)
{
    std::vector<Probe> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty())
            out.push_back(probe_for(Rational::parse(item)));
    if (out.empty())
        throw DomainError("empty probe list");
    return out;
}

double mass_of(const StdStabCond& tau, double q, const SphericalObject& x)
{
    GromovCoords g = gromov(tau, q);
    const HNVector& v = x.vector;
    LaurentPoly third = tau.type_a ? occ_p21(v) : occ_p12(v);
    return g.a * occ(Basic::P1, v).eval(q) + g.b * occ(Basic::P2, v).eval(q) + g.c * third.eval(q);
}

double mass_direct(const StdStabCond& tau, double q, const SphericalObject& x)
{
    BasicMasses m = basic_masses(tau, q);
    const HNVector& v = x.vector;
    return v.p1.eval(q) * m.p1 + v.p2.eval(q) * m.p2 + v.p12.eval(q) * m.p12 + v.p21.eval(q) * m.p21;
}

MassVector mass_vector(const StdStabCond& tau, double q, const std::vector<Probe>& probes)
{
    MassVector mv;
    for (const auto& p : probes) {
        mv.names.push_back(p.name);
        mv.values.push_back(mass_of(tau, q, orbit(p.word)));
    }
    return mv;
}

std::string degeneracy_name(Degeneracy d)
{
    switch (d) {
    case Degeneracy::Strict:
        return "strict";
    case Degeneracy::Equality:
        return "equality";
    default:
        return "violation";
    }
}

DegeneracyReport degeneracy_check(const StdStabCond& tau, double q)
{
    BasicMasses m = basic_masses(tau, q);
    DegeneracyReport r;
    StabType type = tau.type_a ? StabType::A : StabType::B;
    double ext = tau.type_a ? m.p21 : m.p12;
    r.margins = triangle_margins(m.p1, m.p2, ext, q, type);
    double lo = *std::min_element(r.margins.begin(), r.margins.end());
    if (lo < -kDegeneracyTolerance)
        r.kind = Degeneracy::Violation;
    else if (lo <= kDegeneracyTolerance)
        r.kind = Degeneracy::Equality;
    else
        r.kind = Degeneracy::Strict;
    r.sum_identity = std::fabs(m.p21 - (m.p1 + m.p2)) <= kDegeneracyTolerance;
    return r;
}

double sss_T(double q, double c, double t)
{
    if (!(q > 0 && q < 1))
        throw DomainError("q must lie in (0,1)");
    if (!(c > 0))
        throw DomainError("c must be positive");
    if (!(t >= 0 && t <= 1))
        throw DomainError("t must lie in [0,1]");
    double r = c * std::pow(q, -t);
    double len2 = 1 + r * r + 2 * r * std::cos(M_PI * t);
    if (len2 <= 0)
        return 0.0;
    double len = std::sqrt(len2);
    double cosv = std::clamp((1 + r * std::cos(M_PI * t)) / len, -1.0, 1.0);
    return std::pow(q, std::acos(cosv) / M_PI) * len;
}

double projective_distance(const std::vector<double>& v, const std::vector<double>& t)
{
    if (v.size() != t.size() || v.empty())
        throw DomainError("vectors of different length");
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0 || t[i] == 0 || (v[i] > 0) != (t[i] > 0))
            return std::numeric_limits<double>::infinity();
        double l = std::log(v[i] / t[i]);
        lo = std::min(lo, l);
        hi = std::max(hi, l);
    }
    return hi - lo;
}

BoundaryLimitReport boundary_limit(const BraidWord& w, double q, const std::vector<Probe>& probes, long long m_max)
{
    if (!(q > 0 && q < 1))
        throw DomainError("q must lie in (0,1)");
    if (m_max < 1)
        throw DomainError("m_max must be positive");
    BoundaryLimitReport rep;
    BraidWord winv = w.inverse();
    for (const auto& p : probes) {
        rep.names.push_back(p.name);
        rep.target.push_back(hom(Basic::P1, orbit(winv * p.word)).eval(q));
    }
    for (long long m = 1; m <= m_max; ++m) {
        // q^-1 / [m]_{q^-1}
        double scale = (1 - 1 / q) / (1 - std::pow(q, -static_cast<double>(m))) / q;
        std::vector<double> v;
        for (const auto& p : probes)
            v.push_back(occ(Basic::P2, orbit(BraidWord::power(1, m) * winv * p.word)).eval(q) * scale);
        rep.steps.push_back({m, projective_distance(v, rep.target)});
        if (m == m_max)
            rep.last = std::move(v);
    }
    rep.final_distance = rep.steps.back().distance;
    return rep;
}

}  // namespace qrat
