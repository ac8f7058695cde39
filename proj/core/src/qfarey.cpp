#include "qrat/qfarey.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "qrat/braid.hpp"

#ifndef QRAT_VERSION
#define QRAT_VERSION "0.0.0"
#endif

namespace qrat {

std::string library_version()
{
    return QRAT_VERSION;
}

std::string half_name(FareyHalf h)
{
    return h == FareyHalf::Positive ? "positive" : "negative";
}

FareyHalf parse_half(const std::string& text)
{
    if (text == "positive" || text == "pos" || text == "+")
        return FareyHalf::Positive;
    if (text == "negative" || text == "neg" || text == "-")
        return FareyHalf::Negative;
    throw DomainError("unknown half: " + text);
}

RatFunc QFareyTriangle::vertex(int i) const
{
    const QPair& p = i == 0 ? left : (i == 1 ? middle : right);
    return RatFunc::raw(p.R, p.S);
}

namespace {

struct Edge {
    QPair l, r;
    Rational lx, rx;
    std::int64_t e;
};

}  // namespace

Tessellation generate(FareyHalf half, int depth)
{
    if (depth < 1)
        throw DomainError("depth must be at least 1");
    Tessellation t;
    t.half = half;
    t.depth = depth;
    std::vector<Edge> level;
    if (half == FareyHalf::Positive)
        level.push_back({{LaurentPoly(0), LaurentPoly(1)}, {LaurentPoly(1), LaurentPoly(0)}, Rational(0),
                         Rational::infinity(), -1});
    else
        level.push_back({{LaurentPoly(-1), LaurentPoly(0)}, {LaurentPoly(0), LaurentPoly::monomial(1)},
                         Rational::infinity(), Rational(0), -1});
    for (int d = 1; d <= depth; ++d) {
        std::vector<Edge> next;
        for (const Edge& e : level) {
            std::int64_t k = checked_add(e.e, 1);
            LaurentPoly u = LaurentPoly::monomial(k);
            QPair m{e.l.R + u * e.r.R, e.l.S + u * e.r.S};
            // -1/0 sits on the left of the negative half
            BigInt ln = e.lx.is_inf() && half == FareyHalf::Negative ? BigInt(-1) : e.lx.num();
            Rational mx(ln + e.rx.num(), e.lx.den() + e.rx.den());
            QFareyTriangle tri;
            tri.left = e.l;
            tri.middle = m;
            tri.right = e.r;
            tri.left_x = e.lx;
            tri.middle_x = mx;
            tri.right_x = e.rx;
            tri.top_label_exp = e.e;
            tri.left_label_exp = 0;
            tri.right_label_exp = k;
            tri.depth = d;
            t.triangles.push_back(tri);
            next.push_back({e.l, m, e.lx, mx, 0});
            next.push_back({m, e.r, mx, e.rx, k});
        }
        level = std::move(next);
    }
    return t;
}

bool vertex_identity(const Tessellation& t)
{
    for (const auto& tri : t.triangles) {
        const Rational* xs[3] = {&tri.left_x, &tri.middle_x, &tri.right_x};
        for (int i = 0; i < 3; ++i)
            if (!tri.vertex(i).equivalent(deform(*xs[i], Side::Sharp).ratio()))
                return false;
    }
    return true;
}

namespace {

struct Arc {
    double x1, x2;
    bool vertical;
    int depth;
};

std::string fmt(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    std::string s = buf;
    if (s == "-0.000000")
        s = "0.000000";
    return s;
}

std::vector<Arc> collect_arcs(const Tessellation& t, double q, double scale)
{
    std::vector<Arc> arcs;
    auto add = [&](const QPair& a, const QPair& b, int depth) {
        bool ia = a.S.is_zero(), ib = b.S.is_zero();
        if (ia && ib)
            return;
        if (ia || ib) {
            double x = scale * (ia ? b : a).eval(q);
            arcs.push_back({x, x, true, depth});
            return;
        }
        double x1 = scale * a.eval(q), x2 = scale * b.eval(q);
        arcs.push_back({std::min(x1, x2), std::max(x1, x2), false, depth});
    };
    for (const auto& tri : t.triangles) {
        if (tri.depth == 1)
            add(tri.left, tri.right, 1);
        add(tri.left, tri.middle, tri.depth);
        add(tri.middle, tri.right, tri.depth);
    }
    return arcs;
}

}  // namespace

std::size_t arc_count(const Tessellation& t)
{
    return collect_arcs(t, 0.5, 1.0).size();
}

std::string render_svg_string(const Tessellation& t, double q, const SvgOptions& opt)
{
    if (!(q > 0 && q < 1))
        throw DomainError("q must lie in (0,1)");
    if (!(opt.scale > 0) || !std::isfinite(opt.scale))
        throw DomainError("scale must be positive");
    std::vector<Arc> arcs = collect_arcs(t, q, opt.scale);
    double lo = 0, hi = 0, top = 0;
    for (const auto& a : arcs) {
        lo = std::min(lo, a.x1);
        hi = std::max(hi, a.x2);
        if (!a.vertical)
            top = std::max(top, (a.x2 - a.x1) / 2);
    }
    double margin = 0.1 * std::max(1.0, hi - lo);
    top = std::max(top, 0.5 * (hi - lo)) + margin;
    double vx = lo - margin, vw = hi - lo + 2 * margin, vy = -top, vh = top + margin;
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<!-- qrat " << library_version() << " -->\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt(vx) << ' ' << fmt(vy) << ' ' << fmt(vw)
       << ' ' << fmt(vh) << "\">\n";
    os << "<title>q-Farey " << half_name(t.half) << " depth " << t.depth << " q " << fmt(q) << "</title>\n";
    os << "<line x1=\"" << fmt(vx) << "\" y1=\"0.000000\" x2=\"" << fmt(vx + vw)
       << "\" y2=\"0.000000\" stroke=\"black\" stroke-width=\"" << fmt(0.01 * vw) << "\"/>\n";
    for (const auto& a : arcs) {
        double w = 0.02 * opt.scale / a.depth;
        if (a.vertical) {
            os << "<path d=\"M " << fmt(a.x1) << " 0.000000 L " << fmt(a.x1) << ' ' << fmt(-top)
               << "\" fill=\"none\" stroke=\"black\" stroke-width=\"" << fmt(w) << "\"/>\n";
            continue;
        }
        double r = (a.x2 - a.x1) / 2;
        os << "<path d=\"M " << fmt(a.x1) << " 0.000000 A " << fmt(r) << ' ' << fmt(r) << " 0 0 1 " << fmt(a.x2)
           << " 0.000000\" fill=\"none\" stroke=\"black\" stroke-width=\"" << fmt(w) << "\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

void render_svg(const Tessellation& t, double q, const std::string& path, const SvgOptions& opt)
{
    std::string s = render_svg_string(t, q, opt);
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw IoError("cannot write " + path);
    f << s;
    f.flush();
    if (!f)
        throw IoError("cannot write " + path);
}

double diameter(const NumTriangle& tri)
{
    double d = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            d = std::max(d, std::fabs(tri[static_cast<std::size_t>(i)] - tri[static_cast<std::size_t>(j)]));
    return d;
}

namespace {

struct NumMat {
    long double a, b, c, d;
};

NumMat eval_mat(const Mat2q& m, long double q)
{
    return {m.a.eval_long(q), m.b.eval_long(q), m.c.eval_long(q), m.d.eval_long(q)};
}

// homogeneous (n : d) -> value
double apply(const NumMat& m, long double n, long double d)
{
    long double y = m.a * n + m.b * d, z = m.c * n + m.d * d;
    if (z == 0)
        return std::numeric_limits<double>::infinity();
    return static_cast<double>(y / z);
}

long double qint(long long n, long double q)
{
    long double s = 0, p = 1;
    for (long long i = 0; i < n; ++i) {
        s += p;
        p *= q;
    }
    return s;
}

}  // namespace

TriangleSequences triangle_sequences(const Rational& x, double q, int n_max)
{
    if (!(q > 0 && q <= 1))
        throw DomainError("q must lie in (0,1]");
    if (x.is_inf() || x.sign() <= 0)
        throw DomainError("triangle sequences need 0 < x < inf");
    if (n_max < 0)
        throw DomainError("n_max must be nonnegative");
    EvenCF d = to_even_cf(x);
    BraidWord b = BraidWord::beta(d);
    BraidWord bp = b * BraidWord{-2, -1};
    NumMat B = eval_mat(word_matrix_q(b), q);
    NumMat Bp = eval_mat(word_matrix_q(bp), q);
    TriangleSequences out;
    out.flat = deform(x, Side::Flat).eval(q);
    out.sharp = deform(x, Side::Sharp).eval(q);
    long double Q = q, Qi = 1 / static_cast<long double>(q);
    for (int n = 0; n <= n_max; ++n) {
        // gamma^n beta = beta s1^-n, and s1^-n(z) = q^n z + [n]_q
        long double qn = std::pow(Q, static_cast<long double>(n));
        long double in = qint(n, Q);
        out.t.push_back({apply(B, in, 1), apply(B, qn + in, 1), apply(B, 1, 0)});
        // gamma'^n beta' = beta' s2^n, and 1/s2^n(z) = q^-n/z + [n]_{q^-1}
        long double qin = std::pow(Qi, static_cast<long double>(n));
        long double jn = qint(n, Qi);
        out.t_prime.push_back({apply(Bp, 0, 1), apply(Bp, 1, qin + jn), apply(Bp, 1, jn)});
    }
    return out;
}

}  // namespace qrat
