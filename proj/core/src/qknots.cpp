#include "qrat/qknots.hpp"

#include <algorithm>
#include <set>

#include "qrat/qrationals.hpp"

namespace qrat {

std::string family_name(QuiverFamily f)
{
    switch (f) {
    case QuiverFamily::GSharp:
        return "gsharp";
    case QuiverFamily::GSharpHat:
        return "gsharp_hat";
    case QuiverFamily::GFlat:
        return "gflat";
    case QuiverFamily::GFlatHat:
        return "gflat_hat";
    default:
        return "H";
    }
}

QuiverFamily parse_family(const std::string& text)
{
    for (auto f : {QuiverFamily::GSharp, QuiverFamily::GSharpHat, QuiverFamily::GFlat, QuiverFamily::GFlatHat, QuiverFamily::H})
        if (family_name(f) == text)
            return f;
    throw DomainError("unknown quiver family: " + text);
}

Quiver Quiver::reversed() const
{
    Quiver r{n, {}};
    for (auto [u, w] : edges)
        r.edges.emplace_back(w, u);
    return r;
}

Quiver path_from_blocks(const std::vector<long long>& blocks, int first_dir)
{
    Quiver g;
    int v = 0;
    int dir = first_dir;
    for (long long b : blocks) {
        for (long long i = 0; i < b; ++i) {
            if (dir > 0)
                g.edges.emplace_back(v, v + 1);
            else
                g.edges.emplace_back(v + 1, v);
            ++v;
        }
        dir = -dir;
    }
    g.n = v + 1;
    return g;
}

namespace {

std::vector<long long> sharp_blocks(const EvenCF& d)
{
    std::vector<long long> b(d.begin(), d.end());
    b.front() -= 1;
    b.back() -= 1;
    return b;
}

Quiver gsharp(const EvenCF& d)
{
    return path_from_blocks(sharp_blocks(d), -1);
}

Quiver gsharp_hat(const EvenCF& d)
{
    std::vector<long long> b = sharp_blocks(d);
    b.erase(b.begin());
    b.front() -= 1;
    long long total = 0;
    for (long long x : b)
        total += x;
    if (total < 0)
        return {};
    return path_from_blocks(b, 1);
}

Quiver with_right_pair(Quiver g)
{
    if (g.n == 0)
        return g;
    int last = g.n - 1;
    g.edges.emplace_back(last, g.n);
    g.edges.emplace_back(g.n, last);
    ++g.n;
    return g;
}

}  // namespace

Quiver build_quiver(const Rational& x, QuiverFamily family)
{
    if (x.is_inf() || !(Rational(1) < x))
        throw DomainError("quivers are defined for rationals in (1, inf)");
    EvenCF d = to_even_cf(x);
    switch (family) {
    case QuiverFamily::GSharp:
        return gsharp(d);
    case QuiverFamily::GSharpHat:
        return gsharp_hat(d);
    case QuiverFamily::GFlat:
        return with_right_pair(gsharp(d));
    case QuiverFamily::GFlatHat:
        return with_right_pair(gsharp_hat(d));
    default: {
        Quiver s = gsharp(d);
        Quiver h{s.n + 1, {{0, 1}, {1, 0}}};
        for (auto [u, w] : s.edges)
            h.edges.emplace_back(w + 1, u + 1);
        return h;
    }
    }
}

ClosureCounts count_closures_bruteforce(const Quiver& g)
{
    if (g.n > kBruteForceMaxVertices)
        throw DomainError("brute force limited to " + std::to_string(kBruteForceMaxVertices) + " vertices");
    const int n = g.n;
    // constraints between v and earlier vertices: (other, v_is_source)
    std::vector<std::vector<std::pair<int, bool>>> back(static_cast<std::size_t>(n));
    for (auto [u, w] : g.edges) {
        if (u == w)
            continue;
        if (u < w)
            back[static_cast<std::size_t>(w)].emplace_back(u, false);
        else
            back[static_cast<std::size_t>(u)].emplace_back(w, true);
    }
    std::vector<unsigned long long> counts(static_cast<std::size_t>(n) + 1, 0);
    std::vector<char> in(static_cast<std::size_t>(n), 0);
    auto consistent = [&](int v) {
        for (auto [o, v_src] : back[static_cast<std::size_t>(v)]) {
            bool src_in = v_src ? in[static_cast<std::size_t>(v)] : in[static_cast<std::size_t>(o)];
            bool dst_in = v_src ? in[static_cast<std::size_t>(o)] : in[static_cast<std::size_t>(v)];
            if (src_in && !dst_in)
                return false;
        }
        return true;
    };
    if (n == 0)
        return {1};
    auto rec = [&](auto&& self, int v, int size) -> void {
        if (v == n) {
            ++counts[static_cast<std::size_t>(size)];
            return;
        }
        for (char pick : {0, 1}) {
            in[static_cast<std::size_t>(v)] = pick;
            if (consistent(v))
                self(self, v + 1, size + pick);
        }
        in[static_cast<std::size_t>(v)] = 0;
    };
    rec(rec, 0, 0);
    return ClosureCounts(counts.begin(), counts.end());
}

bool is_path_shaped(const Quiver& g)
{
    for (auto [u, w] : g.edges)
        if (std::abs(u - w) != 1)
            return false;
    return true;
}

ClosureCounts count_closures_dp(const Quiver& g)
{
    if (!is_path_shaped(g))
        return count_closures_bruteforce(g);
    const int n = g.n;
    if (n == 0)
        return {1};
    std::set<std::pair<int, int>> e(g.edges.begin(), g.edges.end());
    // dp[s][k]: prefix closures of size k whose last vertex has state s
    std::vector<BigInt> out0(static_cast<std::size_t>(n) + 1, 0), out1 = out0;
    out0[0] = 1;
    out1[1] = 1;
    for (int v = 1; v < n; ++v) {
        bool fwd = e.count({v - 1, v}) > 0;
        bool bwd = e.count({v, v - 1}) > 0;
        std::vector<BigInt> n0(out0.size(), 0), n1(out0.size(), 0);
        for (std::size_t k = 0; k < out0.size(); ++k) {
            // v out: forbidden if v-1 in and v-1 -> v
            n0[k] += out0[k];
            if (!fwd)
                n0[k] += out1[k];
            // v in: forbidden if v-1 out and v -> v-1
            if (k + 1 < out0.size()) {
                n1[k + 1] += out1[k];
                if (!bwd)
                    n1[k + 1] += out0[k];
            }
        }
        out0 = std::move(n0);
        out1 = std::move(n1);
    }
    ClosureCounts r(out0.size());
    for (std::size_t k = 0; k < r.size(); ++k)
        r[k] = out0[k] + out1[k];
    return r;
}

LaurentPoly counts_to_poly(const ClosureCounts& c)
{
    return LaurentPoly::from_coeffs(0, c);
}

ClosureCounts poly_to_counts(const LaurentPoly& p)
{
    if (p.is_zero())
        return {};
    if (p.low_degree() < 0)
        throw DomainError("polynomial has negative powers");
    ClosureCounts c;
    for (std::int64_t e = 0; e <= p.high_degree(); ++e)
        c.push_back(p.coeff(e));
    return c;
}

JonesRoute parse_route(const std::string& text)
{
    if (text == "closures")
        return JonesRoute::Closures;
    if (text == "flat")
        return JonesRoute::Flat;
    if (text == "both")
        return JonesRoute::Both;
    throw DomainError("unknown route: " + text);
}

LaurentPoly jones_abs(const Rational& x, JonesRoute route)
{
    Quiver h = build_quiver(x, QuiverFamily::H);
    if (route == JonesRoute::Flat)
        return deform(x, Side::Flat).R;
    LaurentPoly closures = counts_to_poly(count_closures_dp(h));
    if (route == JonesRoute::Closures)
        return closures;
    LaurentPoly flat = deform(x, Side::Flat).R;
    if (closures != flat)
        throw std::logic_error("Jones routes disagree for " + x.to_string());
    return closures;
}

}  // namespace qrat
