#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "config.hpp"
#include "format.hpp"
#include "qrat/contfrac.hpp"
#include "qrat/hnauto.hpp"
#include "qrat/qboundary.hpp"
#include "qrat/qfarey.hpp"
#include "qrat/qknots.hpp"
#include "qrat/stabmass.hpp"

namespace qrat::cli {

namespace {

struct Options {
    std::string config_path;
    std::optional<std::string> format;
    std::optional<std::string> q;

    std::string x;
    std::string side = "both";

    std::string word;
    std::string emit = "label,occ,hom,vector,states";
    std::string route = "both";

    std::optional<int> depth;
    std::string half = "positive";
    std::optional<std::string> svg;
    std::optional<double> scale;

    std::string point;
    std::size_t classify_depth = 64;

    std::string z1, z2;
    std::string convention = "phi1<phi2";
    long long m_max = 60;
    std::optional<std::string> probes;
    long long samples = 1000;
    std::optional<std::uint64_t> seed;
};

// --format flag, else the config value when the command supports it, else text
std::string pick_format(const Options& o, const Config& cfg, std::initializer_list<const char*> allowed)
{
    if (o.format)
        return *o.format;
    std::string f = format_name(cfg.output_format);
    for (const char* a : allowed)
        if (f == a)
            return f;
    return "text";
}

QValue pick_q(const Options& o, const Config& cfg)
{
    return QValue::parse(o.q ? *o.q : cfg.default_q);
}

QValue open_unit_q(const Options& o, const Config& cfg)
{
    QValue q = pick_q(o, cfg);
    if (!(q.value > 0 && q.value < 1))
        throw DomainError("q must lie in (0,1)");
    return q;
}

std::string fraction_text(const Rational& x)
{
    if (x.is_inf())
        return "inf";
    std::ostringstream os;
    os << x.num() << '/' << x.den();
    return os.str();
}

std::string exact_text(const BigRational& v)
{
    std::ostringstream os;
    os << numerator(v) << '/' << denominator(v);
    return os.str();
}

// value of R/S at q; exact when q is
struct PairValue {
    double value;
    std::optional<BigRational> exact;
};

PairValue pair_value(const QPair& p, const QValue& q)
{
    if (q.exact) {
        BigRational s = p.S.eval_exact(*q.exact);
        if (s == 0)
            return {std::numeric_limits<double>::infinity(), std::nullopt};
        BigRational v = p.R.eval_exact(*q.exact) / s;
        return {static_cast<double>(v), v};
    }
    return {p.eval(q.value), std::nullopt};
}

std::vector<std::string> split_list(const std::string& s)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty())
            out.push_back(item);
    return out;
}

// ---- deform

int cmd_deform(const Options& o, const Config& cfg)
{
    Rational x = Rational::parse(o.x);
    std::string fmt = pick_format(o, cfg, {"json"});
    if (fmt == "text")
        fmt = "exact";
    std::vector<Side> sides;
    if (o.side == "both")
        sides = {Side::Sharp, Side::Flat};
    else
        sides = {parse_side(o.side)};
    bool want_values = fmt == "float" || (fmt == "json" && o.q);
    std::optional<QValue> q;
    if (want_values)
        q = pick_q(o, cfg);

    if (fmt == "json") {
        json j;
        j["x"] = fraction_text(x);
        if (q)
            j["q"] = q->to_string();
        for (Side s : sides) {
            QPair p = deform(x, s);
            json e = pair_json(p);
            if (q) {
                PairValue v = pair_value(p, *q);
                e["value"] = num(v.value);
                if (v.exact)
                    e["value_exact"] = exact_text(*v.exact);
            }
            j[side_name(s)] = e;
        }
        std::cout << dump(j);
        return kExitOk;
    }
    for (Side s : sides) {
        QPair p = deform(x, s);
        if (fmt == "float")
            std::cout << side_name(s) << ": " << fmt12(pair_value(p, *q).value) << '\n';
        else
            std::cout << side_name(s) << ": R = " << p.R.to_string() << ", S = " << p.S.to_string() << '\n';
    }
    return kExitOk;
}

// ---- cf

int cmd_cf(const Options& o, const Config& cfg)
{
    Rational x = Rational::parse(o.x);
    EvenCF cf = x.is_inf() ? EvenCF{} : to_even_cf(x);
    if (pick_format(o, cfg, {"json"}) == "json")
        std::cout << dump({{"x", fraction_text(x)}, {"cf", integers_json(cf)}});
    else
        std::cout << cf_to_string(cf) << '\n';
    return kExitOk;
}

// ---- braid

int cmd_braid(const Options& o, const Config& cfg)
{
    BraidWord w = BraidWord::parse(o.word);
    Mat2q m = word_matrix_q(w);
    Rational label = braid_label(w);
    NormalForm nf = continued_normal_form(w);
    std::optional<QValue> q;
    if (o.q)
        q = pick_q(o, cfg);

    if (pick_format(o, cfg, {"json"}) == "json") {
        json j;
        j["word"] = w.to_string();
        j["length"] = w.size();
        j["matrix"] = matrix_json(m);
        j["det"] = poly_json(m.det());
        j["label"] = fraction_text(label);
        j["normal_form"] = {{"form", nf.form},     {"digits", integers_json(nf.digits)},
                            {"M", nf.M},           {"N", nf.N},
                            {"strict", nf.strict()}, {"word", nf.to_word().to_string()}};
        if (q) {
            j["q"] = q->to_string();
            j["matrix_at_q"] = json::array({json::array({num(m.a.eval(q->value)), num(m.b.eval(q->value))}),
                                            json::array({num(m.c.eval(q->value)), num(m.d.eval(q->value))})});
        }
        std::cout << dump(j);
        return kExitOk;
    }
    std::cout << "word: " << w.to_string() << '\n';
    std::cout << "matrix: [[" << m.a.to_string() << ", " << m.b.to_string() << "], [" << m.c.to_string() << ", "
              << m.d.to_string() << "]]\n";
    std::cout << "det: " << m.det().to_string() << '\n';
    std::cout << "label: " << fraction_text(label) << '\n';
    std::cout << "normal form: " << nf.form << ' ' << cf_to_string(nf.digits) << " M=" << nf.M << " N=" << nf.N
              << '\n';
    if (q)
        std::cout << "matrix at q=" << q->to_string() << ": [[" << fmt12(m.a.eval(q->value)) << ", "
                  << fmt12(m.b.eval(q->value)) << "], [" << fmt12(m.c.eval(q->value)) << ", "
                  << fmt12(m.d.eval(q->value)) << "]]\n";
    return kExitOk;
}

// ---- orbit

int cmd_orbit(const Options& o, const Config& cfg)
{
    static const std::vector<std::string> known = {"label", "occ", "hom", "vector", "states"};
    std::vector<std::string> emit = split_list(o.emit);
    if (emit.empty())
        throw DomainError("nothing to emit");
    for (const auto& e : emit)
        if (std::find(known.begin(), known.end(), e) == known.end())
            throw DomainError("unknown emit item: " + e);
    auto wants = [&](const char* k) { return std::find(emit.begin(), emit.end(), k) != emit.end(); };

    BraidWord w = BraidWord::parse(o.word);
    SphericalObject x = orbit(w);
    std::optional<QValue> q;
    if (o.q)
        q = pick_q(o, cfg);
    auto at_q = [&](const LaurentPoly& p) { return num(p.eval(q->value)); };

    json j;
    j["braid"] = w.to_string();
    if (q)
        j["q"] = q->to_string();
    if (wants("label"))
        j["label"] = fraction_text(x.label);
    const std::pair<const char*, Basic> bases[] = {{"P1", Basic::P1}, {"P2", Basic::P2}};
    if (wants("occ")) {
        json e;
        for (auto [n, b] : bases)
            e[n] = poly_json(occ(b, x));
        j["occ"] = e;
        if (q) {
            json v;
            for (auto [n, b] : bases)
                v[n] = at_q(occ(b, x));
            j["occ_at_q"] = v;
        }
    }
    if (wants("hom")) {
        json e;
        for (auto [n, b] : bases)
            e[n] = poly_json(hom(b, x));
        j["hom"] = e;
        if (q) {
            json v;
            for (auto [n, b] : bases)
                v[n] = at_q(hom(b, x));
            j["hom_at_q"] = v;
        }
    }
    if (wants("vector"))
        j["vector"] = {{"P1", poly_json(x.vector.p1)},
                       {"P2", poly_json(x.vector.p2)},
                       {"P12", poly_json(x.vector.p12)},
                       {"P21", poly_json(x.vector.p21)}};
    if (wants("states")) {
        json s = json::array();
        for (AutoState st : x.states)
            s.push_back(state_name(st));
        j["states"] = s;
    }

    if (pick_format(o, cfg, {"json"}) == "json") {
        std::cout << dump(j);
        return kExitOk;
    }
    for (auto it = j.begin(); it != j.end(); ++it)
        std::cout << it.key() << ": " << (it->is_string() ? it->get<std::string>() : it->dump()) << '\n';
    return kExitOk;
}

// ---- jones

int cmd_jones(const Options& o, const Config& cfg)
{
    Rational x = Rational::parse(o.x);
    LaurentPoly v = jones_abs(x, parse_route(o.route));
    ClosureCounts c = poly_to_counts(v);
    if (pick_format(o, cfg, {"json"}) == "json") {
        std::cout << dump({{"knot_fraction", fraction_text(x)},
                           {"route", o.route},
                           {"coefficients", bigints_json(c)},
                           {"polynomial", poly_json(v)}});
        return kExitOk;
    }
    std::cout << bigints_text(c) << '\n';
    return kExitOk;
}

// ---- farey

int cmd_farey(const Options& o, const Config& cfg)
{
    int depth = o.depth ? *o.depth : cfg.default_depth;
    if (depth < 1 || depth > kMaxDepth)
        throw DomainError("depth must lie in [1," + std::to_string(kMaxDepth) + "]");
    QValue q = open_unit_q(o, cfg);
    SvgOptions svg_opt;
    svg_opt.scale = o.scale ? *o.scale : cfg.svg_scale;
    Tessellation t = generate(parse_half(o.half), depth);

    if (o.svg && *o.svg == "-") {
        std::cout << render_svg_string(t, q.value, svg_opt);
        return kExitOk;
    }
    if (o.svg)
        render_svg(t, q.value, *o.svg, svg_opt);

    std::string fmt = pick_format(o, cfg, {"json", "csv"});
    if (fmt == "csv") {
        std::cout << "depth,left,middle,right,middle_R,middle_S,middle_value,top_exp,left_exp,right_exp\n";
        for (const auto& tri : t.triangles)
            std::cout << tri.depth << ',' << fraction_text(tri.left_x) << ',' << fraction_text(tri.middle_x) << ','
                      << fraction_text(tri.right_x) << ',' << tri.middle.R.to_string() << ','
                      << tri.middle.S.to_string() << ',' << fmt12(tri.middle.eval(q.value)) << ','
                      << tri.top_label_exp << ',' << tri.left_label_exp << ',' << tri.right_label_exp << '\n';
        return kExitOk;
    }
    if (fmt == "json") {
        json j;
        j["half"] = half_name(t.half);
        j["depth"] = depth;
        j["q"] = q.to_string();
        j["arcs"] = arc_count(t);
        j["vertex_identity"] = vertex_identity(t);
        if (o.svg)
            j["svg"] = *o.svg;
        json tris = json::array();
        for (const auto& tri : t.triangles) {
            json v = json::array();
            const Rational* xs[3] = {&tri.left_x, &tri.middle_x, &tri.right_x};
            const QPair* ps[3] = {&tri.left, &tri.middle, &tri.right};
            for (int i = 0; i < 3; ++i) {
                json e = pair_json(*ps[i]);
                e["x"] = fraction_text(*xs[i]);
                e["value"] = num(ps[i]->eval(q.value));
                v.push_back(e);
            }
            tris.push_back({{"depth", tri.depth},
                            {"vertices", v},
                            {"labels", {tri.top_label_exp, tri.left_label_exp, tri.right_label_exp}}});
        }
        j["triangles"] = tris;
        std::cout << dump(j);
        return kExitOk;
    }
    std::cout << "half: " << half_name(t.half) << '\n';
    std::cout << "depth: " << depth << '\n';
    std::cout << "triangles: " << t.triangles.size() << '\n';
    std::cout << "arcs: " << arc_count(t) << '\n';
    std::cout << "vertex identity: " << (vertex_identity(t) ? "ok" : "FAILED") << '\n';
    if (o.svg)
        std::cout << "svg: " << *o.svg << '\n';
    return kExitOk;
}

// ---- classify

int cmd_classify(const Options& o, const Config& cfg)
{
    QValue q = open_unit_q(o, cfg);
    std::size_t pos = 0;
    double p = 0;
    try {
        p = std::stod(o.point, &pos);
    } catch (const std::logic_error&) {
        pos = 0;
    }
    if (pos == 0 || pos != o.point.size() || !std::isfinite(p))
        throw DomainError("malformed point: " + o.point);
    BoundaryClass c = classify_boundary_point(p, q, o.classify_depth);
    json j;
    j["kind"] = c.kind == BoundaryKind::IntervalPoint ? "interval-point" : "irrational";
    if (c.rational)
        j["rational"] = fraction_text(*c.rational);
    if (c.t)
        j["t"] = num(*c.t);
    if (!c.cf_prefix.empty())
        j["cf_prefix"] = integers_json(c.cf_prefix);
    if (pick_format(o, cfg, {"json"}) == "json") {
        std::cout << dump(j);
        return kExitOk;
    }
    std::cout << "kind: " << j["kind"].get<std::string>() << '\n';
    if (c.rational)
        std::cout << "rational: " << fraction_text(*c.rational) << '\n';
    if (c.t)
        std::cout << "t: " << fmt12(*c.t) << '\n';
    if (!c.cf_prefix.empty())
        std::cout << "cf_prefix: " << cf_to_string(c.cf_prefix) << '\n';
    return kExitOk;
}

// ---- stab

int cmd_stab_gromov(const Options& o, const Config& cfg)
{
    QValue q = pick_q(o, cfg);
    if (!(q.value > 0))
        throw DomainError("q must be positive");
    StdStabCond tau = StdStabCond::from_charges(parse_complex(o.z1), parse_complex(o.z2), parse_convention(o.convention));
    BasicMasses m = basic_masses(tau, q.value);
    DegeneracyReport d = degeneracy_check(tau, q.value);
    GromovCoords g = gromov(tau, q.value);
    std::string type = tau.degenerate() ? "degenerate" : (tau.type_a ? "A" : "B");
    if (pick_format(o, cfg, {"json"}) == "json") {
        std::cout << dump({{"q", q.to_string()},
                           {"convention", convention_name(parse_convention(o.convention))},
                           {"phi1", num(tau.phi1)},
                           {"phi2", num(tau.phi2)},
                           {"type", type},
                           {"masses", {{"P1", num(m.p1)}, {"P2", num(m.p2)}, {"P12", num(m.p12)}, {"P21", num(m.p21)}}},
                           {"gromov", {{"a", num(g.a)}, {"b", num(g.b)}, {"c", num(g.c)}}},
                           {"margins", nums({d.margins.begin(), d.margins.end()})},
                           {"degeneracy", degeneracy_name(d.kind)}});
        return kExitOk;
    }
    std::cout << "type: " << type << '\n';
    std::cout << "phases: " << fmt12(tau.phi1) << ' ' << fmt12(tau.phi2) << '\n';
    std::cout << "masses: P1=" << fmt12(m.p1) << " P2=" << fmt12(m.p2) << " P12=" << fmt12(m.p12)
              << " P21=" << fmt12(m.p21) << '\n';
    std::cout << "gromov: a=" << fmt12(g.a) << " b=" << fmt12(g.b) << " c=" << fmt12(g.c) << '\n';
    std::cout << "degeneracy: " << degeneracy_name(d.kind) << '\n';
    return kExitOk;
}

int cmd_stab_limit(const Options& o, const Config& cfg)
{
    QValue q = open_unit_q(o, cfg);
    if (o.m_max < 1 || o.m_max > 100000)
        throw DomainError("m-max must lie in [1,100000]");
    std::vector<Probe> probes = o.probes ? parse_probes(*o.probes) : default_probes();
    BraidWord w = BraidWord::parse(o.word);
    BoundaryLimitReport r = boundary_limit(w, q.value, probes, o.m_max);
    std::string fmt = pick_format(o, cfg, {"json", "csv"});
    if (fmt == "csv") {
        std::cout << "m,distance\n";
        for (const auto& s : r.steps)
            std::cout << s.m << ',' << fmt12(s.distance) << '\n';
        return kExitOk;
    }
    if (fmt == "json") {
        json steps = json::array();
        for (const auto& s : r.steps)
            steps.push_back({{"m", s.m}, {"distance", num(s.distance)}});
        std::cout << dump({{"braid", w.to_string()},
                           {"q", q.to_string()},
                           {"m_max", o.m_max},
                           {"probes", r.names},
                           {"target", nums(r.target)},
                           {"last", nums(r.last)},
                           {"final_distance", num(r.final_distance)},
                           {"steps", steps}});
        return kExitOk;
    }
    std::cout << "braid: " << w.to_string() << '\n';
    for (std::size_t i = 0; i < r.names.size(); ++i)
        std::cout << r.names[i] << ": " << fmt12(r.last[i]) << " -> " << fmt12(r.target[i]) << '\n';
    std::cout << "final distance: " << fmt12(r.final_distance) << '\n';
    return kExitOk;
}

int cmd_stab_check(const Options& o, const Config& cfg)
{
    QValue q = open_unit_q(o, cfg);
    if (o.samples < 1 || o.samples > 10000000)
        throw DomainError("samples must lie in [1,10000000]");
    TypeConvention conv = parse_convention(o.convention);
    std::uint64_t seed = resolve_seed(o.seed, cfg, std::getenv("QRAT_SEED"));
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ph(0.01, 1.0), len(0.1, 3.0);
    std::map<std::string, long long> counts{{"strict", 0}, {"equality", 0}, {"violation", 0}};
    double min_margin = std::numeric_limits<double>::infinity();
    for (long long i = 0; i < o.samples; ++i) {
        auto z = [&] { return std::polar(len(rng), M_PI * ph(rng)); };
        std::complex<double> z1 = z();
        std::complex<double> z2 = z();
        DegeneracyReport d = degeneracy_check(StdStabCond::from_charges(z1, z2, conv), q.value);
        ++counts[degeneracy_name(d.kind)];
        min_margin = std::min(min_margin, *std::min_element(d.margins.begin(), d.margins.end()));
    }
    if (pick_format(o, cfg, {"json"}) == "json") {
        std::cout << dump({{"q", q.to_string()},
                           {"convention", convention_name(conv)},
                           {"seed", seed},
                           {"samples", o.samples},
                           {"counts", counts},
                           {"min_margin", num(min_margin)}});
        return kExitOk;
    }
    std::cout << "seed: " << seed << '\n';
    for (const auto& [k, v] : counts)
        std::cout << k << ": " << v << '\n';
    std::cout << "min margin: " << fmt12(min_margin) << '\n';
    return kExitOk;
}

void add_format(CLI::App* c, Options& o, std::vector<std::string> allowed)
{
    c->add_option("--format", o.format, "output format")->check(CLI::IsMember(std::move(allowed)));
}

void add_q(CLI::App* c, Options& o)
{
    c->add_option("--q", o.q, "value of q, decimal or exact fraction such as 3/10");
}

}  // namespace

int run(int argc, char** argv)
{
    Options o;
    CLI::App app{"q-deformed rationals, braids and the q-Farey tessellation", "qrat"};
    app.require_subcommand(1);
    app.add_option("--config", o.config_path, "key=value configuration file")->check(CLI::ExistingFile);
    app.set_version_flag("--version", library_version());

    auto* deform_c = app.add_subcommand("deform", "left and right q-deformations of a rational");
    deform_c->add_option("x", o.x, "rational r/s or inf")->required();
    deform_c->add_option("--side", o.side, "sharp, flat or both")->check(CLI::IsMember({"sharp", "flat", "both"}));
    add_format(deform_c, o, {"exact", "float", "json", "text"});
    add_q(deform_c, o);

    auto* cf_c = app.add_subcommand("cf", "even continued fraction of a rational");
    cf_c->add_option("x", o.x, "rational r/s")->required();
    add_format(cf_c, o, {"text", "json"});

    auto* braid_c = app.add_subcommand("braid", "matrix, label and normal form of a braid word");
    braid_c->add_option("word", o.word, "word such as \"s1^-2 s2^2\"")->required();
    add_format(braid_c, o, {"text", "json"});
    add_q(braid_c, o);

    auto* orbit_c = app.add_subcommand("orbit", "HN data of the spherical object w.P1");
    orbit_c->add_option("--braid", o.word, "braid word")->required();
    orbit_c->add_option("--emit", o.emit, "comma list of label,occ,hom,vector,states");
    add_format(orbit_c, o, {"text", "json"});
    add_q(orbit_c, o);

    auto* jones_c = app.add_subcommand("jones", "absolute Jones coefficients of a rational knot");
    jones_c->add_option("x", o.x, "rational r/s")->required();
    jones_c->add_option("--route", o.route, "closures, flat or both")
        ->check(CLI::IsMember({"closures", "flat", "both"}));
    add_format(jones_c, o, {"text", "json"});

    auto* farey_c = app.add_subcommand("farey", "q-Farey tessellation");
    add_q(farey_c, o);
    farey_c->add_option("--depth", o.depth, "levels of mediants (at most 12)");
    farey_c->add_option("--half", o.half, "positive or negative")->check(CLI::IsMember({"positive", "negative"}));
    farey_c->add_option("--svg", o.svg, "write an SVG file, - for standard output");
    farey_c->add_option("--scale", o.scale, "SVG scale factor");
    add_format(farey_c, o, {"text", "json", "csv"});

    auto* classify_c = app.add_subcommand("classify", "locate a real number among the q-rational intervals");
    add_q(classify_c, o);
    classify_c->add_option("--x", o.point, "real number")->required();
    classify_c->add_option("--depth", o.classify_depth, "maximal continued fraction prefix length");
    add_format(classify_c, o, {"text", "json"});

    auto* stab_c = app.add_subcommand("stab", "masses of stability conditions");
    stab_c->require_subcommand(1);
    auto* gromov_c = stab_c->add_subcommand("gromov", "Gromov coordinates of a standard stability condition");
    gromov_c->add_option("--z1", o.z1, "central charge of P1, e.g. 1+2i")->required();
    gromov_c->add_option("--z2", o.z2, "central charge of P2")->required();
    gromov_c->add_option("--convention", o.convention, "phi1<phi2 or phi1>phi2");
    add_q(gromov_c, o);
    add_format(gromov_c, o, {"text", "json"});

    auto* limit_c = stab_c->add_subcommand("limit", "occ functionals converging to a boundary point");
    limit_c->add_option("--braid", o.word, "braid word")->required();
    limit_c->add_option("--m-max", o.m_max, "largest power of s1");
    limit_c->add_option("--probes", o.probes, "comma list of probe labels");
    add_q(limit_c, o);
    add_format(limit_c, o, {"text", "json", "csv"});

    auto* check_c = stab_c->add_subcommand("check", "triangle inequalities on random stability conditions");
    check_c->add_option("--samples", o.samples, "number of samples");
    check_c->add_option("--seed", o.seed, "random seed (else QRAT_SEED, else the config)");
    check_c->add_option("--convention", o.convention, "phi1<phi2 or phi1>phi2");
    add_q(check_c, o);
    add_format(check_c, o, {"text", "json"});

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        Config cfg = o.config_path.empty() ? Config{} : load_config(o.config_path);
        if (deform_c->parsed())
            return cmd_deform(o, cfg);
        if (cf_c->parsed())
            return cmd_cf(o, cfg);
        if (braid_c->parsed())
            return cmd_braid(o, cfg);
        if (orbit_c->parsed())
            return cmd_orbit(o, cfg);
        if (jones_c->parsed())
            return cmd_jones(o, cfg);
        if (farey_c->parsed())
            return cmd_farey(o, cfg);
        if (classify_c->parsed())
            return cmd_classify(o, cfg);
        if (gromov_c->parsed())
            return cmd_stab_gromov(o, cfg);
        if (limit_c->parsed())
            return cmd_stab_limit(o, cfg);
        if (check_c->parsed())
            return cmd_stab_check(o, cfg);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    }
    std::cerr << app.help();
    return kExitUsage;
}

}  // namespace qrat::cli
