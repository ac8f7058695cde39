#include "qrat/hnauto.hpp"

#include <algorithm>

namespace qrat {

LabeledAutomaton::LabeledAutomaton(int dim, std::vector<std::string> vertex_names,
                                   std::vector<std::array<int, 2>> houses)
    : dim_(dim), names_(std::move(vertex_names)), houses_(std::move(houses))
{
    if (names_.size() != houses_.size())
        throw DomainError("automaton: one house per vertex required");
    for (const auto& h : houses_)
        for (int c : h)
            if (c < 0 || c >= dim_)
                throw DomainError("automaton: house coordinate out of range");
}

void LabeledAutomaton::add_edge(int source, int letter, int target, Mat2q matrix)
{
    if (source < 0 || source >= vertex_count() || target < 0 || target >= vertex_count())
        throw DomainError("automaton: vertex out of range");
    if (!unit_ratio(matrix.det(), LaurentPoly(1)))
        throw DomainError("automaton: edge matrix is not invertible");
    if (!edges_.emplace(std::make_pair(source, letter), Edge{target, std::move(matrix)}).second)
        throw DomainError("automaton: duplicate edge label");
}

const LabeledAutomaton::Edge* LabeledAutomaton::edge(int source, int letter) const
{
    auto it = edges_.find({source, letter});
    return it == edges_.end() ? nullptr : &it->second;
}

std::vector<int> LabeledAutomaton::labels(int source) const
{
    std::vector<int> out;
    for (const auto& [key, e] : edges_)
        if (key.first == source)
            out.push_back(key.second);
    return out;
}

std::vector<int> LabeledAutomaton::states_of(const std::vector<LaurentPoly>& v) const
{
    std::vector<int> out;
    for (int s = 0; s < vertex_count(); ++s) {
        const auto& h = house(s);
        bool ok = true;
        for (int c = 0; c < dim_ && ok; ++c)
            if (!v[static_cast<std::size_t>(c)].is_zero() && c != h[0] && c != h[1])
                ok = false;
        if (ok)
            out.push_back(s);
    }
    return out;
}

std::optional<std::vector<LaurentPoly>> LabeledAutomaton::step(const std::vector<LaurentPoly>& v, int letter) const
{
    for (int s : states_of(v)) {
        const Edge* e = edge(s, letter);
        if (!e)
            continue;
        const auto& h = house(s);
        auto [x, y] = mobius_apply_pair(e->matrix, v[static_cast<std::size_t>(h[0])], v[static_cast<std::size_t>(h[1])]);
        std::vector<LaurentPoly> out(static_cast<std::size_t>(dim_));
        const auto& th = house(e->target);
        out[static_cast<std::size_t>(th[0])] = std::move(x);
        out[static_cast<std::size_t>(th[1])] = std::move(y);
        return out;
    }
    return std::nullopt;
}

std::optional<std::vector<LaurentPoly>> LabeledAutomaton::run(std::vector<LaurentPoly> v, const BraidWord& w) const
{
    const auto& l = w.letters();
    for (auto it = l.rbegin(); it != l.rend(); ++it) {
        auto next = step(v, *it);
        if (!next)
            return std::nullopt;
        v = std::move(*next);
    }
    return v;
}

std::string state_name(AutoState s)
{
    switch (s) {
    case AutoState::A:
        return "[P1,P12]";
    case AutoState::B:
        return "[P21,P1]";
    case AutoState::C:
        return "[P12,P2]";
    default:
        return "[P2,P21]";
    }
}

const LabeledAutomaton& c2_automaton()
{
    static const LabeledAutomaton aut = [] {
        const LaurentPoly one(1), zero, q = LaurentPoly::monomial(1), qi = LaurentPoly::monomial(-1);
        const Mat2q id{one, zero, zero, one};
        const Mat2q loop{qi, qi, zero, one};
        const Mat2q loop_inv{one, zero, q, q};
        const Mat2q up{one, one, zero, q};
        const Mat2q down{qi, zero, one, one};
        constexpr int P1 = 0, P2 = 1, P12 = 2, P21 = 3;
        constexpr int A = 0, B = 1, C = 2, D = 3;
        LabeledAutomaton a(4, {state_name(AutoState::A), state_name(AutoState::B), state_name(AutoState::C), state_name(AutoState::D)},
                           {{{P1, P12}, {P21, P1}, {P12, P2}, {P2, P21}}});
        a.add_edge(A, 1, A, loop);
        a.add_edge(A, 2, B, id);
        a.add_edge(A, -2, C, up);
        a.add_edge(B, -1, B, loop_inv);
        a.add_edge(B, -2, A, id);
        a.add_edge(B, 2, D, down);
        a.add_edge(C, -2, C, loop_inv);
        a.add_edge(C, -1, D, id);
        a.add_edge(C, 1, A, down);
        a.add_edge(D, 2, D, loop);
        a.add_edge(D, 1, C, id);
        a.add_edge(D, -1, B, up);
        return a;
    }();
    return aut;
}

LabeledAutomaton shift_automaton()
{
    const LaurentPoly zero, q = LaurentPoly::monomial(1), qi = LaurentPoly::monomial(-1);
    LabeledAutomaton a(2, {"shift"}, {{{0, 1}}});
    a.add_edge(0, 1, 0, Mat2q{q, zero, zero, q});
    a.add_edge(0, -1, 0, Mat2q{qi, zero, zero, qi});
    return a;
}

const LaurentPoly& HNVector::operator[](Basic b) const
{
    switch (b) {
    case Basic::P1:
        return p1;
    case Basic::P2:
        return p2;
    case Basic::P12:
        return p12;
    default:
        return p21;
    }
}

LaurentPoly& HNVector::operator[](Basic b)
{
    return const_cast<LaurentPoly&>(static_cast<const HNVector&>(*this)[b]);
}

HNVector HNVector::from_vector(const std::vector<LaurentPoly>& v)
{
    return {v.at(0), v.at(1), v.at(2), v.at(3)};
}

HNVector HNVector::basic(Basic b)
{
    HNVector v;
    v[b] = LaurentPoly(1);
    return v;
}

HNVector HNVector::shifted(std::int64_t k) const
{
    return {p1.shifted(k), p2.shifted(k), p12.shifted(k), p21.shifted(k)};
}

bool HNVector::all_nonnegative() const
{
    return p1.all_coefficients_nonnegative() && p2.all_coefficients_nonnegative() &&
           p12.all_coefficients_nonnegative() && p21.all_coefficients_nonnegative();
}

bool HNVector::is_pure(Basic b) const
{
    for (Basic c : {Basic::P1, Basic::P2, Basic::P12, Basic::P21})
        if ((*this)[c].is_zero() != (c != b))
            return false;
    return true;
}

std::vector<AutoState> states_of(const HNVector& v)
{
    std::vector<AutoState> out;
    for (int s : c2_automaton().states_of(v.to_vector()))
        out.push_back(static_cast<AutoState>(s));
    return out;
}

SignClass sign_class(const HNVector& v)
{
    SignClass c;
    for (AutoState s : states_of(v)) {
        if (s == AutoState::B || s == AutoState::D)
            c.ge = true;
        else
            c.le = true;
    }
    return c;
}

SignClass SphericalObject::sign_class() const
{
    return qrat::sign_class(vector);
}

namespace {

SphericalObject make_object(BraidWord w, HNVector v, bool via_nf)
{
    SphericalObject x;
    x.states = states_of(v);
    if (x.states.empty())
        throw std::logic_error("HN vector has no automaton state");
    x.label = braid_label(w);
    x.word = std::move(w);
    x.vector = std::move(v);
    x.via_normal_form = via_nf;
    return x;
}

}  // namespace

SphericalObject object_P1()
{
    return make_object(BraidWord(), HNVector::basic(Basic::P1), false);
}

SphericalObject object_P2()
{
    return orbit(BraidWord{1, 2});
}

SphericalObject orbit(const BraidWord& w)
{
    const auto& aut = c2_automaton();
    auto direct = aut.run(HNVector::basic(Basic::P1).to_vector(), w);
    if (direct)
        return make_object(w, HNVector::from_vector(*direct), false);
    // sigma1^M omega^N P1 = P1[-2N-M]
    NormalForm nf = continued_normal_form(w);
    auto v = aut.run(HNVector::basic(Basic::P1).to_vector(), nf.prefix());
    if (!v)
        throw std::logic_error("normal form prefix has no automaton path: " + w.to_string());
    std::int64_t shift = checked_add(checked_mul(-2, nf.N), -nf.M);
    return make_object(w, HNVector::from_vector(*v).shifted(shift), true);
}

SphericalObject apply_braid(const SphericalObject& x, const BraidWord& w)
{
    BraidWord combined = w * x.word;
    auto direct = c2_automaton().run(x.vector.to_vector(), w);
    if (direct)
        return make_object(combined, HNVector::from_vector(*direct), x.via_normal_form);
    return orbit(combined);
}

LaurentPoly occ(Basic base, const HNVector& v)
{
    if (base == Basic::P1)
        return v.p2 + v.p12 + v.p21;
    if (base == Basic::P2)
        return v.p1 + v.p12 + v.p21;
    throw DomainError("occ is defined for P1 and P2");
}

LaurentPoly occ(Basic base, const SphericalObject& x)
{
    return occ(base, x.vector);
}

LaurentPoly occ_general(const SphericalObject& x, const SphericalObject& y)
{
    return occ(Basic::P1, apply_braid(y, x.word.inverse()));
}

LaurentPoly hom(Basic base, const HNVector& v)
{
    const LaurentPoly one(1), qi = LaurentPoly::monomial(-1), qi2 = LaurentPoly::monomial(-2);
    SignClass c = sign_class(v);
    if (c.ge && c.le) {
        if (v.is_pure(Basic::P1))
            c.ge = false;
        else if (v.is_pure(Basic::P2))
            c.le = false;
    }
    LaurentPoly o1 = occ(Basic::P1, v), o2 = occ(Basic::P2, v);
    if (base == Basic::P1)
        return c.ge ? (one - qi) * o2 + qi * o1 : (qi2 - qi) * o2 + qi * o1;
    if (base == Basic::P2)
        return c.ge ? (qi2 - qi) * o1 + qi * o2 : (one - qi) * o1 + qi * o2;
    throw DomainError("hom is defined for P1 and P2");
}

LaurentPoly hom(Basic base, const SphericalObject& x)
{
    return hom(base, x.vector);
}

LaurentPoly hom_from(const SphericalObject& x, Basic target)
{
    BraidWord inv = x.word.inverse();
    if (target == Basic::P1)
        return hom(Basic::P1, orbit(inv));
    if (target == Basic::P2)
        return hom(Basic::P1, orbit(inv * BraidWord{1, 2}));
    throw DomainError("hom_from targets P1 or P2");
}

RZResult rz_right(const SphericalObject& x)
{
    RZResult r;
    r.label = x.label;
    r.num = occ(Basic::P2, x);
    r.den = occ(Basic::P1, x);
    bool ge_only = std::all_of(x.states.begin(), x.states.end(),
                               [](AutoState s) { return s == AutoState::B || s == AutoState::D; });
    if (!ge_only) {
        r.epsilon = 1;
        r.num = r.num.unit_scaled(-1, -1);
    }
    r.value = normalize_qrat(r.num, r.den, r.label, Side::Sharp);
    return r;
}

RZResult rz_left(const SphericalObject& x)
{
    RZResult r;
    r.label = x.label;
    SignClass c = x.sign_class();
    r.epsilon = (c.ge && !x.vector.is_pure(Basic::P2)) ? 0 : 1;
    LaurentPoly h1 = hom_from(x, Basic::P1), h2 = hom_from(x, Basic::P2);
    // (-1)^eps q^(eps-1)
    r.num = r.epsilon == 0 ? h2.shifted(-1) : -h2;
    r.den = h1;
    r.value = normalize_qrat(r.num, r.den, r.label, Side::Flat);
    return r;
}

SignClass label_sign_class(const Rational& label)
{
    if (label.is_inf() || label.is_zero())
        return {true, true};
    return label.sign() > 0 ? SignClass{true, false} : SignClass{false, true};
}

namespace {

// multiply by (-q)^(-k)
LaurentPoly strip_minus_q(const LaurentPoly& p, std::int64_t k)
{
    return p.unit_scaled(k % 2 == 0 ? 1 : -1, -k);
}

}  // namespace

OccMatrixRoute occ_matrix_route(const BraidWord& w)
{
    OccMatrixRoute r;
    r.nf = continued_normal_form(w);
    SignClass c = label_sign_class(braid_label(w * BraidWord{1, 2}));
    if (c.ge && c.le)
        r.epsilon = r.nf.form == 2 ? 1 : 0;
    else
        r.epsilon = c.ge ? 0 : 1;
    const std::int64_t e = r.epsilon;
    if (r.nf.strict())
        r.k = r.nf.form == 4 ? std::array<std::int64_t, 3>{-1, 0, 0} : std::array<std::int64_t, 3>{-e, e, 0};
    else
        r.k = {e - 1, e, 2 * e - 1};
    Mat2q m = word_matrix_q(w);
    r.occ = {m.a, strip_minus_q(m.b, r.k[0]), strip_minus_q(m.c, r.k[1]), strip_minus_q(m.d, r.k[2])};
    return r;
}

BilinearTerms bilinear_occ(const SphericalObject& x, const SphericalObject& y)
{
    BilinearTerms b;
    b.lhs = occ_general(x, y);
    b.t1 = occ_general(x, object_P1()) * occ(Basic::P2, y);
    b.t2 = occ_general(x, object_P2()) * occ(Basic::P1, y);
    // row 2 of the matrix of x.word^-1 times column 1 of the matrix of y.word
    OccMatrixRoute left = occ_matrix_route(x.word.inverse());
    OccMatrixRoute right = occ_matrix_route(y.word);
    b.k1 = left.k[1];
    b.k2 = checked_add(left.k[2], right.k[1]);
    auto mq = [](std::int64_t k) { return LaurentPoly::monomial(k, k % 2 == 0 ? 1 : -1); };
    b.holds = equal_up_to_unit(b.lhs, mq(b.k1) * b.t1 + mq(b.k2) * b.t2);
    b.holds_literally = equal_up_to_unit(b.lhs, b.t1 + b.t2);
    return b;
}

Mat2q occ_table_automaton(const BraidWord& w)
{
    HNVector v1 = orbit(w).vector;
    HNVector v2 = orbit(w * BraidWord{1, 2}).vector;
    return {occ(Basic::P2, v1), occ(Basic::P2, v2), occ(Basic::P1, v1), occ(Basic::P1, v2)};
}

}  // namespace qrat
