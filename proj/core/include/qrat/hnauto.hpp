#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qrat/braid.hpp"
#include "qrat/qrationals.hpp"

namespace qrat {

// Deterministic automaton whose vertices house two coordinates of a
// dim-dimensional multiplicity space.  Letters are braid letters.
class LabeledAutomaton {
public:
    struct Edge {
        int target;
        Mat2q matrix;
    };

    LabeledAutomaton(int dim, std::vector<std::string> vertex_names, std::vector<std::array<int, 2>> houses);

    void add_edge(int source, int letter, int target, Mat2q matrix);

    int dim() const { return dim_; }
    int vertex_count() const { return static_cast<int>(names_.size()); }
    const std::string& name(int v) const { return names_[static_cast<std::size_t>(v)]; }
    const std::array<int, 2>& house(int v) const { return houses_[static_cast<std::size_t>(v)]; }
    const Edge* edge(int source, int letter) const;
    std::vector<int> labels(int source) const;

    // vertices whose house contains the support of v
    std::vector<int> states_of(const std::vector<LaurentPoly>& v) const;
    // first current state with an outgoing edge for the letter
    std::optional<std::vector<LaurentPoly>> step(const std::vector<LaurentPoly>& v, int letter) const;
    // reads w right to left
    std::optional<std::vector<LaurentPoly>> run(std::vector<LaurentPoly> v, const BraidWord& w) const;

private:
    int dim_;
    std::vector<std::string> names_;
    std::vector<std::array<int, 2>> houses_;
    std::map<std::pair<int, int>, Edge> edges_;
};

enum class Basic { P1 = 0, P2 = 1, P12 = 2, P21 = 3 };
enum class AutoState { A = 0, B = 1, C = 2, D = 3 };  // [P1,P12] [P21,P1] [P12,P2] [P2,P21]

std::string state_name(AutoState s);

const LabeledAutomaton& c2_automaton();
// one vertex, sigma1 multiplies by q
LabeledAutomaton shift_automaton();

struct HNVector {
    LaurentPoly p1, p2, p12, p21;

    const LaurentPoly& operator[](Basic b) const;
    LaurentPoly& operator[](Basic b);
    std::vector<LaurentPoly> to_vector() const { return {p1, p2, p12, p21}; }
    static HNVector from_vector(const std::vector<LaurentPoly>& v);
    static HNVector basic(Basic b);
    HNVector shifted(std::int64_t k) const;
    bool all_nonnegative() const;
    // the support is exactly {b}
    bool is_pure(Basic b) const;
    friend bool operator==(const HNVector&, const HNVector&) = default;
};

struct SignClass {
    bool ge = false;
    bool le = false;
};

struct SphericalObject {
    BraidWord word;  // object is word.P1 (up to the shift recorded in vector)
    HNVector vector;
    std::vector<AutoState> states;
    Rational label;
    bool via_normal_form = false;

    SignClass sign_class() const;
};

std::vector<AutoState> states_of(const HNVector& v);
SignClass sign_class(const HNVector& v);

SphericalObject object_P1();
SphericalObject object_P2();
// w.P1
SphericalObject orbit(const BraidWord& w);
SphericalObject apply_braid(const SphericalObject& x, const BraidWord& w);

LaurentPoly occ(Basic base, const HNVector& v);
LaurentPoly occ(Basic base, const SphericalObject& x);
// occ(x, y) = occ(P1, x.word^-1 y)
LaurentPoly occ_general(const SphericalObject& x, const SphericalObject& y);

LaurentPoly hom(Basic base, const HNVector& v);
LaurentPoly hom(Basic base, const SphericalObject& x);
// hom(x, P_i) = hom(P1, x.word^-1 P_i)
LaurentPoly hom_from(const SphericalObject& x, Basic target);

struct RZResult {
    Rational label;
    LaurentPoly num;  // before normalization
    LaurentPoly den;
    QPair value;  // normalized for label
    int epsilon = 0;
};

RZResult rz_right(const SphericalObject& x);
RZResult rz_left(const SphericalObject& x);

// class of w.P2 read from the q = 1 label
SignClass label_sign_class(const Rational& label);

struct OccMatrixRoute {
    NormalForm nf;
    int epsilon = 0;
    std::array<std::int64_t, 3> k{};  // (-q) powers on entries 12, 21, 22
    // [[occ(P2,wP1), occ(P2,wP2)], [occ(P1,wP1), occ(P1,wP2)]] read off the word matrix
    Mat2q occ;
};

OccMatrixRoute occ_matrix_route(const BraidWord& w);
// the same table computed with the automaton
Mat2q occ_table_automaton(const BraidWord& w);

struct BilinearTerms {
    LaurentPoly lhs;  // occ(X,Y)
    LaurentPoly t1;   // occ(X,P1) occ(P2,Y)
    LaurentPoly t2;   // occ(X,P2) occ(P1,Y)
    std::int64_t k1 = 0;
    std::int64_t k2 = 0;
    // lhs = unit * ((-q)^k1 t1 + (-q)^k2 t2)
    bool holds = false;
    bool holds_literally = false;
};

BilinearTerms bilinear_occ(const SphericalObject& x, const SphericalObject& y);

}  // namespace qrat
