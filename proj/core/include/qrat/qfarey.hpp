#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "qrat/contfrac.hpp"
#include "qrat/laurent.hpp"
#include "qrat/qrationals.hpp"

namespace qrat {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class FareyHalf { Positive, Negative };

std::string half_name(FareyHalf h);
FareyHalf parse_half(const std::string& text);

struct QFareyTriangle {
    // representatives exactly as produced by the mediant rule
    QPair left, middle, right;
    // the same positions in the classical tessellation
    Rational left_x, middle_x, right_x;
    std::int64_t top_label_exp = 0;
    std::int64_t left_label_exp = 0;
    std::int64_t right_label_exp = 0;
    int depth = 1;

    RatFunc vertex(int i) const;
};

struct Tessellation {
    FareyHalf half = FareyHalf::Positive;
    int depth = 0;
    std::vector<QFareyTriangle> triangles;
};

Tessellation generate(FareyHalf half, int depth);

// every vertex equals the sharp deformation of its classical position
bool vertex_identity(const Tessellation& t);

struct SvgOptions {
    double scale = 5.0;
};

std::string render_svg_string(const Tessellation& t, double q, const SvgOptions& opt = {});
void render_svg(const Tessellation& t, double q, const std::string& path, const SvgOptions& opt = {});
// number of drawn arcs, vertical lines to inf included
std::size_t arc_count(const Tessellation& t);

using NumTriangle = std::array<double, 3>;

struct TriangleSequences {
    std::vector<NumTriangle> t;
    std::vector<NumTriangle> t_prime;
    double flat = 0;
    double sharp = 0;
};

double diameter(const NumTriangle& tri);

// T_n = gamma^n beta_a T_A and T'_n = gamma'^n beta' T_A for n = 0..n_max
TriangleSequences triangle_sequences(const Rational& x, double q, int n_max);

std::string library_version();

}  // namespace qrat
