#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qrat/contfrac.hpp"
#include "qrat/laurent.hpp"

namespace qrat {

enum class QuiverFamily { GSharp, GSharpHat, GFlat, GFlatHat, H };

std::string family_name(QuiverFamily f);
QuiverFamily parse_family(const std::string& text);

struct Quiver {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    Quiver reversed() const;
};

// c_0..c_n, c_k = number of closures with k vertices
using ClosureCounts = std::vector<BigInt>;

// vertices are numbered left to right
Quiver build_quiver(const Rational& x, QuiverFamily family);
// path quiver on blocks of edges with alternating orientation; first_dir < 0
// means the first block points towards vertex 0
Quiver path_from_blocks(const std::vector<long long>& blocks, int first_dir);

constexpr int kBruteForceMaxVertices = 22;

// exhaustive enumeration of vertex subsets (branches cut as soon as an edge leaves)
ClosureCounts count_closures_bruteforce(const Quiver& g);
// transfer matrix along the path; other shapes fall back to brute force
ClosureCounts count_closures_dp(const Quiver& g);
bool is_path_shaped(const Quiver& g);

LaurentPoly counts_to_poly(const ClosureCounts& c);
// coefficients from degree 0 up to the top degree
ClosureCounts poly_to_counts(const LaurentPoly& p);

enum class JonesRoute { Closures, Flat, Both };

JonesRoute parse_route(const std::string& text);
// |V_{r/s}(q)| with positive coefficients
LaurentPoly jones_abs(const Rational& x, JonesRoute route = JonesRoute::Both);

}  // namespace qrat
