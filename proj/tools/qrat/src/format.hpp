#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "qrat/braid.hpp"
#include "qrat/qrationals.hpp"

namespace qrat::cli {

using nlohmann::json;

// 12 significant digits
std::string fmt12(double v);
// a json number rounded to 12 significant digits; non-finite values become strings
json num(double v);
json nums(const std::vector<double>& v);

json poly_json(const LaurentPoly& p);
json pair_json(const QPair& p);
json matrix_json(const Mat2q& m);
json integers_json(const std::vector<long long>& v);
json bigints_json(const std::vector<BigInt>& v);

// "[1,1,0,1]"
std::string bigints_text(const std::vector<BigInt>& v);

// two spaces, trailing newline
std::string dump(const json& j);

}  // namespace qrat::cli
