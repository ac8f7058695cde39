#include "format.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace qrat::cli {

std::string fmt12(double v)
{
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    std::string s = buf;
    if (s == "-0")
        s = "0";
    return s;
}

json num(double v)
{
    if (!std::isfinite(v))
        return fmt12(v);
    return std::stod(fmt12(v));
}

json nums(const std::vector<double>& v)
{
    json a = json::array();
    for (double x : v)
        a.push_back(num(x));
    return a;
}

json poly_json(const LaurentPoly& p)
{
    return p.to_string();
}

json pair_json(const QPair& p)
{
    return {{"R", poly_json(p.R)}, {"S", poly_json(p.S)}};
}

json matrix_json(const Mat2q& m)
{
    return json::array({json::array({poly_json(m.a), poly_json(m.b)}), json::array({poly_json(m.c), poly_json(m.d)})});
}

json integers_json(const std::vector<long long>& v)
{
    return json(v);
}

json bigints_json(const std::vector<BigInt>& v)
{
    json a = json::array();
    for (const auto& x : v) {
        if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
            a.push_back(static_cast<long long>(x));
        else
            a.push_back(x.str());
    }
    return a;
}

std::string bigints_text(const std::vector<BigInt>& v)
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i];
    os << ']';
    return os.str();
}

std::string dump(const json& j)
{
    return j.dump(2) + "\n";
}

}  // namespace qrat::cli
