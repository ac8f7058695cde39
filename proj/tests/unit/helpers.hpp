#pragma once

#include <random>

#include "qrat/laurent.hpp"

inline qrat::LaurentPoly P(const char* s)
{
    return qrat::LaurentPoly::parse(s);
}

inline qrat::LaurentPoly random_poly(std::mt19937_64& rng, int max_exp = 6, int max_coeff = 9)
{
    std::uniform_int_distribution<int> terms(0, 5), ex(-max_exp, max_exp), co(-max_coeff, max_coeff);
    std::map<std::int64_t, qrat::BigInt> m;
    int n = terms(rng);
    for (int i = 0; i < n; ++i)
        m[ex(rng)] += co(rng);
    return qrat::LaurentPoly::from_terms(m);
}
