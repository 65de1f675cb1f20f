#pragma once

#include <cstdint>
#include <random>

#include "padic/schwartz.hpp"

namespace padic {

using Rng = std::mt19937_64;

struct RandomShape {
    int max_terms = 4;
    std::int64_t min_scale = -1;
    std::int64_t max_scale = 2;
    int max_center_den_exp = 1;  ///< centers have denominators up to p^this
    int max_twist_den_exp = 2;   ///< twists have denominators up to p^this
};

/// p-power-denominator rational num / p^e with |num| <= max_num, 0 <= e <= max_den_exp.
Rational random_ppower_rational(Rng& rng, Prime p, int max_den_exp, int max_num);

Point random_point(Rng& rng, Prime p, int n, int max_den_exp, int max_num);

/// Nonzero random test function; coefficients are small rationals times roots of unity.
TestFunction random_test_function(Rng& rng, Prime p, int n, const RandomShape& shape = {});

/// Random element of the zero-integral subspace (a random function minus its projection).
TestFunction random_zero_integral_function(Rng& rng, Prime p, int n, const RandomShape& shape = {});

}  // namespace padic
