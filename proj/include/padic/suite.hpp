#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "padic/polynomial.hpp"
#include "padic/random.hpp"

namespace padic {

constexpr std::uint64_t kDefaultSeed = 42;

/// The primes of the default matrix.
const std::vector<std::int64_t>& suite_primes();

struct SuitePolynomial {
    std::string name;
    IntPolynomial f;
    /// |f| is constant on the unit sphere (true for x1, x1^2 and the norm forms).
    bool radial;
};

/// x1, x1^2, an anisotropic norm form and the ramified form x1^2 - p x2^2.
/// All are elliptic at p.
std::vector<SuitePolynomial> suite_polynomials(std::int64_t p);

/// Ten right-hand sides: chi_0, a W combination, two zero-integral functions
/// and six random ones, all drawn from `seed`.
std::vector<TestFunction> v_suite(Prime p, int n, std::uint64_t seed = kDefaultSeed);

/// Combinations of chi_r only.
std::vector<TestFunction> w_suite(Prime p, int n);

/// The origin plus random points with denominators up to p^2.
std::vector<Point> sample_points(Prime p, int n, std::size_t count, std::uint64_t seed = kDefaultSeed);

/// Seed mixed with (p, n, salt) so that suites for different cells are independent.
std::uint64_t cell_seed(std::uint64_t seed, std::int64_t p, int n, std::uint64_t salt = 0);

}  // namespace padic
