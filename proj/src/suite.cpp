#include "padic/suite.hpp"

#include <array>

namespace padic {

const std::vector<std::int64_t>& suite_primes() {
    static const std::vector<std::int64_t> primes{2, 3, 5, 7};
    return primes;
}

std::vector<SuitePolynomial> suite_polynomials(std::int64_t p) {
    // a quadratic form anisotropic mod p: x^2 + xy + y^2 fails mod 3 and 7,
    // x^2 + y^2 fails mod 5
    std::string norm_form = "x1^2 + x2^2";
    if (p == 2) norm_form = "x1^2 + x1*x2 + x2^2";
    if (p == 5) norm_form = "x1^2 - 2*x2^2";
    const std::string ramified = "x1^2 - " + std::to_string(p) + "*x2^2";
    return {
        {"x1", parse_polynomial("x1", 1), true},
        {"x1^2", parse_polynomial("x1^2", 1), true},
        {norm_form, parse_polynomial(norm_form, 2), true},
        {ramified, parse_polynomial(ramified, 2), false},
    };
}

std::uint64_t cell_seed(std::uint64_t seed, std::int64_t p, int n, std::uint64_t salt) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(salt)};
    std::array<std::uint32_t, 2> out{};
    seq.generate(out.begin(), out.end());
    return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

std::vector<TestFunction> v_suite(Prime p, int n, std::uint64_t seed) {
    Rng rng(cell_seed(seed, p, n, 1));
    std::vector<TestFunction> out;
    out.push_back(TestFunction::chi(p, n, 0));
    out.push_back(TestFunction::chi(p, n, -1) * CycScalar(Rational(2)) - TestFunction::chi(p, n, 1));
    for (int i = 0; i < 2; ++i) out.push_back(random_zero_integral_function(rng, p, n));
    while (out.size() < 10) out.push_back(random_test_function(rng, p, n));
    return out;
}

std::vector<TestFunction> w_suite(Prime p, int n) {
    std::vector<TestFunction> out;
    for (std::int64_t r : {-1, 0, 2}) out.push_back(TestFunction::chi(p, n, r));
    out.push_back(TestFunction::chi(p, n, 0) * CycScalar(Rational(2)) - TestFunction::chi(p, n, 1));
    out.push_back(TestFunction::chi(p, n, -2) * CycScalar(Rational(1, 3)) + TestFunction::chi(p, n, 3));
    return out;
}

std::vector<Point> sample_points(Prime p, int n, std::size_t count, std::uint64_t seed) {
    Rng rng(cell_seed(seed, p, n, 2));
    std::vector<Point> out{Point::zero(n)};
    while (out.size() < count) out.push_back(random_point(rng, p, n, 2, 60));
    return out;
}

}  // namespace padic
