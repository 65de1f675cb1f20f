#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "padic/laurent.hpp"
#include "padic/polynomial.hpp"

namespace padic {

struct SearchBudget {
    int max_depth = 12;
    std::int64_t max_nodes = 10'000'000;
};

enum class EllipticStatus { elliptic, zero_found, budget_exceeded, not_homogeneous };

std::string to_string(EllipticStatus s);

struct EllipticityResult {
    EllipticStatus status;
    /// For zero_found: a unit vector mod p^witness_depth lifting to a zero of f.
    std::vector<Integer> witness;
    int witness_depth = 0;
    std::int64_t nodes_visited = 0;
};

/// A residue class z + (p^depth Z_p)^n on the unit sphere on which v(f) = value_exponent.
struct Leaf {
    std::vector<Integer> representative;  ///< entries in [0, p^depth)
    int depth;
    std::int64_t value_exponent;

    Point point() const;
};

/// Partition of the unit sphere {||x|| = 1} into classes where |f| is constant.
struct SphereCovering {
    Prime p;
    int n;
    int degree;
    std::vector<Leaf> leaves;  ///< breadth-first, lexicographic digit order
    std::int64_t m_max;
    std::int64_t m_min;

    /// The integer m of the sphere-covering lemma: m_max + 1.
    std::int64_t lemma_m() const { return m_max + 1; }
    Rational total_measure() const;
    /// v(f) on the class of the unit vector y mod p^depth if it is constant there.
    std::optional<std::int64_t> value_exponent(const std::vector<Integer>& residue, int depth) const;

    SphereCovering(Prime p, int n, int degree, std::vector<Leaf> leaves);

private:
    std::map<std::pair<int, std::vector<Integer>>, std::int64_t> index_;
    int max_depth_ = 0;
};

EllipticityResult ellipticity_check(const IntPolynomial& f, Prime p, const SearchBudget& budget = {});

/// Throws InputError for non-homogeneous or non-elliptic f, BudgetExceeded when inconclusive.
SphereCovering sphere_covering(const IntPolynomial& f, Prime p, const SearchBudget& budget = {});

struct NormComparison {
    Rational c0;  ///< p^{-m_max}: C0 ||x||^d <= |f(x)|
    Rational c1;  ///< p^{-m_min}: |f(x)| <= C1 ||x||^d
};

NormComparison norm_comparison(const SphereCovering& cov);

/// Z(s, f) = int_{Z_p^n} |f(x)|^s dx as a rational function of t = p^{-s}:
/// (sum_leaves p^{-n depth} t^{m}) / (1 - p^{-n} t^d).
LaurentRational igusa_zeta(const SphereCovering& cov);

/// Numerator of the Igusa zeta function: sum over leaves of p^{-n depth} t^{m}.
QPoly sphere_polynomial(const SphereCovering& cov);

}  // namespace padic
