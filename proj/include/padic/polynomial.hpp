#pragma once

#include <string>
#include <vector>

#include "padic/ball.hpp"
#include "padic/rational.hpp"

namespace padic {

struct Monomial {
    Integer coeff;
    std::vector<int> exponents;
};

/// Polynomial with integer coefficients in n variables.
class IntPolynomial {
public:
    /// Merges equal exponent vectors and drops zero coefficients.
    IntPolynomial(int n, std::vector<Monomial> monomials);

    int dim() const noexcept { return n_; }
    const std::vector<Monomial>& monomials() const noexcept { return monomials_; }
    bool is_zero() const noexcept { return monomials_.empty(); }
    /// Total degree of the highest monomial; 0 for constants and the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;

    Rational operator()(const Point& x) const;
    Integer operator()(const std::vector<Integer>& x) const;
    IntPolynomial derivative(int i) const;

    std::string to_string() const;
    friend bool operator==(const IntPolynomial&, const IntPolynomial&);

private:
    int n_;
    std::vector<Monomial> monomials_;
};

/// Parses sums of terms like "3*x1^2*x2", "-x2^4", "x1*x3" in variables x1..xn.
/// Throws InputError on malformed text or a variable index above n.
IntPolynomial parse_polynomial(const std::string& text, int n);

}  // namespace padic
