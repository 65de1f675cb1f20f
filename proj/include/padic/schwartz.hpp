#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "padic/ball.hpp"
#include "padic/cyclotomic.hpp"

namespace padic {

/// coeff * Psi(twist . x) * 1_ball(x). The twist is kept reduced modulo the dual
/// lattice (p^{-scale} Z_p)^n, with the difference folded into coeff.
struct Term {
    CycScalar coeff;
    Point twist;
    Ball ball;

    bool has_trivial_twist() const { return twist.is_zero(); }
};

/// Builds a term with canonical twist; the value on the ball is unchanged.
Term make_term(CycScalar coeff, const Point& twist, const Ball& ball);

enum class Direction { forward, inverse };

/// A Bruhat-Schwartz function on Q_p^n: a finite sum of twisted ball indicators.
class TestFunction {
public:
    TestFunction(Prime p, int n);

    static TestFunction indicator(const Ball& ball);
    /// chi_r, the indicator of (p^r Z_p)^n.
    static TestFunction chi(Prime p, int n, std::int64_t r);

    Prime prime() const noexcept { return p_; }
    int dim() const noexcept { return n_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }

    void add_term(const CycScalar& coeff, const Point& twist, const Ball& ball);
    void add_term(const Term& t) { add_term(t.coeff, t.twist, t.ball); }

    CycScalar operator()(const Point& x) const;

    /// Pairwise disjoint balls, one term per (ball, twist), no zero terms, sorted.
    /// Two functions are equal iff their difference has an empty canonical form.
    TestFunction canonical() const;
    bool is_zero() const { return canonical().terms_.empty(); }

    TestFunction conj() const;
    /// x -> phi(-x)
    TestFunction reflected() const;
    /// y -> phi(x - y)
    TestFunction translated_reflected(const Point& x) const;
    /// xi -> Psi(x . xi) phi(xi)
    TestFunction twisted(const Point& x) const;

    /// log_p of an upper bound on ||x|| over the support, read off the term balls.
    std::int64_t support_bound_exponent() const;
    /// Largest ||twist|| exponent over terms; the function is constant on balls of scale >= this.
    std::int64_t twist_bound_exponent() const;

    TestFunction& operator+=(const TestFunction& o);
    TestFunction& operator-=(const TestFunction& o);
    TestFunction& operator*=(const CycScalar& c);
    friend TestFunction operator+(TestFunction a, const TestFunction& b) { return a += b; }
    friend TestFunction operator-(TestFunction a, const TestFunction& b) { return a -= b; }
    friend TestFunction operator*(TestFunction a, const CycScalar& c) { return a *= c; }
    friend TestFunction operator*(const CycScalar& c, TestFunction a) { return a *= c; }
    /// Pointwise product.
    friend TestFunction operator*(const TestFunction& a, const TestFunction& b);
    friend bool operator==(const TestFunction& a, const TestFunction& b) { return (a - b).is_zero(); }

private:
    void check_compatible(const TestFunction& o) const;

    Prime p_;
    int n_;
    std::vector<Term> terms_;
};

/// One ball of a canonical form together with its character expansion.
struct BallContent {
    Ball ball;
    std::vector<Term> terms;
};

/// Groups a canonical form by ball.
std::vector<BallContent> group_by_ball(const TestFunction& canonical_form);
/// Splits a ball content into the contents of the children (zero children dropped).
std::vector<BallContent> split_content(const BallContent& content);

CycScalar evaluate(const TestFunction& phi, const Point& x);

/// (F phi)(xi) = int Psi(-x . xi) phi(x) dx, and its inverse.
TestFunction fourier(const TestFunction& phi, Direction direction = Direction::forward);

CycScalar integrate(const TestFunction& phi);

/// (phi * psi)(x) = int phi(x - y) psi(y) dy, computed as F^{-1}(F phi . F psi).
TestFunction convolve(const TestFunction& phi, const TestFunction& psi);

/// log_p of max ||x|| over the support; throws for the zero function.
std::int64_t support_norm_exponent(const TestFunction& phi);

struct LocalConstancy {
    std::int64_t exponent;  ///< l: phi(x + x') = phi(x) whenever ||x'|| <= p^{-l}
    std::int64_t r_phi;     ///< min r >= 0 with phi constant on (p^r Z_p)^n
};

/// Throws Error for the zero function.
LocalConstancy local_constancy_data(const TestFunction& phi);

struct LWDecomposition {
    TestFunction l_part;  ///< zero integral
    TestFunction w_part;  ///< multiple of chi_{r_phi}
};

LWDecomposition decompose_lw(const TestFunction& phi);

/// True when phi is a finite combination of chi_r.
bool is_in_w(const TestFunction& phi);

}  // namespace padic
