#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "padic/schwartz.hpp"

namespace padic {

/// Unevaluated sum hi + lo of two doubles, about 106 bits.
struct DoubleDouble {
    double hi = 0;
    double lo = 0;

    DoubleDouble() = default;
    DoubleDouble(double h) : hi(h) {}
    DoubleDouble(double h, double l) : hi(h), lo(l) {}
    static DoubleDouble from_real(const Real& x);
    Real to_real() const;

    friend DoubleDouble operator+(const DoubleDouble& a, const DoubleDouble& b);
    friend DoubleDouble operator-(const DoubleDouble& a, const DoubleDouble& b);
    friend DoubleDouble operator*(const DoubleDouble& a, const DoubleDouble& b);
    DoubleDouble operator-() const { return {-hi, -lo}; }
    DoubleDouble& operator+=(const DoubleDouble& b) { return *this = *this + b; }
};

struct DDComplex {
    DoubleDouble re;
    DoubleDouble im;

    static DDComplex from_complex(const Complex& z);
    Complex to_complex() const;

    friend DDComplex operator+(const DDComplex& a, const DDComplex& b) { return {a.re + b.re, a.im + b.im}; }
    friend DDComplex operator-(const DDComplex& a, const DDComplex& b) { return {a.re - b.re, a.im - b.im}; }
    friend DDComplex operator*(const DDComplex& a, const DDComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    DDComplex& operator+=(const DDComplex& b) { return *this = *this + b; }
    DDComplex conj() const { return {re, -im}; }
};

/// Largest grid the oracle accepts (7^8 points: p = 7, n = 2, K = 2).
constexpr std::int64_t kMaxQuotientSize = 5'764'801;

/// A function on G_K = (p^{-K} Z_p / p^K Z_p)^n. Entry a (digits in base p^{2K},
/// first coordinate least significant) is the value at p^{-K} a; each point has mass p^{-Kn}.
class QuotientFunction {
public:
    /// Throws InputError with a size estimate when the grid exceeds kMaxQuotientSize.
    QuotientFunction(Prime p, int n, int k);

    Prime prime() const noexcept { return p_; }
    int dim() const noexcept { return n_; }
    int level() const noexcept { return k_; }
    /// p^{2K}, the number of points per axis.
    std::int64_t side() const noexcept { return side_; }
    std::size_t size() const noexcept { return values_.size(); }
    Real mass() const;

    std::vector<DDComplex>& values() noexcept { return values_; }
    const std::vector<DDComplex>& values() const noexcept { return values_; }

    std::vector<std::int64_t> digits(std::size_t index) const;
    std::size_t index(const std::vector<std::int64_t>& digits) const;
    Point point(std::size_t index) const;
    /// Index of a point of the window; throws InputError outside it.
    std::size_t index_of(const Point& x) const;

    /// sum |g|^2 times the mass
    Real l2_norm2() const;
    Complex total() const;

private:
    Prime p_;
    int n_;
    int k_;
    std::int64_t side_;
    std::vector<DDComplex> values_;
};

/// Smallest K with phi supported in ||x|| <= p^K and constant on cosets of (p^K Z_p)^n.
int required_level(const TestFunction& phi);

/// Samples phi on G_K; throws InputError naming the required K when phi does not fit.
QuotientFunction project(const TestFunction& phi, int k);

/// Discrete transform with kernel Psi(-+ x . xi) and mass p^{-Kn}, by separable radix-p passes.
QuotientFunction dft(const QuotientFunction& g, Direction direction = Direction::forward);
/// The same transform by direct O(N^2) summation; refuses grids above 20000 points.
QuotientFunction dft_naive(const QuotientFunction& g, Direction direction = Direction::forward);

/// (g * h)(x) = sum_y g(x - y) h(y) times the mass, directly; refuses grids above 20000 points.
QuotientFunction convolve_direct(const QuotientFunction& g, const QuotientFunction& h);

/// F^{-1}(||xi||^a F g) on the grid. The coset p^K Z_p^n carries the exact average
/// of ||xi||^a over it, so the result is exact for band-limited input. Needs a > -n.
QuotientFunction norm_multiplier(const QuotientFunction& g, const Real& a);

struct CompareReport {
    Real max_abs{0};
    Real max_rel{0};
    std::size_t points = 0;
    bool pass = true;
};

/// Compares against the exact projection of an analytic test function.
CompareReport compare(const QuotientFunction& brute, const TestFunction& analytic, const Real& tolerance);
/// Compares at the listed grid indices against analytic values.
CompareReport compare(const QuotientFunction& brute, const std::vector<std::size_t>& indices,
                      const std::function<Complex(const Point&)>& analytic, const Real& tolerance);

}  // namespace padic
