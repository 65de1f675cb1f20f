#pragma once

#include <string>

#include <boost/multiprecision/mpfr.hpp>

#include "padic/rational.hpp"

namespace padic {

/// Arbitrary precision real; the working precision is process-wide (see set_precision_bits).
using Real = boost::multiprecision::mpfr_float;

constexpr unsigned kDefaultPrecisionBits = 128;

/// Sets the working precision of newly created Real values.
void set_precision_bits(unsigned bits);
unsigned precision_bits();

/// Restores the previous precision on scope exit.
class PrecisionScope {
public:
    explicit PrecisionScope(unsigned bits);
    ~PrecisionScope();
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    unsigned saved_;
};

Real to_real(const Rational& x);
Real real_pi();
/// p^e for real e, computed as exp(e ln p).
Real real_pow(std::int64_t p, const Real& e);
/// Decimal rendering with enough digits for the current precision.
std::string to_string(const Real& x);
Real parse_real(const std::string& text);

struct Complex {
    Real re{0};
    Real im{0};

    Complex() = default;
    Complex(Real r) : re(std::move(r)), im(0) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

    Complex& operator+=(const Complex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Complex& operator-=(const Complex& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Complex& operator*=(const Complex& o) {
        Real r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    Complex& operator*=(const Real& s) {
        re *= s;
        im *= s;
        return *this;
    }
    friend Complex operator+(Complex a, const Complex& b) { return a += b; }
    friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
    friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
    friend Complex operator*(Complex a, const Real& s) { return a *= s; }
    friend Complex operator*(const Real& s, Complex a) { return a *= s; }
    Complex operator-() const { return Complex(-re, -im); }
    Complex conj() const { return Complex(re, -im); }
    Real norm2() const { return re * re + im * im; }
    Real abs() const { return sqrt(norm2()); }
    friend Complex operator/(const Complex& a, const Complex& b) {
        const Real d = b.norm2();
        return Complex((a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d);
    }
};

/// e^{2 pi i k / m}
Complex unit_root(const Integer& k, const Integer& m);

}  // namespace padic
