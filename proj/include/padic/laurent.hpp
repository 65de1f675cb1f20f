#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "padic/cyclotomic.hpp"
#include "padic/numeric.hpp"
#include "padic/rational.hpp"

namespace padic {

/// Finite sum of c_e t^e, e in Z. K is Rational or CycScalar.
template <class K>
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(const K& c) { add(0, c); }
    static LaurentPoly monomial(const K& c, std::int64_t e) {
        LaurentPoly r;
        r.add(e, c);
        return r;
    }

    const std::map<std::int64_t, K>& coeffs() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }
    std::int64_t min_exponent() const { return c_.begin()->first; }
    std::int64_t max_exponent() const { return c_.rbegin()->first; }
    K coeff(std::int64_t e) const {
        auto it = c_.find(e);
        return it == c_.end() ? K{} : it->second;
    }

    void add(std::int64_t e, const K& c) {
        if (c == K{}) return;
        auto [it, fresh] = c_.try_emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second == K{}) c_.erase(it);
        }
    }

    LaurentPoly shifted(std::int64_t k) const {
        LaurentPoly r;
        for (const auto& [e, c] : c_) r.c_.emplace(e + k, c);
        return r;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.c_) add(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.c_) add(e, -c);
        return *this;
    }
    template <class S>
    LaurentPoly& scale(const S& s) {
        LaurentPoly r;
        for (const auto& [e, c] : c_) r.add(e, c * s);
        return *this = std::move(r);
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, ca] : a.c_)
            for (const auto& [eb, cb] : b.c_) r.add(ea + eb, ca * cb);
        return r;
    }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.c_ == b.c_; }

private:
    std::map<std::int64_t, K> c_;
};

using QPoly = LaurentPoly<Rational>;
using CPoly = LaurentPoly<CycScalar>;

CPoly to_cyclotomic(const QPoly& q);

/// N(t)/D(t) with N over Q(zeta_{p^K}) and D over Q, in canonical form:
/// D is an ordinary polynomial with D(0) != 0 and leading coefficient 1, and
/// gcd(D, components of N) = 1 over Q[t]. Canonical forms are unique.
class LaurentRational {
public:
    explicit LaurentRational(Prime p);
    LaurentRational(Prime p, CPoly num, QPoly den);
    LaurentRational(Prime p, const QPoly& num, const QPoly& den);
    static LaurentRational constant(Prime p, const CycScalar& c);
    static LaurentRational monomial(Prime p, const CycScalar& c, std::int64_t e);

    Prime prime() const noexcept { return p_; }
    const CPoly& num() const noexcept { return num_; }
    const QPoly& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool has_rational_coefficients() const;
    /// True when the denominator is constant (a Laurent polynomial).
    bool is_laurent_polynomial() const { return den_.max_exponent() == 0; }

    /// t -> c t^k
    LaurentRational substitute(const Rational& c, std::int64_t k) const;

    /// Exact value at rational t; throws DomainError at a pole.
    CycScalar evaluate(const Rational& t) const;
    /// Numeric value at complex t; throws DomainError when the denominator vanishes.
    Complex evaluate(const Complex& t) const;
    Complex evaluate(const Real& t) const { return evaluate(Complex{t, Real(0)}); }
    /// Value of the denominator (numerically) at t.
    Complex denominator_at(const Complex& t) const;
    Complex numerator_at(const Complex& t) const;

    LaurentRational& operator+=(const LaurentRational& o);
    LaurentRational& operator-=(const LaurentRational& o);
    LaurentRational& operator*=(const LaurentRational& o);
    LaurentRational& operator*=(const CycScalar& c);
    /// Division requires a divisor with rational coefficients.
    LaurentRational& operator/=(const LaurentRational& o);
    LaurentRational operator-() const;
    friend LaurentRational operator+(LaurentRational a, const LaurentRational& b) { return a += b; }
    friend LaurentRational operator-(LaurentRational a, const LaurentRational& b) { return a -= b; }
    friend LaurentRational operator*(LaurentRational a, const LaurentRational& b) { return a *= b; }
    friend LaurentRational operator*(LaurentRational a, const CycScalar& c) { return a *= c; }
    friend LaurentRational operator*(const CycScalar& c, LaurentRational a) { return a *= c; }
    friend LaurentRational operator/(LaurentRational a, const LaurentRational& b) { return a /= b; }
    friend bool operator==(const LaurentRational& a, const LaurentRational& b);

    std::string to_string() const;

private:
    void canonicalize();

    Prime p_;
    CPoly num_;
    QPoly den_;
};

/// Dense polynomial helpers over Q (index = exponent).
using DensePoly = std::vector<Rational>;
DensePoly poly_gcd(DensePoly a, DensePoly b);
/// Exact division; throws Error on a nonzero remainder.
DensePoly poly_divide_exact(const DensePoly& a, const DensePoly& b);

}  // namespace padic
