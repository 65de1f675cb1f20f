#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "padic/numeric.hpp"
#include "padic/rational.hpp"

namespace padic {

/// Exact element of the cyclotomic field Q(zeta_{p^K}).
///
/// Stored sparsely in the power basis zeta^i, 0 <= i < phi(p^K), reduced with
/// Phi_{p^K}(zeta) = sum_{j<p} zeta^{j p^{K-1}} = 0. The level K is always the
/// smallest one whose field contains the value, so equal values compare equal
/// term by term. Level 0 is Q and carries no prime.
class CycScalar {
public:
    using Term = std::pair<std::int64_t, Rational>;

    CycScalar() = default;
    CycScalar(const Rational& q);
    CycScalar(int q) : CycScalar(Rational(q)) {}

    /// zeta_{p^level}^exponent
    static CycScalar root_of_unity(Prime p, int level, const Integer& exponent);
    /// sum coeffs[i] zeta_{p^level}^i; coeffs.size() must be phi(p^level)
    static CycScalar from_basis(Prime p, int level, const std::vector<Rational>& coeffs);

    int level() const noexcept { return level_; }
    /// 0 for rational values.
    std::int64_t prime() const noexcept { return p_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_rational() const noexcept { return level_ == 0; }
    /// Throws unless is_rational().
    Rational rational_value() const;

    /// Dense coordinates in the power basis of level `level` (>= this->level()).
    std::vector<Rational> basis_coefficients(std::int64_t p, int level) const;

    CycScalar conj() const;
    Complex to_complex() const;

    CycScalar& operator+=(const CycScalar& o);
    CycScalar& operator-=(const CycScalar& o);
    CycScalar& operator*=(const CycScalar& o);
    CycScalar& operator*=(const Rational& q);
    CycScalar operator-() const;

    friend CycScalar operator+(CycScalar a, const CycScalar& b) { return a += b; }
    friend CycScalar operator-(CycScalar a, const CycScalar& b) { return a -= b; }
    friend CycScalar operator*(CycScalar a, const CycScalar& b) { return a *= b; }
    friend CycScalar operator*(CycScalar a, const Rational& q) { return a *= q; }
    friend CycScalar operator*(const Rational& q, CycScalar a) { return a *= q; }
    friend bool operator==(const CycScalar& a, const CycScalar& b) {
        return a.level_ == b.level_ && a.terms_ == b.terms_ && (a.level_ == 0 || a.p_ == b.p_);
    }

private:
    CycScalar(std::int64_t p, int level, std::vector<Term> terms);
    static std::int64_t order(std::int64_t p, int level);
    static std::int64_t totient(std::int64_t p, int level);
    /// Rewrites exponent-keyed accumulations (exponents in [0, p^K)) into reduced form.
    static std::vector<Term> reduce(std::int64_t p, int level, const std::vector<Term>& raw);
    void normalize_level();
    std::vector<Term> embedded_terms(int level) const;
    static std::int64_t common_prime(const CycScalar& a, const CycScalar& b);

    std::int64_t p_ = 0;
    int level_ = 0;
    std::vector<Term> terms_;
};

/// "q" for rationals, otherwise "c*z{p^K}^i + ..." in the power basis.
std::string to_string(const CycScalar& c);

/// The additive character Psi(x) = exp(2 pi i {x}_p), trivial exactly on Z_p.
CycScalar psi(const Rational& x, Prime p);

}  // namespace padic
