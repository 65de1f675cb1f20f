#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>

#include "padic/schwartz.hpp"
#include "padic/zeta.hpp"

namespace padic {

/// A symbol h on Q_p^n \ {0} with v_h(p^k x) = d k + v_h(x): either the sup norm
/// (d = 1, v_h = min_i v(x_i)) or |f| for an elliptic form f of degree d.
class HomogeneousSymbol {
public:
    static HomogeneousSymbol norm(Prime p, int n);
    static HomogeneousSymbol elliptic(const IntPolynomial& f, SphereCovering covering);

    Prime prime() const noexcept { return p_; }
    int dim() const noexcept { return n_; }
    int degree() const noexcept { return d_; }
    bool is_norm() const noexcept { return !f_; }
    const IntPolynomial& polynomial() const;
    const SphereCovering& covering() const;

    /// v_h on a ball that avoids 0, if it is constant there.
    std::optional<std::int64_t> valuation_on(const Ball& b) const;
    /// v_h(x) for x != 0.
    std::int64_t valuation_at(const Point& x) const;
    /// int over the unit sphere of t^{v_h}.
    QPoly sphere_polynomial() const;
    /// int over Z_p^n of t^{v_h}.
    LaurentRational unit_zeta() const;
    /// Numeric L(q) = int over the unit sphere of q^{v_h}.
    Real sphere_sum(const Real& q) const;

private:
    HomogeneousSymbol(Prime p, int n, int d) : p_(p), n_(n), d_(d) {}

    Prime p_;
    int n_;
    int d_;
    std::shared_ptr<const IntPolynomial> f_;
    std::shared_ptr<const SphereCovering> cov_;
};

/// A test function split against a homogeneous symbol: away from a neighbourhood
/// of 0 it contributes `shells[{v, w}]` = the integral of phi over the part where
/// v_h = v and v(x) = w; near 0 it is the constant c on (p^s Z_p)^n for each
/// entry origin[s] = c.
struct RadialPieces {
    std::map<std::pair<std::int64_t, std::int64_t>, CycScalar> shells;
    std::map<std::int64_t, CycScalar> origin;

    CycScalar total_integral(Prime p, int n) const;
};

RadialPieces radial_pieces(const TestFunction& phi, const HomogeneousSymbol& h);

/// int t^{v_h(x)} phi(x) dx as an exact rational function of t.
LaurentRational symbolic_pairing(const RadialPieces& pieces, const HomogeneousSymbol& h);

/// int p^{-a v_h(x)} phi(x) dx, i.e. the pairing with |h|^a, evaluated numerically.
/// Throws DivergenceError when a origin piece is present and n + a d <= 0.
Complex power_pairing(const RadialPieces& pieces, const HomogeneousSymbol& h, const Real& a);

/// int W(x) phi(x) dx for a weight depending only on (v_h(x), v(x)): `weight(v, w)` on
/// shells and `ball_integral(s)` = int over (p^s Z_p)^n of W.
Complex weighted_pairing(const RadialPieces& pieces,
                         const std::function<Complex(std::int64_t, std::int64_t)>& weight,
                         const std::function<Complex(std::int64_t)>& ball_integral);

/// Z_phi(s, f) = int |f(x)|^s phi(x) dx as a rational function of t = p^{-s}.
LaurentRational zeta_pairing(const HomogeneousSymbol& f, const TestFunction& phi);

}  // namespace padic
