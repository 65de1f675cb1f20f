#pragma once

#include <string>
#include <vector>

#include "padic/radial.hpp"

namespace padic {

/// A distribution paired with a test function, as a rational function of t = p^{-s}.
struct SymbolicPairing {
    LaurentRational value;
    /// t-values where the continuation has poles (rational representatives only).
    std::vector<Rational> excluded_points;
    std::string description;
};

/// Gamma_p^{(n)}(s) = (1 - p^{s-n}) / (1 - p^{-s}) = (1 - p^{-n} t^{-1}) / (1 - t).
LaurentRational gamma_p(Prime p, int n);

/// <||x||^s, phi>, continued meromorphically in s.
SymbolicPairing norm_power_pairing(const TestFunction& phi);

/// Independent route through the three-term continuation
/// phi(0)(1 - p^{-n})/(1 - p^{-s-n}) + int_{||x||>1} ||x||^s phi + int_{||x||<=1} ||x||^s (phi - phi(0)).
LaurentRational norm_power_pairing_three_term(const TestFunction& phi);

/// <R_s, phi> = <||x||^{s-n}, phi> / Gamma_p^{(n)}(s).
SymbolicPairing riesz_pairing(const TestFunction& phi);

/// Direct numeric value of int ||x||^{s-n} phi(x) dx / Gamma_p^{(n)}(s) for real s > 0,
/// summed shell by shell without using the rational closed form.
Complex riesz_pairing_numeric(const TestFunction& phi, const Real& s);

struct IdentityReport {
    LaurentRational lhs;
    LaurentRational rhs;
    bool equal;
};

/// On finite combinations of chi_r: <|f|^s, phi> versus
/// (1 - p^{ds}) L(p^{-s}) / ((1 - p^{-n})(1 - p^{-ds-n})) <R_{ds+n}, phi>.
/// Throws InputError when phi is not such a combination.
IdentityReport elliptic_equals_taibleson(const HomogeneousSymbol& f, const TestFunction& phi);

}  // namespace padic
