#include "padic/riesz.hpp"

namespace padic {

namespace {

QPoly binomial(const Rational& c0, const Rational& c1, std::int64_t e1) {
    QPoly q(c0);
    q.add(e1, c1);
    return q;
}

// the rational poles of a canonical form, found among t = +-p^k for small k
std::vector<Rational> rational_poles(const LaurentRational& f) {
    std::vector<Rational> out;
    const Prime p = f.prime();
    for (std::int64_t k = -12; k <= 12; ++k)
        for (int sign : {1, -1}) {
            const Rational t = sign * power_of(p, k);
            Rational d = 0;
            for (const auto& [e, c] : f.den().coeffs()) d += c * int_power(t, e);
            if (d == 0) out.push_back(t);
        }
    return out;
}

}  // namespace

LaurentRational gamma_p(Prime p, int n) {
    return LaurentRational(p, binomial(Rational(1), -power_of(p, -n), -1), binomial(Rational(1), Rational(-1), 1));
}

SymbolicPairing norm_power_pairing(const TestFunction& phi) {
    const auto h = HomogeneousSymbol::norm(phi.prime(), phi.dim());
    LaurentRational v = symbolic_pairing(radial_pieces(phi, h), h);
    auto poles = rational_poles(v);
    return SymbolicPairing{std::move(v), std::move(poles), "<||x||^s, phi>"};
}

LaurentRational norm_power_pairing_three_term(const TestFunction& phi) {
    const Prime p = phi.prime();
    const int n = phi.dim();
    const auto h = HomogeneousSymbol::norm(p, n);
    const auto chi0 = TestFunction::chi(p, n, 0);
    const CycScalar at0 = phi(Point::zero(n));

    LaurentRational total =
        LaurentRational(p, to_cyclotomic(QPoly(1 - power_of(p, -n))), binomial(Rational(1), -power_of(p, -n), 1)) *
        at0;
    const RadialPieces outer = radial_pieces(phi - phi * chi0, h);
    const RadialPieces inner = radial_pieces((phi - chi0 * at0) * chi0, h);
    if (!outer.origin.empty() || !inner.origin.empty()) throw Error("three-term split left a piece at the origin");
    CPoly shells;
    for (const auto& [v, m] : outer.shells) shells.add(v.first, m);
    for (const auto& [v, m] : inner.shells) shells.add(v.first, m);
    total += LaurentRational(p, shells, QPoly(Rational(1)));
    return total;
}

SymbolicPairing riesz_pairing(const TestFunction& phi) {
    const Prime p = phi.prime();
    const int n = phi.dim();
    // ||x||^{s-n} = t^{v} p^{n v}: the norm pairing at t -> p^n t
    LaurentRational v = norm_power_pairing(phi).value.substitute(power_of(p, n), 1) / gamma_p(p, n);
    auto poles = rational_poles(v);
    return SymbolicPairing{std::move(v), std::move(poles), "<R_s, phi>"};
}

Complex riesz_pairing_numeric(const TestFunction& phi, const Real& s) {
    if (s <= 0) throw DomainError("direct Riesz integral needs s > 0");
    const std::int64_t p = phi.prime();
    const int n = phi.dim();
    const auto h = HomogeneousSymbol::norm(phi.prime(), n);
    const RadialPieces pieces = radial_pieces(phi, h);
    const Real pr(p);
    // ||x||^{s-n} on the shell v_h = v is p^{-(s-n) v}
    auto weight = [&](std::int64_t v, std::int64_t) { return Complex(pow(pr, -(s - n) * v)); };
    const Real eps = pow(Real(2), -static_cast<long>(precision_bits()) - 8);
    auto ball = [&](std::int64_t sc) {
        Real acc = 0;
        const Real shell_measure = 1 - pow(pr, -n);
        for (std::int64_t j = sc;; ++j) {
            const Real term = pow(pr, -(s - n) * j) * pow(pr, -Real(j * n)) * shell_measure;
            acc += term;
            if (abs(term) < eps * abs(acc)) break;
        }
        return Complex(acc);
    };
    const Complex raw = weighted_pairing(pieces, weight, ball);
    const Real gamma = (1 - pow(pr, s - n)) / (1 - pow(pr, -s));
    return raw * (Real(1) / gamma);
}

IdentityReport elliptic_equals_taibleson(const HomogeneousSymbol& f, const TestFunction& phi) {
    if (!is_in_w(phi)) throw InputError("test function is not a finite combination of the chi_r");
    const Prime p = f.prime();
    const int n = f.dim();
    const int d = f.degree();
    LaurentRational lhs = zeta_pairing(f, phi);
    // (1 - t^{-d}) L(t) / ((1 - p^{-n})(1 - p^{-n} t^d))
    const LaurentRational factor =
        LaurentRational(p, binomial(Rational(1), Rational(-1), -d) * f.sphere_polynomial(),
                        binomial(Rational(1), -power_of(p, -n), d) * QPoly(1 - power_of(p, -n)));
    // R_{ds+n}: t' = p^{-ds-n} = p^{-n} t^d
    LaurentRational rhs = factor * riesz_pairing(phi).value.substitute(power_of(p, -n), d);
    const bool eq = lhs == rhs;
    return IdentityReport{std::move(lhs), std::move(rhs), eq};
}

}  // namespace padic
