#include "padic/radial.hpp"

namespace padic {

HomogeneousSymbol HomogeneousSymbol::norm(Prime p, int n) {
    if (n < 1) throw InputError("dimension must be at least 1");
    return HomogeneousSymbol(p, n, 1);
}

HomogeneousSymbol HomogeneousSymbol::elliptic(const IntPolynomial& f, SphereCovering covering) {
    if (f.dim() != covering.n || f.degree() != covering.degree) throw InputError("covering does not belong to the polynomial");
    HomogeneousSymbol h(covering.p, covering.n, covering.degree);
    h.f_ = std::make_shared<const IntPolynomial>(f);
    h.cov_ = std::make_shared<const SphereCovering>(std::move(covering));
    return h;
}

const IntPolynomial& HomogeneousSymbol::polynomial() const {
    if (!f_) throw Error("the norm symbol has no polynomial");
    return *f_;
}

const SphereCovering& HomogeneousSymbol::covering() const {
    if (!cov_) throw Error("the norm symbol has no covering");
    return *cov_;
}

std::optional<std::int64_t> HomogeneousSymbol::valuation_on(const Ball& b) const {
    if (b.contains_origin()) throw Error("symbol valuation requested on a ball containing 0");
    const std::int64_t e = valuation(b.center(), p_).value();
    if (!f_) return e;
    const std::int64_t depth = b.scale() - e;
    if (depth > 1'000'000) throw Error("ball too deep for covering lookup");
    const Rational unscale = power_of(p_, -e);
    std::vector<Integer> residue;
    for (const auto& c : b.center().coords) residue.push_back(numerator(reduce_mod(c * unscale, depth, p_)));
    const auto m = cov_->value_exponent(residue, static_cast<int>(depth));
    if (!m) return std::nullopt;
    return d_ * e + *m;
}

std::int64_t HomogeneousSymbol::valuation_at(const Point& x) const {
    if (x.is_zero()) throw DomainError("symbol valuation at 0");
    if (!f_) return valuation(x, p_).value();
    return valuation((*f_)(x), p_).value();
}

QPoly HomogeneousSymbol::sphere_polynomial() const {
    if (!f_) return QPoly(1 - power_of(p_, -n_));
    return padic::sphere_polynomial(*cov_);
}

LaurentRational HomogeneousSymbol::unit_zeta() const {
    QPoly den(Rational(1));
    den.add(d_, -power_of(p_, -n_));
    return LaurentRational(p_, sphere_polynomial(), den);
}

Real HomogeneousSymbol::sphere_sum(const Real& q) const {
    Real s = 0;
    const QPoly poly = sphere_polynomial();
    for (const auto& [e, c] : poly.coeffs()) s += to_real(c) * pow(q, e);
    return s;
}

CycScalar RadialPieces::total_integral(Prime p, int n) const {
    CycScalar s;
    for (const auto& [v, m] : shells) s += m;
    for (const auto& [sc, c] : origin) s += c * power_of(p, -sc * n);
    return s;
}

namespace {

CycScalar content_integral(const BallContent& c) {
    CycScalar s;
    for (const auto& t : c.terms)
        if (t.has_trivial_twist()) s += t.coeff * c.ball.measure();
    return s;
}

void collect(const BallContent& content, const HomogeneousSymbol& h, RadialPieces& out) {
    if (content.ball.contains_origin()) {
        if (content.terms.size() == 1 && content.terms.front().has_trivial_twist()) {
            out.origin[content.ball.scale()] += content.terms.front().coeff;
            return;
        }
    } else if (const auto v = h.valuation_on(content.ball)) {
        const CycScalar mass = content_integral(content);
        if (!mass.is_zero()) out.shells[{*v, valuation(content.ball.center(), h.prime()).value()}] += mass;
        return;
    }
    for (const auto& child : split_content(content)) collect(child, h, out);
}

}  // namespace

RadialPieces radial_pieces(const TestFunction& phi, const HomogeneousSymbol& h) {
    if (phi.prime() != h.prime() || phi.dim() != h.dim()) throw InputError("test function and symbol disagree on p or n");
    RadialPieces out;
    for (const auto& g : group_by_ball(phi.canonical())) collect(g, h, out);
    for (auto it = out.shells.begin(); it != out.shells.end();) it = it->second.is_zero() ? out.shells.erase(it) : std::next(it);
    for (auto it = out.origin.begin(); it != out.origin.end();) it = it->second.is_zero() ? out.origin.erase(it) : std::next(it);
    return out;
}

LaurentRational symbolic_pairing(const RadialPieces& pieces, const HomogeneousSymbol& h) {
    const Prime p = h.prime();
    CPoly shells;
    for (const auto& [v, m] : pieces.shells) shells.add(v.first, m);
    LaurentRational total(p, shells, QPoly(Rational(1)));
    if (!pieces.origin.empty()) {
        CPoly near;
        for (const auto& [s, c] : pieces.origin) near.add(h.degree() * s, c * power_of(p, -s * h.dim()));
        total += LaurentRational(p, near, QPoly(Rational(1))) * h.unit_zeta();
    }
    return total;
}

Complex power_pairing(const RadialPieces& pieces, const HomogeneousSymbol& h, const Real& a) {
    const std::int64_t p = h.prime();
    const int n = h.dim();
    const int d = h.degree();
    const Real q = pow(Real(p), -a);
    Complex sum;
    for (const auto& [v, m] : pieces.shells) sum += m.to_complex() * pow(q, v.first);
    if (!pieces.origin.empty()) {
        const Real ratio = pow(Real(p), -n) * pow(q, d);
        if (ratio >= 1) throw DivergenceError("pairing with |h|^a diverges at 0 (n + a d <= 0)");
        const Real unit = h.sphere_sum(q) / (1 - ratio);
        for (const auto& [s, c] : pieces.origin)
            sum += c.to_complex() * (to_real(power_of(h.prime(), -s * n)) * pow(q, d * s) * unit);
    }
    return sum;
}

Complex weighted_pairing(const RadialPieces& pieces,
                         const std::function<Complex(std::int64_t, std::int64_t)>& weight,
                         const std::function<Complex(std::int64_t)>& ball_integral) {
    Complex sum;
    for (const auto& [v, m] : pieces.shells) sum += m.to_complex() * weight(v.first, v.second);
    for (const auto& [s, c] : pieces.origin) sum += c.to_complex() * ball_integral(s);
    return sum;
}

LaurentRational zeta_pairing(const HomogeneousSymbol& f, const TestFunction& phi) {
    return symbolic_pairing(radial_pieces(phi, f), f);
}

}  // namespace padic
