#include "padic/operators.hpp"

#include <algorithm>
#include <sstream>

namespace padic {

namespace {

Real pw(std::int64_t p, std::int64_t k) { return pow(Real(p), k); }

NumericValue finish(const Complex& v, std::size_t pieces) {
    NumericValue out;
    out.value = v;
    out.precision_bits = precision_bits();
    const Real scale = std::max(Real(1), v.abs());
    out.error_estimate = Real(pieces + 8) * scale * pow(Real(2), -static_cast<int>(precision_bits()));
    return out;
}

// sum_i c_i k^{m_i} q_i^k with m_i in {0, 1}; half-infinite sums in closed form.
struct ShellSeries {
    struct Part {
        Real c;
        int k_power;
        Real q;
    };
    std::vector<Part> parts;

    Real at(std::int64_t k) const {
        Real s = 0;
        for (const auto& t : parts) s += t.c * (t.k_power ? Real(k) : Real(1)) * pow(t.q, k);
        return s;
    }

    ShellSeries scaled(const Real& mu) const {
        ShellSeries out = *this;
        for (auto& t : out.parts) t.q *= mu;
        return out;
    }

    Real sum_from(std::int64_t k0) const {
        Real s = 0;
        for (const auto& t : parts) {
            if (t.c == 0) continue;
            if (abs(t.q) >= 1) throw DivergenceError("shell series diverges at small radii");
            const Real head = t.c * pow(t.q, k0);
            if (t.k_power == 0)
                s += head / (1 - t.q);
            else
                s += head * (Real(k0) - Real(k0 - 1) * t.q) / ((1 - t.q) * (1 - t.q));
        }
        return s;
    }

    Real sum_below(std::int64_t m) const {
        Real s = 0;
        const std::int64_t u0 = 1 - m;
        for (const auto& t : parts) {
            if (t.c == 0) continue;
            const Real big_q = 1 / t.q;
            if (abs(big_q) >= 1) throw DivergenceError("shell series diverges at large radii");
            const Real head = t.c * pow(big_q, u0);
            if (t.k_power == 0)
                s += head / (1 - big_q);
            else
                s -= head * (Real(u0) - Real(u0 - 1) * big_q) / ((1 - big_q) * (1 - big_q));
        }
        return s;
    }
};

// E_k, the kernel on ||x|| = p^{-k}.
ShellSeries profile(const Kernel& e) {
    ShellSeries s;
    if (e.form == KernelForm::power)
        s.parts.push_back({e.coeff, 0, real_pow(e.p, -e.exponent)});
    else
        s.parts.push_back({-e.coeff * log(Real(static_cast<std::int64_t>(e.p))), 1, Real(1)});
    if (e.additive != 0) s.parts.push_back({e.additive, 0, Real(1)});
    return s;
}

// int over (p^r Z_p)^n of E.
Real ball_integral(const Kernel& e, std::int64_t r) {
    const Real shrink = pw(e.p, -e.n);
    return (1 - shrink) * profile(e).scaled(shrink).sum_from(r);
}

// int over (p^r Z_p)^n of E(z) Psi(b . z) dz with ||b|| = p^beta, beta > r.
Real twisted_ball_integral(const Kernel& e, std::int64_t beta) {
    const Real shrink = pw(e.p, -e.n);
    const ShellSeries s = profile(e);
    return -s.at(beta - 1) * pw(e.p, -beta * e.n) + (1 - shrink) * s.scaled(shrink).sum_from(beta);
}

// int |h|^a ||xi||^b phi(xi) dxi from the radial pieces of phi.
Complex symbol_pairing(const RadialPieces& pieces, const HomogeneousSymbol& h, const Real& a, const Real& b) {
    const std::int64_t p = h.prime();
    const int n = h.dim();
    const Real g = n + a * h.degree() + b;
    if (!pieces.origin.empty() && g <= 0) throw DivergenceError("symbol is not integrable at 0 against this function");
    const Real unit = pieces.origin.empty() ? Real(0) : h.sphere_sum(real_pow(p, -a)) / (1 - real_pow(p, -g));
    return weighted_pairing(
        pieces, [&](std::int64_t v, std::int64_t w) { return Complex(real_pow(p, -(a * v + b * w))); },
        [&](std::int64_t s) { return Complex(real_pow(p, -g * s) * unit); });
}

TestFunction single(const TestFunction& like, const Term& t) {
    TestFunction out(like.prime(), like.dim());
    out.add_term(t);
    return out;
}

Complex psi_value(const Point& b, const Point& x, Prime p) { return psi(dot(b, x), p).to_complex(); }

// D_T^alpha of y -> int_{a + p^r Z_p^n} E(y - z) dz at x.
Real taibleson_of_ball_potential(const Real& alpha, const Kernel& e, const Ball& ball, const Point& x) {
    const std::int64_t p = e.p;
    const int n = e.n;
    const std::int64_t r = ball.scale();
    const Real shrink = pw(p, -n);
    const Real c = (1 - real_pow(p, alpha)) / (1 - real_pow(p, -alpha - n));
    const ShellSeries s = profile(e);
    const Real j0 = ball_integral(e, r);
    const Real outside = pw(p, -r * n);
    const Point w = x - ball.center();

    Real g_w = j0;
    Real near = 0;
    std::int64_t m = r;
    if (!w.is_zero()) {
        const std::int64_t kw = valuation(w, e.p).value();
        if (kw < r) {
            g_w = outside * s.at(kw);
            m = kw;
            Real inner = 0;
            for (std::int64_t j = kw + 1; j < r; ++j) inner += pw(p, -j * n) * (outside * s.at(j) - g_w);
            near = real_pow(p, Real(kw) * (alpha + n)) * ((1 - shrink) * inner + outside * (j0 - g_w));
        }
    }
    const Real far = (1 - shrink) * (outside * s.scaled(real_pow(p, alpha)).sum_below(m) -
                                     g_w * real_pow(p, Real(m - 1) * alpha) / (1 - real_pow(p, -alpha)));
    return c * (near + far);
}

}  // namespace

Multiplier Multiplier::taibleson(Prime p, int n, const Real& alpha, int sign) {
    if (alpha <= 0) throw InputError("alpha must be positive");
    if (sign != 1 && sign != -1) throw InputError("sign must be +1 or -1");
    return Multiplier{HomogeneousSymbol::norm(p, n), alpha, sign};
}

Multiplier Multiplier::elliptic(const HomogeneousSymbol& f, const Real& alpha, int sign) {
    if (alpha <= 0) throw InputError("alpha must be positive");
    if (sign != 1 && sign != -1) throw InputError("sign must be +1 or -1");
    return Multiplier{f, alpha, sign};
}

NumericValue multiplier_apply(const Multiplier& m, const TestFunction& phi, const Point& x) {
    if (phi.prime() != m.symbol.prime() || phi.dim() != m.symbol.dim() || x.dim() != phi.dim())
        throw InputError("multiplier, function and point disagree on p or n");
    const RadialPieces pieces = radial_pieces(fourier(phi).twisted(x), m.symbol);
    return finish(symbol_pairing(pieces, m.symbol, m.exponent(), Real(0)), pieces.shells.size() + pieces.origin.size());
}

NumericValue taibleson_direct(const Real& alpha, const TestFunction& phi, const Point& x) {
    if (alpha <= 0) throw InputError("alpha must be positive");
    if (x.dim() != phi.dim()) throw InputError("point dimension mismatch");
    const Prime p = phi.prime();
    const int n = phi.dim();
    const TestFunction g = phi.translated_reflected(x).canonical();
    if (g.terms().empty()) return finish(Complex(), 0);
    const CycScalar at_x = phi(x);
    // phi(x - y) - phi(x) on a polydisc holding the support, then the constant tail outside it
    const std::int64_t big = g.support_bound_exponent();
    const TestFunction diff = g - TestFunction::chi(p, n, -big) * at_x;
    const RadialPieces pieces = radial_pieces(diff, HomogeneousSymbol::norm(p, n));
    if (!pieces.origin.empty()) throw Error("hypersingular integrand does not vanish near 0");
    const Complex inner = symbol_pairing(pieces, HomogeneousSymbol::norm(p, n), -(alpha + n), Real(0));
    const Real tail = (1 - pw(p, -n)) * real_pow(p, -Real(big + 1) * alpha) / (1 - real_pow(p, -alpha));
    const Real c = (1 - real_pow(p, alpha)) / (1 - real_pow(p, -alpha - n));
    return finish(c * (inner - at_x.to_complex() * tail), pieces.shells.size() + 2);
}

Real Kernel::shell_value(std::int64_t k) const { return profile(*this).at(k); }

Real Kernel::operator()(const Point& x) const {
    if (x.is_zero()) throw DomainError("kernel evaluated at 0");
    return shell_value(valuation(x, p).value());
}

Real Kernel::fourier_factor() const {
    const std::int64_t pv = p;
    if (form == KernelForm::log) return -coeff * log(Real(pv)) / (1 - pw(pv, -n));
    const Real beta = exponent + n;
    return coeff * (1 - real_pow(pv, beta - n)) / (1 - real_pow(pv, -beta));
}

Real Kernel::fourier_exponent() const { return form == KernelForm::log ? Real(n) : exponent + n; }

std::string Kernel::describe() const {
    std::ostringstream os;
    os << to_string(coeff);
    if (form == KernelForm::power)
        os << " * ||x||^" << to_string(exponent);
    else
        os << " * ln ||x||";
    if (additive != 0) os << " + " << to_string(additive);
    if (domain == KernelDomain::w_only) os << " (on W)";
    return os.str();
}

Kernel taibleson_kernel(Prime p, int n, const Real& alpha, const Real& additive) {
    if (alpha <= 0) throw InputError("alpha must be positive");
    Kernel k;
    k.p = p;
    k.n = n;
    k.additive = additive;
    if (alpha == n) {
        k.form = KernelForm::log;
        k.coeff = (1 - pw(p, n)) / (pw(p, n) * log(Real(static_cast<std::int64_t>(p))));
    } else {
        k.coeff = (1 - real_pow(p, -alpha)) / (1 - real_pow(p, alpha - n));
        k.exponent = alpha - n;
    }
    return k;
}

Kernel elliptic_kernel(const HomogeneousSymbol& f, const Real& alpha, const Real& additive) {
    if (alpha <= 0) throw InputError("alpha must be positive");
    const Prime p = f.prime();
    const int n = f.dim();
    const int d = f.degree();
    const Real sphere_mass = 1 - pw(p, -n);
    Kernel k;
    k.p = p;
    k.n = n;
    k.additive = additive;
    k.domain = KernelDomain::w_only;
    const Real l_at = f.sphere_sum(real_pow(p, alpha));
    if (d * alpha == n) {
        k.form = KernelForm::log;
        k.coeff = l_at * (1 - pw(p, n)) / (sphere_mass * pw(p, n) * log(Real(static_cast<std::int64_t>(p))));
    } else {
        k.coeff = l_at * (1 - real_pow(p, -d * alpha)) / (sphere_mass * (1 - real_pow(p, d * alpha - n)));
        k.exponent = d * alpha - n;
    }
    return k;
}

Real kernel_fourier_direct(const Kernel& e, const Point& xi) {
    if (xi.is_zero()) throw DomainError("kernel transform requested at 0");
    return twisted_ball_integral(e, -valuation(xi, e.p).value());
}

NumericValue convolve_kernel(const Kernel& e, const TestFunction& v, const Point& x) {
    if (v.prime() != e.p || v.dim() != e.n || x.dim() != e.n) throw InputError("kernel, function and point disagree on p or n");
    Complex sum;
    const TestFunction canon = v.canonical();
    for (const auto& t : canon.terms()) {
        const std::int64_t r = t.ball.scale();
        if (!t.ball.contains(x)) {
            if (t.has_trivial_twist()) sum += t.coeff.to_complex() * (pw(e.p, -r * e.n) * e(x - t.ball.center()));
        } else if (t.has_trivial_twist()) {
            sum += t.coeff.to_complex() * ball_integral(e, r);
        } else {
            const std::int64_t beta = -valuation(t.twist, e.p).value();
            sum += t.coeff.to_complex() * psi_value(t.twist, x, e.p) * twisted_ball_integral(e, beta);
        }
    }
    return finish(sum, canon.terms().size());
}

NumericValue taibleson_of_potential(const Real& alpha, const Kernel& e, const TestFunction& v, const Point& x) {
    if (v.prime() != e.p || v.dim() != e.n || x.dim() != e.n) throw InputError("kernel, function and point disagree on p or n");
    Complex sum;
    const TestFunction canon = v.canonical();
    for (const auto& t : canon.terms()) {
        if (t.has_trivial_twist()) {
            sum += t.coeff.to_complex() * taibleson_of_ball_potential(alpha, e, t.ball, x);
        } else {
            // on the ball, E * term is the term times a constant
            const std::int64_t beta = -valuation(t.twist, e.p).value();
            sum += taibleson_direct(alpha, single(canon, t), x).value * twisted_ball_integral(e, beta);
        }
    }
    return finish(sum, 4 * canon.terms().size());
}

NumericValue elliptic_of_potential(const HomogeneousSymbol& f, const Real& alpha, const Kernel& e,
                                   const TestFunction& v, const Point& x) {
    if (v.prime() != f.prime() || v.dim() != f.dim() || e.p != f.prime() || e.n != f.dim())
        throw InputError("symbol, kernel and function disagree on p or n");
    const RadialPieces pieces = radial_pieces(fourier(v).twisted(x), f);
    const Complex value = symbol_pairing(pieces, f, alpha, -e.fourier_exponent()) * e.fourier_factor();
    return finish(value, pieces.shells.size() + pieces.origin.size());
}

SolutionEvaluator::SolutionEvaluator(HomogeneousSymbol f, const Real& alpha, const TestFunction& v)
    : f_(std::move(f)), alpha_(alpha), v_(v.canonical()), w_(v.prime(), v.dim()), l_(v.prime(), v.dim()) {
    if (v.prime() != f_.prime() || v.dim() != f_.dim()) throw InputError("symbol and right-hand side disagree on p or n");
    const int n = f_.dim();
    const int d = f_.degree();
    if (alpha_ <= 0 || d * alpha_ >= n) throw InputError("alpha must satisfy 0 < alpha < n/d");
    if (2 * d * alpha_ >= n) warnings_.push_back("alpha >= n/(2d): outside the range 0 < alpha < n/(2d) where the solution is known to exist");
    if (!v_.terms().empty()) {
        auto parts = decompose_lw(v_);
        w_ = std::move(parts.w_part);
        l_ = std::move(parts.l_part);
    }
    kernel_ = elliptic_kernel(f_, alpha_);
}

NumericValue SolutionEvaluator::u_w_kernel(const Point& x) const { return convolve_kernel(kernel_, w_, x); }

NumericValue SolutionEvaluator::u_w_spectral(const Point& x) const {
    return multiplier_apply(Multiplier::elliptic(f_, alpha_, -1), w_, x);
}

NumericValue SolutionEvaluator::u_l(const Point& x) const {
    return multiplier_apply(Multiplier::elliptic(f_, alpha_, -1), l_, x);
}

NumericValue SolutionEvaluator::u(const Point& x) const {
    const auto a = u_w_kernel(x);
    const auto b = u_l(x);
    return NumericValue{a.value + b.value, a.error_estimate + b.error_estimate, a.precision_bits};
}

NumericValue SolutionEvaluator::apply(const Point& x) const {
    const auto a = elliptic_of_potential(f_, alpha_, kernel_, w_, x);
    // |f|^alpha |f|^{-alpha} F v_L, paired shell by shell
    const RadialPieces pieces = radial_pieces(fourier(l_).twisted(x), f_);
    const Complex b = symbol_pairing(pieces, f_, alpha_ - alpha_, Real(0));
    return NumericValue{a.value + b, a.error_estimate + finish(b, pieces.shells.size()).error_estimate, a.precision_bits};
}

NumericValue SolutionEvaluator::residual(const Point& x) const {
    auto out = apply(x);
    out.value -= v_(x).to_complex();
    return out;
}

SolutionEvaluator solve(const HomogeneousSymbol& f, const Real& alpha, const TestFunction& v) {
    return SolutionEvaluator(f, alpha, v);
}

TransformBoundReport transform_bound_check(const HomogeneousSymbol& f, const Real& alpha, const TestFunction& phi,
                            const std::vector<Point>& samples) {
    if (!is_in_w(phi)) throw InputError("transform bound check needs a function in W");
    const int d = f.degree();
    if (d * alpha == f.dim()) throw InputError("transform bound check needs alpha != n/d");
    const Kernel e = elliptic_kernel(f, alpha);
    const std::int64_t m_max = f.is_norm() ? 0 : f.covering().m_max;
    TransformBoundReport rep;
    rep.bound = real_pow(f.prime(), alpha * m_max);
    rep.max_ratio = 0;
    const TestFunction transform = fourier(phi);
    for (const auto& xi : samples) {
        if (xi.is_zero()) continue;
        const Complex fphi = transform(xi).to_complex();
        if (fphi.abs() == 0) continue;
        const Real lhs = (fphi * kernel_fourier_direct(e, xi)).abs();
        const Real rhs = real_pow(f.prime(), Real(valuation(xi, f.prime()).value()) * d * alpha) * fphi.abs();
        rep.max_ratio = std::max(rep.max_ratio, Real(lhs / rhs));
        ++rep.samples_used;
    }
    rep.holds = rep.max_ratio <= rep.bound * (1 + pow(Real(2), -static_cast<int>(precision_bits()) + 16));
    return rep;
}

}  // namespace padic
