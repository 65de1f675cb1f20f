#include "padic/sobolev.hpp"

#include <algorithm>
#include <cmath>

namespace padic {

namespace {

Real pw(std::int64_t p, std::int64_t k) { return pow(Real(p), k); }

Real slack() { return 1 + pow(Real(2), -static_cast<int>(precision_bits()) + 24); }

// Number of shells after which p^{-k step} drops below the working precision.
std::int64_t shells_needed(std::int64_t p, const Real& step) {
    const Real bits = Real(precision_bits() + 24);
    return static_cast<std::int64_t>(ceil(bits / (step * log2(Real(p))))) + 1;
}

TestFunction spectrum_squared(const TestFunction& phi) {
    const TestFunction f = fourier(phi);
    return (f.conj() * f).canonical();
}

// max(1, ||xi||)^{2l} on ||xi|| = p^{-j}
Real h_weight(std::int64_t p, std::int64_t j, const Real& l) { return j < 0 ? real_pow(p, -2 * l * j) : Real(1); }

Real l1_content(const BallContent& c) {
    const bool flat = std::all_of(c.terms.begin(), c.terms.end(), [](const Term& t) { return t.has_trivial_twist(); });
    if (flat) {
        CycScalar s;
        for (const auto& t : c.terms) s += t.coeff;
        return s.to_complex().abs() * to_real(c.ball.measure());
    }
    Real sum = 0;
    for (const auto& child : split_content(c)) sum += l1_content(child);
    return sum;
}

}  // namespace

std::string to_string(NormKind k) {
    switch (k) {
        case NormKind::H: return "H";
        case NormKind::singular_H: return "singular_H";
        case NormKind::L1_fourier: return "L1_fourier";
    }
    return "?";
}

NormReport h_norm(const TestFunction& phi, const Real& l, NormKind kind) {
    if (l < 0) throw InputError("Sobolev index must be non-negative");
    const Prime p = phi.prime();
    const int n = phi.dim();
    NormReport rep;
    rep.kind = kind;
    rep.l = l;
    if (kind == NormKind::L1_fourier) {
        for (const auto& c : group_by_ball(fourier(phi).canonical())) rep.squared_norm += l1_content(c);
        return rep;
    }
    const RadialPieces pieces = radial_pieces(spectrum_squared(phi), HomogeneousSymbol::norm(p, n));
    std::map<std::int64_t, Real> shells;
    for (const auto& [key, m] : pieces.shells) {
        const std::int64_t j = key.first;
        const Real w = kind == NormKind::H ? h_weight(p, j, l) : real_pow(p, -2 * l * j);
        shells[j] += m.to_complex().re * w;
    }
    const Real ring = 1 - pw(p, -n);
    for (const auto& [s, c] : pieces.origin) {
        Real ball = 0;
        if (kind == NormKind::singular_H) {
            ball = real_pow(p, -Real(s) * (n + 2 * l)) * ring / (1 - real_pow(p, -n - 2 * l));
        } else {
            ball = s >= 0 ? pw(p, -s * n) : Real(1);
            for (std::int64_t j = s; j < 0; ++j) ball += pw(p, -j * n) * ring * h_weight(p, j, l);
        }
        rep.core_mass += c.to_complex().re * ball;
    }
    rep.squared_norm = rep.core_mass;
    for (const auto& [j, m] : shells) {
        rep.shell_breakdown.emplace_back(j, m);
        rep.squared_norm += m;
    }
    return rep;
}

NonCompactReport noncompact_example(Prime p, int n, const Real& beta, const Real& l) {
    if (beta <= n) throw InputError("the example needs beta > n");
    if (l < 0) throw InputError("Sobolev index must be non-negative");
    const Real ring = 1 - pw(p, -n);
    // F of the indicator of ||x|| <= p^j at ||xi|| = p^{-k}
    auto ball_hat = [&](std::int64_t j, std::int64_t k) { return k >= j ? pw(p, j * n) : Real(0); };
    auto transform = [&](std::int64_t first, std::int64_t k) {
        Real s = 0;
        for (std::int64_t j = first; j <= std::max(first, k + 1); ++j)
            s += real_pow(p, -beta * j) * (ball_hat(j, k) - ball_hat(j - 1, k));
        return s;
    };
    const std::int64_t top = shells_needed(p, Real(n));
    NonCompactReport rep;
    rep.beta = beta;
    rep.l = l;
    rep.computed = 0;
    rep.variant_computed = 0;
    rep.variant_unit_ball = 0;
    rep.transform_outside_unit_ball = 0;
    for (std::int64_t k = -3; k <= top; ++k) {
        const Real a = transform(1, k);
        const Real b = transform(0, k);
        if (k < 0) rep.transform_outside_unit_ball = std::max({rep.transform_outside_unit_ball, Real(abs(a))});
        const Real w = h_weight(p, k, l) * pw(p, -k * n) * ring;
        rep.computed += w * a * a;
        rep.variant_computed += w * b * b;
        if (k >= 0) rep.variant_unit_ball += w * b * b;
    }
    // reference integrand A - B q^k on ||xi|| = p^{-k}
    const Real q = real_pow(p, n - beta);
    const Real big_a = ring / (1 - q);
    const Real big_b = big_a * q + real_pow(p, -beta);
    const Real s = pw(p, -n);
    rep.reference_formula = ring * (big_a * big_a / (1 - s) - 2 * big_a * big_b / (1 - s * q) + big_b * big_b / (1 - s * q * q));
    return rep;
}

IBetaReport i_beta(Prime p, int n, const Real& beta) {
    if (beta <= -n) throw InputError("I(beta) needs beta > -n");
    const Real ring = 1 - pw(p, -n);
    const Real ratio = real_pow(p, -beta - n);
    IBetaReport rep;
    rep.closed_form = ring / (1 - ratio);
    rep.alternate_form = ring / (1 - real_pow(p, -n - n * beta));
    const std::int64_t top = shells_needed(p, beta + n);
    rep.shell_sum = 0;
    for (std::int64_t j = 0; j < top; ++j) rep.shell_sum += ring * pow(ratio, j);
    rep.tail_bound = ring * pow(ratio, top) / (1 - ratio);
    return rep;
}

EmbeddingConstant embedding_constant(Prime p, int n, const Real& l) {
    if (2 * l <= n) throw InputError("the embedding constant needs l > n/2");
    const Real ring = 1 - pw(p, -n);
    const Real q = real_pow(p, n - 2 * l);
    EmbeddingConstant rep;
    rep.closed_form = 1 + ring * q / (1 - q);
    rep.shell_sum = 1;
    const std::int64_t top = shells_needed(p, 2 * l - n);
    for (std::int64_t j = 1; j <= top; ++j) rep.shell_sum += ring * pw(p, j * n) * real_pow(p, -2 * l * j);
    rep.constant = sqrt(rep.closed_form);
    return rep;
}

Real operator_h_norm2(const HomogeneousSymbol& f, const Real& alpha, const TestFunction& phi, const Real& l) {
    const std::int64_t p = f.prime();
    const int n = f.dim();
    const int d = f.degree();
    const RadialPieces pieces = radial_pieces(spectrum_squared(phi), f);
    const Real unit = f.sphere_sum(real_pow(p, -2 * alpha));
    const Real g = n + 2 * alpha * d;
    const Complex total = weighted_pairing(
        pieces,
        [&](std::int64_t v, std::int64_t w) { return Complex(real_pow(p, -2 * alpha * v) * h_weight(p, w, l)); },
        [&](std::int64_t s) {
            Real ball = real_pow(p, -Real(std::max<std::int64_t>(s, 0)) * g) * unit / (1 - real_pow(p, -g));
            for (std::int64_t j = s; j < 0; ++j) ball += real_pow(p, -Real(j) * g) * unit * h_weight(p, j, l);
            return Complex(ball);
        });
    return total.re;
}

ContinuityReport continuity_check(const HomogeneousSymbol& f, const Real& alpha, const Real& l,
                                  const std::vector<TestFunction>& suite) {
    if (alpha <= 0) throw InputError("alpha must be positive");
    const std::int64_t m_min = f.is_norm() ? 0 : f.covering().m_min;
    ContinuityReport rep;
    rep.c1_bound = real_pow(f.prime(), -2 * alpha * m_min);
    rep.max_ratio = 0;
    rep.max_embedding_ratio = 0;
    rep.embedding_checked = 2 * l > f.dim();
    rep.embedding_bound = rep.embedding_checked ? embedding_constant(f.prime(), f.dim(), l).constant : Real(0);
    for (const auto& phi : suite) {
        if (phi.is_zero()) continue;
        const Real lhs = operator_h_norm2(f, alpha, phi, l);
        const Real rhs = h_norm(phi, l + f.degree() * alpha).squared_norm;
        rep.max_ratio = std::max(rep.max_ratio, Real(lhs / rhs));
        if (rep.embedding_checked) {
            const Real r = h_norm(phi, l, NormKind::L1_fourier).squared_norm / sqrt(h_norm(phi, l).squared_norm);
            rep.max_embedding_ratio = std::max(rep.max_embedding_ratio, r);
        }
    }
    rep.holds = rep.max_ratio <= rep.c1_bound * slack() &&
                (!rep.embedding_checked || rep.max_embedding_ratio <= rep.embedding_bound * slack());
    return rep;
}

}  // namespace padic
