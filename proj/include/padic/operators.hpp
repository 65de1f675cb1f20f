#pragma once

#include <string>
#include <vector>

#include "padic/radial.hpp"

namespace padic {

/// A value computed in floating point. Infinite tails are summed in closed form,
/// so error_estimate only accounts for rounding.
struct NumericValue {
    Complex value;
    Real error_estimate{0};
    unsigned precision_bits = 0;
};

/// The symbol |h(xi)|^{sign alpha}, h the sup norm or an elliptic form.
struct Multiplier {
    HomogeneousSymbol symbol;
    Real alpha;
    int sign = 1;

    static Multiplier taibleson(Prime p, int n, const Real& alpha, int sign = 1);
    static Multiplier elliptic(const HomogeneousSymbol& f, const Real& alpha, int sign = 1);

    Real exponent() const { return sign * alpha; }
};

/// F^{-1}(|h|^{+-alpha} F phi)(x). Throws DivergenceError when the symbol is not
/// integrable against F phi near 0 (sign -, d alpha >= n and F phi(0) != 0).
NumericValue multiplier_apply(const Multiplier& m, const TestFunction& phi, const Point& x);

/// The hypersingular integral (1-p^a)/(1-p^{-a-n}) int ||y||^{-a-n} (phi(x-y) - phi(x)) dy.
NumericValue taibleson_direct(const Real& alpha, const TestFunction& phi, const Point& x);

enum class KernelForm { power, log };
enum class KernelDomain { all, w_only };

/// x -> coeff ||x||^exponent + additive, or coeff ln ||x|| + additive.
struct Kernel {
    Prime p{2};
    int n = 1;
    KernelForm form = KernelForm::power;
    Real coeff;
    Real exponent{0};
    Real additive{0};
    KernelDomain domain = KernelDomain::all;

    /// Value at ||x|| = p^{-k}.
    Real shell_value(std::int64_t k) const;
    /// Throws DomainError at 0.
    Real operator()(const Point& x) const;
    /// The factor lambda with F(E)(xi) = lambda ||xi||^{-(exponent + n)} away from 0
    /// (for the log form, exponent + n is read as n).
    Real fourier_factor() const;
    Real fourier_exponent() const;
    std::string describe() const;
};

Kernel taibleson_kernel(Prime p, int n, const Real& alpha, const Real& additive = 0);
/// The kernel for |f|^alpha on W; the constant uses the sphere polynomial L at p^alpha.
Kernel elliptic_kernel(const HomogeneousSymbol& f, const Real& alpha, const Real& additive = 0);

/// F(E)(xi) at xi != 0 summed shell by shell from the kernel itself, with the
/// geometric tail in closed form. Independent of fourier_factor.
Real kernel_fourier_direct(const Kernel& e, const Point& xi);

/// (E * v)(x) = int E(x - y) v(y) dy, in direct space.
NumericValue convolve_kernel(const Kernel& e, const TestFunction& v, const Point& x);

/// D_T^alpha (E * v)(x), computed in direct space from the hypersingular integral
/// of the potential's shell profile.
NumericValue taibleson_of_potential(const Real& alpha, const Kernel& e, const TestFunction& v, const Point& x);

/// f(D, alpha)(E * v)(x) = int Psi(x . xi) |f(xi)|^alpha F(E)(xi) F(v)(xi) dxi.
NumericValue elliptic_of_potential(const HomogeneousSymbol& f, const Real& alpha, const Kernel& e,
                                   const TestFunction& v, const Point& x);

/// The solution u = E * v_W + F^{-1}(|f|^{-alpha} F v_L) of f(D, alpha) u = v.
class SolutionEvaluator {
public:
    SolutionEvaluator(HomogeneousSymbol f, const Real& alpha, const TestFunction& v);

    const HomogeneousSymbol& symbol() const { return f_; }
    const Real& alpha() const { return alpha_; }
    const Kernel& kernel() const { return kernel_; }
    const TestFunction& w_part() const { return w_; }
    const TestFunction& l_part() const { return l_; }
    const std::vector<std::string>& warnings() const { return warnings_; }

    NumericValue u(const Point& x) const;
    /// E * v_W
    NumericValue u_w_kernel(const Point& x) const;
    /// F^{-1}(|f|^{-alpha} F v_W); needs d alpha < n.
    NumericValue u_w_spectral(const Point& x) const;
    NumericValue u_l(const Point& x) const;
    /// f(D, alpha) u (x)
    NumericValue apply(const Point& x) const;
    /// f(D, alpha) u (x) - v(x)
    NumericValue residual(const Point& x) const;

private:
    HomogeneousSymbol f_;
    Real alpha_;
    TestFunction v_;
    TestFunction w_;
    TestFunction l_;
    Kernel kernel_;
    std::vector<std::string> warnings_;
};

/// Throws InputError unless 0 < alpha < n/d.
SolutionEvaluator solve(const HomogeneousSymbol& f, const Real& alpha, const TestFunction& v);

struct TransformBoundReport {
    Real bound;      ///< C0^{-alpha}
    Real max_ratio;  ///< max |F(E * phi)(x)| / (||x||^{-d alpha} |F phi(x)|) over the samples
    std::size_t samples_used = 0;
    bool holds = true;
};

/// Checks |F(E * phi)(x)| <= C0^{-alpha} ||x||^{-d alpha} |F phi(x)| at the sample points,
/// with F(E) summed directly from the kernel.
TransformBoundReport transform_bound_check(const HomogeneousSymbol& f, const Real& alpha, const TestFunction& phi,
                            const std::vector<Point>& samples);

}  // namespace padic
