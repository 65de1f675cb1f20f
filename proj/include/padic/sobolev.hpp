#pragma once

#include <string>
#include <vector>

#include "padic/operators.hpp"

namespace padic {

enum class NormKind { H, singular_H, L1_fourier };

std::string to_string(NormKind k);

struct NormReport {
    NormKind kind = NormKind::H;
    Real l{0};
    /// For H kinds the squared norm, for L1_fourier the plain integral of |F phi|.
    Real squared_norm{0};
    /// Weighted mass per sphere ||xi|| = p^{-j}, from balls that avoid 0.
    std::vector<std::pair<std::int64_t, Real>> shell_breakdown;
    /// Weighted mass of the polydiscs around 0 where |F phi|^2 is constant.
    Real core_mass{0};
};

/// ||phi||^2 with weight max(1, ||xi||)^{2l} (H) or ||xi||^{2l} (singular_H), or
/// int |F phi| (L1_fourier, l ignored).
NormReport h_norm(const TestFunction& phi, const Real& l, NormKind kind = NormKind::H);

/// The radial function ||x||^{-beta} on ||x|| > 1 (or >= 1 for the variant).
struct NonCompactReport {
    Real beta;
    Real l;
    Real computed;        ///< ||f||^2_{H^l} from shell-by-shell character sums
    Real reference_formula;   ///< the reference integral of A - B q^k, summed in closed form
    Real variant_computed;  ///< same computation for ||x||^{-beta} on ||x|| >= 1
    Real variant_unit_ball;  ///< the variant's part from ||xi|| <= 1
    Real transform_outside_unit_ball;  ///< max |F f| seen on ||xi|| > 1
};

/// Needs beta > n.
NonCompactReport noncompact_example(Prime p, int n, const Real& beta, const Real& l);

struct IBetaReport {
    Real closed_form;    ///< (1 - p^-n)/(1 - p^{-beta-n})
    Real shell_sum;      ///< truncated sum of shell integrals
    Real tail_bound;     ///< bound on the omitted shells
    Real alternate_form;   ///< (1 - p^-n)/(1 - p^{-n-n beta}), an exponent that is wrong for n > 1
};

/// int over Z_p^n of ||x||^beta, beta > -n.
IBetaReport i_beta(Prime p, int n, const Real& beta);

/// int max(1, ||xi||)^{-2l} d xi in closed form and by shells, l > n/2.
struct EmbeddingConstant {
    Real closed_form;
    Real shell_sum;
    Real constant;  ///< square root of the closed form
};

EmbeddingConstant embedding_constant(Prime p, int n, const Real& l);

struct ContinuityReport {
    Real c1_bound;          ///< C1^{2 alpha}
    Real max_ratio;         ///< max ||f(D,alpha) phi||^2_{H^l} / ||phi||^2_{H^{l+d alpha}}
    Real embedding_bound;   ///< C
    Real max_embedding_ratio;  ///< max int |F phi| / ||phi||_{H^l}; 0 when l <= n/2
    bool embedding_checked = false;
    bool holds = true;
};

/// ||f(D, alpha) phi||^2_{H^l}, computed from the exact spectrum |f|^alpha F phi.
Real operator_h_norm2(const HomogeneousSymbol& f, const Real& alpha, const TestFunction& phi, const Real& l);

ContinuityReport continuity_check(const HomogeneousSymbol& f, const Real& alpha, const Real& l,
                                  const std::vector<TestFunction>& suite);

}  // namespace padic
