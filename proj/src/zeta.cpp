#include "padic/zeta.hpp"

#include <deque>

namespace padic {

std::string to_string(EllipticStatus s) {
    switch (s) {
        case EllipticStatus::elliptic: return "elliptic";
        case EllipticStatus::zero_found: return "zero_found";
        case EllipticStatus::budget_exceeded: return "budget_exceeded";
        case EllipticStatus::not_homogeneous: return "not_homogeneous";
    }
    return "unknown";
}

Point Leaf::point() const {
    Point x = Point::zero(static_cast<int>(representative.size()));
    for (std::size_t i = 0; i < representative.size(); ++i) x.coords[i] = Rational(representative[i]);
    return x;
}

SphereCovering::SphereCovering(Prime p_, int n_, int degree_, std::vector<Leaf> leaves_)
    : p(p_), n(n_), degree(degree_), leaves(std::move(leaves_)), m_max(0), m_min(0) {
    if (leaves.empty()) throw Error("empty sphere covering");
    m_max = m_min = leaves.front().value_exponent;
    for (const auto& l : leaves) {
        m_max = std::max(m_max, l.value_exponent);
        m_min = std::min(m_min, l.value_exponent);
        max_depth_ = std::max(max_depth_, l.depth);
        index_.emplace(std::make_pair(l.depth, l.representative), l.value_exponent);
    }
}

Rational SphereCovering::total_measure() const {
    Rational s = 0;
    for (const auto& l : leaves) s += power_of(p, -static_cast<std::int64_t>(l.depth) * n);
    return s;
}

std::optional<std::int64_t> SphereCovering::value_exponent(const std::vector<Integer>& residue, int depth) const {
    for (int k = 1; k <= std::min(depth, max_depth_); ++k) {
        const Integer mod = ipow(p, k);
        std::vector<Integer> r(residue.size());
        for (std::size_t i = 0; i < r.size(); ++i) {
            r[i] = residue[i] % mod;
            if (r[i] < 0) r[i] += mod;
        }
        auto it = index_.find(std::make_pair(k, r));
        if (it != index_.end()) return it->second;
    }
    return std::nullopt;
}

namespace {

struct SearchOutcome {
    EllipticityResult result;
    std::vector<Leaf> leaves;
};

std::int64_t int_valuation(const Integer& v, Prime p) { return valuation(Rational(v), p).value(); }

// Breadth-first residue-tree search over the unit sphere.
SearchOutcome search(const IntPolynomial& f, Prime p, const SearchBudget& budget) {
    SearchOutcome out;
    out.result.status = EllipticStatus::elliptic;
    const int n = f.dim();
    if (f.degree() == 0) throw InputError("ellipticity requires a nonconstant polynomial");
    if (!f.is_homogeneous()) {
        out.result.status = EllipticStatus::not_homogeneous;
        return out;
    }
    std::vector<IntPolynomial> grad;
    for (int i = 0; i < n; ++i) grad.push_back(f.derivative(i));

    std::deque<std::pair<std::vector<Integer>, int>> queue;
    {
        std::vector<Integer> digits(static_cast<std::size_t>(n), 0);
        while (true) {
            int i = n - 1;
            while (i >= 0 && ++digits[static_cast<std::size_t>(i)] == p.value()) digits[static_cast<std::size_t>(i--)] = 0;
            if (i < 0) break;
            queue.emplace_back(digits, 1);
        }
    }
    std::int64_t nodes = 0;
    while (!queue.empty()) {
        auto [z, k] = std::move(queue.front());
        queue.pop_front();
        if (++nodes > budget.max_nodes) {
            out.result.status = EllipticStatus::budget_exceeded;
            break;
        }
        const Integer value = f(z);
        if (value == 0) {
            out.result = EllipticityResult{EllipticStatus::zero_found, z, k, nodes};
            return out;
        }
        const std::int64_t v = int_valuation(value, p);
        if (v < k) {
            out.leaves.push_back(Leaf{z, k, v});
            continue;
        }
        // Hensel: a simple approximate root along some coordinate lifts to a true zero
        bool lifts = false;
        for (const auto& g : grad) {
            const Integer gv = g(z);
            if (gv != 0 && v > 2 * int_valuation(gv, p)) lifts = true;
        }
        if (lifts) {
            out.result = EllipticityResult{EllipticStatus::zero_found, z, k, nodes};
            return out;
        }
        if (k + 1 > budget.max_depth) {
            out.result.status = EllipticStatus::budget_exceeded;
            break;
        }
        const Integer step = ipow(p, k);
        std::vector<Integer> digits(static_cast<std::size_t>(n), 0);
        while (true) {
            std::vector<Integer> child = z;
            for (int i = 0; i < n; ++i) child[static_cast<std::size_t>(i)] += step * digits[static_cast<std::size_t>(i)];
            queue.emplace_back(std::move(child), k + 1);
            int i = n - 1;
            while (i >= 0 && ++digits[static_cast<std::size_t>(i)] == p.value()) digits[static_cast<std::size_t>(i--)] = 0;
            if (i < 0) break;
        }
    }
    out.result.nodes_visited = nodes;
    return out;
}

}  // namespace

EllipticityResult ellipticity_check(const IntPolynomial& f, Prime p, const SearchBudget& budget) {
    return search(f, p, budget).result;
}

SphereCovering sphere_covering(const IntPolynomial& f, Prime p, const SearchBudget& budget) {
    auto out = search(f, p, budget);
    switch (out.result.status) {
        case EllipticStatus::elliptic: break;
        case EllipticStatus::not_homogeneous: throw InputError("polynomial " + f.to_string() + " is not homogeneous");
        case EllipticStatus::zero_found: throw InputError("polynomial " + f.to_string() + " has a nontrivial zero over Q_" + std::to_string(p.value()));
        case EllipticStatus::budget_exceeded:
            throw BudgetExceeded("sphere covering of " + f.to_string() + " exceeded the search budget (inconclusive)");
    }
    return SphereCovering(p, f.dim(), f.degree(), std::move(out.leaves));
}

NormComparison norm_comparison(const SphereCovering& cov) {
    return NormComparison{power_of(cov.p, -cov.m_max), power_of(cov.p, -cov.m_min)};
}

QPoly sphere_polynomial(const SphereCovering& cov) {
    QPoly l;
    for (const auto& leaf : cov.leaves) l.add(leaf.value_exponent, power_of(cov.p, -static_cast<std::int64_t>(leaf.depth) * cov.n));
    return l;
}

LaurentRational igusa_zeta(const SphereCovering& cov) {
    QPoly den(Rational(1));
    den.add(cov.degree, -power_of(cov.p, -cov.n));
    return LaurentRational(cov.p, sphere_polynomial(cov), den);
}

}  // namespace padic
