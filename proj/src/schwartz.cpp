#include "padic/schwartz.hpp"

#include <algorithm>
#include <map>

namespace padic {

Term make_term(CycScalar coeff, const Point& twist, const Ball& ball) {
    const Prime p = ball.prime();
    Point canonical = reduce_mod(twist, -ball.scale(), p);
    const Point delta = twist - canonical;
    // Psi(delta . x) is constant on the ball because delta lies in the dual lattice
    if (!delta.is_zero()) coeff *= psi(dot(delta, ball.center()), p);
    return Term{std::move(coeff), std::move(canonical), ball};
}

TestFunction::TestFunction(Prime p, int n) : p_(p), n_(n) {
    if (n < 1) throw InputError("dimension must be at least 1");
}

TestFunction TestFunction::indicator(const Ball& ball) {
    TestFunction f(ball.prime(), ball.dim());
    f.add_term(CycScalar(1), Point::zero(ball.dim()), ball);
    return f;
}

TestFunction TestFunction::chi(Prime p, int n, std::int64_t r) { return indicator(Ball::polydisc(p, n, r)); }

void TestFunction::add_term(const CycScalar& coeff, const Point& twist, const Ball& ball) {
    if (ball.prime() != p_ || ball.dim() != n_ || twist.dim() != n_)
        throw InputError("term does not match the prime or dimension of the function");
    if (coeff.is_zero()) return;
    terms_.push_back(make_term(coeff, twist, ball));
}

CycScalar TestFunction::operator()(const Point& x) const {
    if (x.dim() != n_) throw InputError("dimension mismatch");
    CycScalar sum;
    for (const auto& t : terms_)
        if (t.ball.contains(x)) sum += t.coeff * psi(dot(t.twist, x), p_);
    return sum;
}

CycScalar evaluate(const TestFunction& phi, const Point& x) { return phi(x); }

namespace {

std::vector<Term> merge_same_ball(const std::vector<Term>& terms) {
    std::map<Point, CycScalar> acc;
    for (const auto& t : terms) acc[t.twist] += t.coeff;
    std::vector<Term> out;
    for (auto& [twist, c] : acc)
        if (!c.is_zero()) out.push_back(Term{c, twist, terms.front().ball});
    return out;
}

std::size_t child_index(const Ball& parent, const Point& x) {
    const Prime p = parent.prime();
    const Rational step = power_of(p, parent.scale());
    std::size_t idx = 0;
    for (int i = 0; i < parent.dim(); ++i) {
        const auto k = static_cast<std::size_t>(i);
        const Rational digit = reduce_mod((x.coords[k] - parent.center().coords[k]) / step, 1, p);
        idx = idx * static_cast<std::size_t>(p.value()) + static_cast<std::size_t>(numerator(digit));
    }
    return idx;
}

// Refines overlapping terms until every ball carries a single character expansion.
void disjoint_rec(std::vector<Term> terms, std::vector<Term>& out) {
    std::stable_sort(terms.begin(), terms.end(),
                     [](const Term& a, const Term& b) { return a.ball.scale() < b.ball.scale(); });
    std::vector<std::pair<Ball, std::vector<Term>>> groups;
    for (auto& t : terms) {
        auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.first.contains(t.ball); });
        if (it == groups.end()) {
            groups.emplace_back(t.ball, std::vector<Term>{});
            it = std::prev(groups.end());
        }
        it->second.push_back(std::move(t));
    }
    for (auto& [root, members] : groups) {
        std::vector<Term> at_root, deeper;
        for (auto& t : members) (t.ball == root ? at_root : deeper).push_back(std::move(t));
        if (!at_root.empty()) at_root = merge_same_ball(at_root);
        if (deeper.empty()) {
            out.insert(out.end(), at_root.begin(), at_root.end());
            continue;
        }
        if (at_root.empty()) {
            disjoint_rec(std::move(deeper), out);
            continue;
        }
        const auto children = root.children();
        std::vector<std::vector<Term>> per_child(children.size());
        for (auto& t : deeper) per_child[child_index(root, t.ball.center())].push_back(std::move(t));
        for (std::size_t i = 0; i < children.size(); ++i)
            for (const auto& t : at_root) per_child[i].push_back(make_term(t.coeff, t.twist, children[i]));
        for (auto& c : per_child)
            if (!c.empty()) disjoint_rec(std::move(c), out);
    }
}

bool term_less(const Term& a, const Term& b) {
    if (!(a.ball == b.ball)) return a.ball < b.ball;
    return a.twist < b.twist;
}

}  // namespace

TestFunction TestFunction::canonical() const {
    TestFunction f(p_, n_);
    disjoint_rec(terms_, f.terms_);
    std::sort(f.terms_.begin(), f.terms_.end(), term_less);
    return f;
}

std::vector<BallContent> group_by_ball(const TestFunction& canonical_form) {
    std::vector<BallContent> out;
    for (const auto& t : canonical_form.terms()) {
        if (out.empty() || !(out.back().ball == t.ball)) out.push_back(BallContent{t.ball, {}});
        out.back().terms.push_back(t);
    }
    return out;
}

std::vector<BallContent> split_content(const BallContent& content) {
    std::vector<BallContent> out;
    for (const auto& child : content.ball.children()) {
        std::vector<Term> moved;
        for (const auto& t : content.terms) moved.push_back(make_term(t.coeff, t.twist, child));
        moved = merge_same_ball(moved);
        if (!moved.empty()) out.push_back(BallContent{child, std::move(moved)});
    }
    return out;
}

TestFunction TestFunction::conj() const {
    TestFunction f(p_, n_);
    for (const auto& t : terms_) f.add_term(t.coeff.conj(), -t.twist, t.ball);
    return f;
}

TestFunction TestFunction::reflected() const {
    TestFunction f(p_, n_);
    for (const auto& t : terms_) f.add_term(t.coeff, -t.twist, Ball(p_, -t.ball.center(), t.ball.scale()));
    return f;
}

TestFunction TestFunction::translated_reflected(const Point& x) const {
    // phi(x - y) = c Psi(b.x) Psi(-b.y) 1[y in x - a + p^r]
    TestFunction f(p_, n_);
    for (const auto& t : terms_)
        f.add_term(t.coeff * psi(dot(t.twist, x), p_), -t.twist, Ball(p_, x - t.ball.center(), t.ball.scale()));
    return f;
}

TestFunction TestFunction::twisted(const Point& x) const {
    TestFunction f(p_, n_);
    for (const auto& t : terms_) f.add_term(t.coeff, t.twist + x, t.ball);
    return f;
}

std::int64_t TestFunction::support_bound_exponent() const {
    if (terms_.empty()) throw Error("zero function has empty support");
    std::int64_t e = terms_.front().ball.max_norm_exponent();
    for (const auto& t : terms_) e = std::max(e, t.ball.max_norm_exponent());
    return e;
}

std::int64_t TestFunction::twist_bound_exponent() const {
    std::int64_t e = 0;
    bool any = false;
    for (const auto& t : terms_) {
        if (t.twist.is_zero()) continue;
        const std::int64_t v = -valuation(t.twist, p_).value();
        e = any ? std::max(e, v) : v;
        any = true;
    }
    return e;
}

void TestFunction::check_compatible(const TestFunction& o) const {
    if (o.p_ != p_ || o.n_ != n_) throw InputError("functions over different primes or dimensions");
}

TestFunction& TestFunction::operator+=(const TestFunction& o) {
    check_compatible(o);
    terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
    return *this;
}

TestFunction& TestFunction::operator-=(const TestFunction& o) {
    check_compatible(o);
    for (const auto& t : o.terms_) terms_.push_back(Term{-t.coeff, t.twist, t.ball});
    return *this;
}

TestFunction& TestFunction::operator*=(const CycScalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.coeff *= c;
    return *this;
}

TestFunction operator*(const TestFunction& a, const TestFunction& b) {
    a.check_compatible(b);
    TestFunction f(a.p_, a.n_);
    for (const auto& s : a.terms_)
        for (const auto& t : b.terms_) {
            const Ball* small = nullptr;
            if (s.ball.contains(t.ball))
                small = &t.ball;
            else if (t.ball.contains(s.ball))
                small = &s.ball;
            if (small) f.add_term(s.coeff * t.coeff, s.twist + t.twist, *small);
        }
    return f;
}

TestFunction fourier(const TestFunction& phi, Direction direction) {
    const Prime p = phi.prime();
    const int n = phi.dim();
    TestFunction out(p, n);
    for (const auto& t : phi.terms()) {
        const Point& a = t.ball.center();
        const std::int64_t r = t.ball.scale();
        const CycScalar c = t.coeff * psi(dot(a, t.twist), p) * power_of(p, -r * n);
        if (direction == Direction::forward)
            out.add_term(c, -a, Ball(p, t.twist, -r));
        else
            out.add_term(c, a, Ball(p, -t.twist, -r));
    }
    return out;
}

CycScalar integrate(const TestFunction& phi) {
    CycScalar sum;
    for (const auto& t : phi.terms())
        if (t.has_trivial_twist()) sum += t.coeff * t.ball.measure();
    return sum;
}

TestFunction convolve(const TestFunction& phi, const TestFunction& psi_) {
    return fourier(fourier(phi) * fourier(psi_), Direction::inverse);
}

namespace {
// log_p max ||x|| over the support of a nonzero content whose ball contains the origin
std::int64_t origin_content_norm(const BallContent& content) {
    if (content.terms.size() == 1 && content.terms.front().has_trivial_twist()) return -content.ball.scale();
    const auto kids = split_content(content);
    for (const auto& k : kids)
        if (!k.ball.contains_origin()) return -content.ball.scale();
    // only the origin child survives
    return origin_content_norm(kids.front());
}
}  // namespace

std::int64_t support_norm_exponent(const TestFunction& phi) {
    const auto groups = group_by_ball(phi.canonical());
    if (groups.empty()) throw Error("zero function has empty support");
    std::int64_t best = 0;
    bool any = false;
    for (const auto& g : groups) {
        const std::int64_t e = g.ball.contains_origin() ? origin_content_norm(g) : g.ball.max_norm_exponent();
        best = any ? std::max(best, e) : e;
        any = true;
    }
    return best;
}

LocalConstancy local_constancy_data(const TestFunction& phi) {
    if (phi.is_zero()) throw Error("local constancy data is undefined for the zero function");
    const std::int64_t l = std::max<std::int64_t>(0, support_norm_exponent(fourier(phi)));
    const CycScalar at0 = phi(Point::zero(phi.dim()));
    for (std::int64_t r = 0; r < l; ++r) {
        const TestFunction chi = TestFunction::chi(phi.prime(), phi.dim(), r);
        if (((phi - chi * at0) * chi).is_zero()) return LocalConstancy{l, r};
    }
    return LocalConstancy{l, l};
}

LWDecomposition decompose_lw(const TestFunction& phi) {
    const Prime p = phi.prime();
    const int n = phi.dim();
    if (phi.is_zero()) return LWDecomposition{TestFunction(p, n), TestFunction(p, n)};
    const std::int64_t r = local_constancy_data(phi).r_phi;
    TestFunction w = TestFunction::chi(p, n, r) * (integrate(phi) * power_of(p, r * n));
    TestFunction l = phi - w;
    return LWDecomposition{std::move(l), std::move(w)};
}

bool is_in_w(const TestFunction& phi) {
    const auto groups = group_by_ball(phi.canonical());
    // a radial step function about 0 in polydisc shells: every piece untwisted and
    // constant on each sphere; check by comparing with its average over shells
    for (const auto& g : groups)
        for (const auto& t : g.terms)
            if (!t.has_trivial_twist()) return false;
    std::map<std::int64_t, std::vector<const BallContent*>> shells;
    for (const auto& g : groups) {
        if (g.ball.contains_origin()) continue;
        shells[g.ball.max_norm_exponent()].push_back(&g);
    }
    for (const auto& [e, members] : shells) {
        // the shell ||x|| = p^e must be covered entirely with one value
        Rational covered = 0;
        const CycScalar& v = members.front()->terms.front().coeff;
        for (const auto* m : members) {
            if (!(m->terms.front().coeff == v)) return false;
            covered += m->ball.measure();
        }
        const Rational shell = power_of(phi.prime(), e * phi.dim()) * (1 - power_of(phi.prime(), -phi.dim()));
        if (covered != shell) return false;
    }
    return true;
}

}  // namespace padic
