#include "padic/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace padic {

namespace {

inline void two_sum(double a, double b, double& s, double& e) {
    s = a + b;
    const double bb = s - a;
    e = (a - (s - bb)) + (b - bb);
}

inline void quick_two_sum(double a, double b, double& s, double& e) {
    s = a + b;
    e = b - (s - a);
}

constexpr std::size_t kNaiveLimit = 20000;

// e^{2 pi i sign j / m} for j = 0..m-1
std::vector<DDComplex> root_table(std::int64_t m, int sign) {
    std::vector<DDComplex> out(static_cast<std::size_t>(m));
    for (std::int64_t j = 0; j < m; ++j) out[static_cast<std::size_t>(j)] = DDComplex::from_complex(unit_root(Integer(sign * j), Integer(m)));
    return out;
}

std::int64_t grid_residue(const Rational& x, int k, Prime p) {
    const Rational r = reduce_mod(x * power_of(p, k), 2 * k, p);
    return numerator(r).convert_to<std::int64_t>();
}

void fft_line(std::vector<DDComplex>& x, const std::vector<DDComplex>& roots, std::int64_t top, std::int64_t p) {
    const std::size_t len = x.size();
    if (len == 1) return;
    const std::size_t m = len / static_cast<std::size_t>(p);
    std::vector<std::vector<DDComplex>> sub(static_cast<std::size_t>(p), std::vector<DDComplex>(m));
    for (std::size_t j = 0; j < len; ++j) sub[j % p][j / p] = x[j];
    for (auto& s : sub) fft_line(s, roots, top, p);
    const std::size_t step = static_cast<std::size_t>(top) / len;
    for (std::size_t k = 0; k < len; ++k) {
        DDComplex acc = sub[0][k % m];
        for (std::size_t r = 1; r < static_cast<std::size_t>(p); ++r) acc += roots[((r * k) % len) * step] * sub[r][k % m];
        x[k] = acc;
    }
}

DDComplex scale(const DDComplex& z, const DoubleDouble& s) { return {z.re * s, z.im * s}; }

}  // namespace

DoubleDouble operator+(const DoubleDouble& a, const DoubleDouble& b) {
    double s, e, t, f;
    two_sum(a.hi, b.hi, s, e);
    two_sum(a.lo, b.lo, t, f);
    e += t;
    quick_two_sum(s, e, s, e);
    e += f;
    quick_two_sum(s, e, s, e);
    return {s, e};
}

DoubleDouble operator-(const DoubleDouble& a, const DoubleDouble& b) { return a + (-b); }

DoubleDouble operator*(const DoubleDouble& a, const DoubleDouble& b) {
    const double p = a.hi * b.hi;
    double e = std::fma(a.hi, b.hi, -p);
    e += a.hi * b.lo + a.lo * b.hi;
    double s;
    quick_two_sum(p, e, s, e);
    return {s, e};
}

DoubleDouble DoubleDouble::from_real(const Real& x) {
    const double h = x.convert_to<double>();
    const double l = Real(x - h).convert_to<double>();
    return {h, l};
}

Real DoubleDouble::to_real() const { return Real(hi) + Real(lo); }

DDComplex DDComplex::from_complex(const Complex& z) {
    return {DoubleDouble::from_real(z.re), DoubleDouble::from_real(z.im)};
}

Complex DDComplex::to_complex() const { return Complex(re.to_real(), im.to_real()); }

QuotientFunction::QuotientFunction(Prime p, int n, int k) : p_(p), n_(n), k_(k) {
    if (n < 1 || k < 0) throw InputError("quotient grid needs n >= 1 and K >= 0");
    const double points = std::pow(static_cast<double>(p.value()), 2.0 * k * n);
    if (points > static_cast<double>(kMaxQuotientSize))
        throw InputError("quotient grid too large: " + std::to_string(static_cast<long long>(points)) + " points (limit " +
                         std::to_string(kMaxQuotientSize) + ")");
    side_ = ipow(p, 2 * k).convert_to<std::int64_t>();
    values_.assign(static_cast<std::size_t>(points + 0.5), DDComplex{});
}

Real QuotientFunction::mass() const { return to_real(power_of(p_, -k_ * n_)); }

std::vector<std::int64_t> QuotientFunction::digits(std::size_t index) const {
    std::vector<std::int64_t> d(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) {
        d[i] = static_cast<std::int64_t>(index % static_cast<std::size_t>(side_));
        index /= static_cast<std::size_t>(side_);
    }
    return d;
}

std::size_t QuotientFunction::index(const std::vector<std::int64_t>& digits) const {
    std::size_t idx = 0;
    for (int i = n_ - 1; i >= 0; --i) {
        std::int64_t d = digits[i] % side_;
        if (d < 0) d += side_;
        idx = idx * static_cast<std::size_t>(side_) + static_cast<std::size_t>(d);
    }
    return idx;
}

Point QuotientFunction::point(std::size_t index) const {
    const auto d = digits(index);
    std::vector<Rational> c;
    const Rational unit = power_of(p_, -k_);
    for (auto v : d) c.push_back(Rational(v) * unit);
    return Point(std::move(c));
}

std::size_t QuotientFunction::index_of(const Point& x) const {
    if (x.dim() != n_) throw InputError("point dimension mismatch");
    std::vector<std::int64_t> d;
    for (const auto& c : x.coords) {
        const Valuation v = valuation(c, p_);
        if (!v.is_infinite() && v.value() < -k_) throw InputError("point lies outside the quotient window");
        d.push_back(grid_residue(c, k_, p_));
    }
    return index(d);
}

Real QuotientFunction::l2_norm2() const {
    DoubleDouble s;
    for (const auto& z : values_) s += z.re * z.re + z.im * z.im;
    return s.to_real() * mass();
}

Complex QuotientFunction::total() const {
    DDComplex s;
    for (const auto& z : values_) s += z;
    return s.to_complex() * mass();
}

int required_level(const TestFunction& phi) {
    std::int64_t k = 0;
    const TestFunction canon = phi.canonical();
    for (const auto& t : canon.terms()) {
        k = std::max({k, t.ball.max_norm_exponent(), t.ball.scale()});
        if (!t.has_trivial_twist()) k = std::max(k, -valuation(t.twist, phi.prime()).value());
    }
    return static_cast<int>(k);
}

QuotientFunction project(const TestFunction& phi, int k) {
    const int need = required_level(phi);
    if (need > k)
        throw InputError("quotient window too small: the function needs K >= " + std::to_string(need) + ", got " +
                         std::to_string(k));
    const Prime p = phi.prime();
    const int n = phi.dim();
    QuotientFunction g(p, n, k);
    const std::int64_t m = g.side();
    const auto roots = root_table(m, 1);
    const TestFunction canon = phi.canonical();
    for (const auto& t : canon.terms()) {
        const std::int64_t r = t.ball.scale();
        std::vector<std::int64_t> base, twist;
        for (int i = 0; i < n; ++i) {
            base.push_back(grid_residue(t.ball.center().coords[i], k, p));
            twist.push_back(t.has_trivial_twist() ? 0 : grid_residue(t.twist.coords[i], k, p));
        }
        const DDComplex coeff = DDComplex::from_complex(t.coeff.to_complex());
        const std::int64_t stride = ipow(p, k + r).convert_to<std::int64_t>();
        const std::int64_t count = ipow(p, k - r).convert_to<std::int64_t>();
        std::vector<std::int64_t> tvec(static_cast<std::size_t>(n), 0);
        while (true) {
            std::vector<std::int64_t> a(static_cast<std::size_t>(n));
            std::int64_t phase = 0;
            for (int i = 0; i < n; ++i) {
                a[i] = (base[i] + stride * tvec[i]) % m;
                phase = (phase + static_cast<std::int64_t>((static_cast<__int128>(twist[i]) * a[i]) % m)) % m;
            }
            g.values()[g.index(a)] += coeff * roots[static_cast<std::size_t>(phase)];
            int i = 0;
            while (i < n && ++tvec[i] == count) tvec[i++] = 0;
            if (i == n) break;
        }
    }
    return g;
}

QuotientFunction dft(const QuotientFunction& g, Direction direction) {
    const std::int64_t m = g.side();
    const int n = g.dim();
    const auto roots = root_table(m, direction == Direction::forward ? -1 : 1);
    QuotientFunction out = g;
    auto& v = out.values();
    std::size_t stride = 1;
    std::vector<DDComplex> line(static_cast<std::size_t>(m));
    for (int axis = 0; axis < n; ++axis) {
        const std::size_t block = stride * static_cast<std::size_t>(m);
        for (std::size_t start = 0; start < v.size(); ++start) {
            if ((start / stride) % static_cast<std::size_t>(m) != 0) continue;
            for (std::size_t j = 0; j < static_cast<std::size_t>(m); ++j) line[j] = v[start + j * stride];
            fft_line(line, roots, m, g.prime());
            for (std::size_t j = 0; j < static_cast<std::size_t>(m); ++j) v[start + j * stride] = line[j];
        }
        stride = block;
    }
    const DoubleDouble mass = DoubleDouble::from_real(g.mass());
    for (auto& z : v) z = scale(z, mass);
    return out;
}

QuotientFunction dft_naive(const QuotientFunction& g, Direction direction) {
    if (g.size() > kNaiveLimit) throw InputError("naive transform limited to " + std::to_string(kNaiveLimit) + " points");
    const std::int64_t m = g.side();
    const auto roots = root_table(m, direction == Direction::forward ? -1 : 1);
    QuotientFunction out(g.prime(), g.dim(), g.level());
    const DoubleDouble mass = DoubleDouble::from_real(g.mass());
    for (std::size_t b = 0; b < g.size(); ++b) {
        const auto db = g.digits(b);
        DDComplex acc;
        for (std::size_t a = 0; a < g.size(); ++a) {
            const auto da = g.digits(a);
            std::int64_t dot = 0;
            for (std::size_t i = 0; i < da.size(); ++i) dot = (dot + da[i] * db[i]) % m;
            acc += g.values()[a] * roots[static_cast<std::size_t>(dot)];
        }
        out.values()[b] = scale(acc, mass);
    }
    return out;
}

QuotientFunction convolve_direct(const QuotientFunction& g, const QuotientFunction& h) {
    if (g.prime() != h.prime() || g.dim() != h.dim() || g.level() != h.level()) throw InputError("grid shapes differ");
    if (g.size() > kNaiveLimit) throw InputError("direct convolution limited to " + std::to_string(kNaiveLimit) + " points");
    QuotientFunction out(g.prime(), g.dim(), g.level());
    const DoubleDouble mass = DoubleDouble::from_real(g.mass());
    for (std::size_t a = 0; a < g.size(); ++a) {
        const auto da = g.digits(a);
        DDComplex acc;
        for (std::size_t b = 0; b < g.size(); ++b) {
            auto diff = g.digits(b);
            for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = da[i] - diff[i];
            acc += g.values()[g.index(diff)] * h.values()[b];
        }
        out.values()[a] = scale(acc, mass);
    }
    return out;
}

QuotientFunction norm_multiplier(const QuotientFunction& g, const Real& a) {
    const std::int64_t p = g.prime();
    const int n = g.dim();
    const int k = g.level();
    if (a <= -n) throw InputError("norm multiplier needs a > -n");
    std::vector<DoubleDouble> weight(static_cast<std::size_t>(2 * k));
    for (int v = 0; v < 2 * k; ++v) weight[v] = DoubleDouble::from_real(real_pow(p, a * (k - v)));
    const Real core = real_pow(p, -a * k) * (1 - pow(Real(p), -n)) / (1 - real_pow(p, -a - n));
    const DoubleDouble core_weight = DoubleDouble::from_real(core);
    QuotientFunction spec = dft(g);
    for (std::size_t b = 0; b < spec.size(); ++b) {
        int v = 2 * k;
        for (auto d : spec.digits(b)) {
            if (d == 0) continue;
            int e = 0;
            while (d % p == 0) {
                d /= p;
                ++e;
            }
            v = std::min(v, e);
        }
        spec.values()[b] = scale(spec.values()[b], v == 2 * k ? core_weight : weight[v]);
    }
    return dft(spec, Direction::inverse);
}

CompareReport compare(const QuotientFunction& brute, const TestFunction& analytic, const Real& tolerance) {
    if (brute.prime() != analytic.prime() || brute.dim() != analytic.dim()) throw InputError("shape mismatch");
    const QuotientFunction exact = project(analytic, brute.level());
    CompareReport rep;
    Real scale_max = 1;
    DoubleDouble worst;
    for (std::size_t i = 0; i < exact.size(); ++i) {
        const DDComplex d = brute.values()[i] - exact.values()[i];
        const DoubleDouble e2 = d.re * d.re + d.im * d.im;
        if (e2.hi > worst.hi) worst = e2;
        const double s2 = exact.values()[i].re.hi * exact.values()[i].re.hi + exact.values()[i].im.hi * exact.values()[i].im.hi;
        scale_max = std::max(scale_max, Real(std::sqrt(s2)));
    }
    rep.points = exact.size();
    rep.max_abs = sqrt(worst.to_real());
    rep.max_rel = rep.max_abs / scale_max;
    rep.pass = rep.max_abs <= tolerance;
    return rep;
}

CompareReport compare(const QuotientFunction& brute, const std::vector<std::size_t>& indices,
                      const std::function<Complex(const Point&)>& analytic, const Real& tolerance) {
    CompareReport rep;
    rep.max_abs = 0;
    rep.max_rel = 0;
    for (auto i : indices) {
        if (i >= brute.size()) throw InputError("index outside the grid");
        const Complex want = analytic(brute.point(i));
        const Real err = (brute.values()[i].to_complex() - want).abs();
        rep.max_abs = std::max(rep.max_abs, err);
        rep.max_rel = std::max(rep.max_rel, Real(err / std::max(Real(1), want.abs())));
        ++rep.points;
    }
    rep.pass = rep.max_abs <= tolerance;
    return rep;
}

}  // namespace padic
