#include "padic/laurent.hpp"

#include <algorithm>

namespace padic {

CPoly to_cyclotomic(const QPoly& q) {
    CPoly r;
    for (const auto& [e, c] : q.coeffs()) r.add(e, CycScalar(c));
    return r;
}

namespace {

void trim(DensePoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// remainder of a modulo b (b nonzero, trimmed)
DensePoly poly_mod(DensePoly a, const DensePoly& b) {
    trim(a);
    while (a.size() >= b.size()) {
        const Rational f = a.back() / b.back();
        const std::size_t off = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        trim(a);
    }
    return a;
}

DensePoly dense(const QPoly& q) {
    DensePoly a(static_cast<std::size_t>(q.max_exponent() + 1));
    for (const auto& [e, c] : q.coeffs()) a[static_cast<std::size_t>(e)] = c;
    return a;
}

QPoly sparse(const DensePoly& a) {
    QPoly q;
    for (std::size_t i = 0; i < a.size(); ++i) q.add(static_cast<std::int64_t>(i), a[i]);
    return q;
}

int common_level(const CPoly& p) {
    int level = 0;
    for (const auto& [e, c] : p.coeffs()) level = std::max(level, c.level());
    return level;
}

std::int64_t common_prime(const CPoly& p) {
    for (const auto& [e, c] : p.coeffs())
        if (c.level() > 0) return c.prime();
    return 0;
}

Complex complex_pow(const Complex& t, std::int64_t e) {
    Complex base = t, acc(Real(1));
    if (e < 0) {
        base = Complex(Real(1)) / t;
        e = -e;
    }
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

template <class K>
std::string poly_string(const LaurentPoly<K>& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [e, c] : p.coeffs()) {
        if (!out.empty()) out += " + ";
        out += "(" + padic::to_string(c) + ")";
        if (e != 0) out += "*t^" + std::to_string(e);
    }
    return out;
}

}  // namespace

DensePoly poly_gcd(DensePoly a, DensePoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        DensePoly r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.empty()) return a;
    const Rational lead = a.back();
    for (auto& c : a) c /= lead;
    return a;
}

DensePoly poly_divide_exact(const DensePoly& a_in, const DensePoly& b_in) {
    DensePoly a = a_in, b = b_in;
    trim(a);
    trim(b);
    if (b.empty()) throw Error("polynomial division by zero");
    if (a.size() < b.size()) {
        if (a.empty()) return {};
        throw Error("inexact polynomial division");
    }
    DensePoly q(a.size() - b.size() + 1);
    while (a.size() >= b.size() && !a.empty()) {
        const Rational f = a.back() / b.back();
        const std::size_t off = a.size() - b.size();
        q[off] = f;
        for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        trim(a);
    }
    if (!a.empty()) throw Error("inexact polynomial division");
    return q;
}

LaurentRational::LaurentRational(Prime p) : p_(p), den_(QPoly(Rational(1))) {}

LaurentRational::LaurentRational(Prime p, CPoly num, QPoly den) : p_(p), num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DomainError("rational function with zero denominator");
    canonicalize();
}

LaurentRational::LaurentRational(Prime p, const QPoly& num, const QPoly& den)
    : LaurentRational(p, to_cyclotomic(num), den) {}

LaurentRational LaurentRational::constant(Prime p, const CycScalar& c) {
    return LaurentRational(p, CPoly(c), QPoly(Rational(1)));
}

LaurentRational LaurentRational::monomial(Prime p, const CycScalar& c, std::int64_t e) {
    return LaurentRational(p, CPoly::monomial(c, e), QPoly(Rational(1)));
}

bool LaurentRational::has_rational_coefficients() const {
    return std::all_of(num_.coeffs().begin(), num_.coeffs().end(), [](const auto& kv) { return kv.second.is_rational(); });
}

void LaurentRational::canonicalize() {
    if (num_.is_zero()) {
        den_ = QPoly(Rational(1));
        return;
    }
    // move all powers of t into the numerator so that D(0) != 0
    const std::int64_t a = den_.min_exponent();
    den_ = den_.shifted(-a);
    num_ = num_.shifted(-a);
    const std::int64_t b = num_.min_exponent();
    const CPoly shifted = num_.shifted(-b);

    const int level = common_level(shifted);
    const std::int64_t p = common_prime(shifted);
    const std::size_t width = level == 0 ? 1 : static_cast<std::size_t>(shifted.coeffs().begin()->second.basis_coefficients(p, level).size());
    const auto degree = static_cast<std::size_t>(shifted.max_exponent());
    std::vector<DensePoly> comps(width, DensePoly(degree + 1));
    for (const auto& [e, c] : shifted.coeffs()) {
        const auto coords = level == 0 ? std::vector<Rational>{c.rational_value()} : c.basis_coefficients(p, level);
        for (std::size_t j = 0; j < width; ++j) comps[j][static_cast<std::size_t>(e)] = coords[j];
    }
    DensePoly d = dense(den_);
    DensePoly g = d;
    for (const auto& comp : comps) {
        if (g.size() <= 1) break;
        g = poly_gcd(g, comp);
    }
    g = poly_gcd(g, g);  // monic
    d = poly_divide_exact(d, g);
    for (auto& comp : comps) comp = poly_divide_exact(comp, g);

    const Rational lead = d.back();
    for (auto& c : d) c /= lead;
    CPoly n;
    for (std::size_t i = 0; i <= degree; ++i) {
        std::vector<Rational> coords(width);
        bool any = false;
        for (std::size_t j = 0; j < width; ++j) {
            if (i < comps[j].size()) coords[j] = comps[j][i] / lead;
            any = any || coords[j] != 0;
        }
        if (!any) continue;
        const CycScalar c = level == 0 ? CycScalar(coords[0]) : CycScalar::from_basis(Prime(p), level, coords);
        n.add(static_cast<std::int64_t>(i) + b, c);
    }
    num_ = std::move(n);
    den_ = sparse(d);
}

LaurentRational LaurentRational::substitute(const Rational& c, std::int64_t k) const {
    if (c == 0 || k == 0) throw DomainError("degenerate substitution");
    CPoly n;
    for (const auto& [e, a] : num_.coeffs()) n.add(e * k, a * int_power(c, e));
    QPoly d;
    for (const auto& [e, a] : den_.coeffs()) d.add(e * k, a * int_power(c, e));
    return LaurentRational(p_, std::move(n), std::move(d));
}

CycScalar LaurentRational::evaluate(const Rational& t) const {
    Rational dv = 0;
    for (const auto& [e, a] : den_.coeffs()) dv += a * int_power(t, e);
    if (dv == 0) throw DomainError("evaluation at a pole t = " + padic::to_string(t));
    if (t == 0 && !num_.is_zero() && num_.min_exponent() < 0) throw DomainError("evaluation at t = 0 with negative powers");
    CycScalar nv;
    for (const auto& [e, a] : num_.coeffs()) nv += a * int_power(t, e);
    return nv * (Rational(1) / dv);
}

Complex LaurentRational::denominator_at(const Complex& t) const {
    Complex s;
    for (const auto& [e, a] : den_.coeffs()) s += complex_pow(t, e) * to_real(a);
    return s;
}

Complex LaurentRational::numerator_at(const Complex& t) const {
    Complex s;
    for (const auto& [e, a] : num_.coeffs()) s += complex_pow(t, e) * a.to_complex();
    return s;
}

Complex LaurentRational::evaluate(const Complex& t) const {
    const Complex d = denominator_at(t);
    if (d.norm2() == 0) throw DomainError("evaluation at a pole");
    return numerator_at(t) / d;
}

LaurentRational& LaurentRational::operator+=(const LaurentRational& o) {
    if (o.p_ != p_) throw InputError("rational functions over different primes");
    if (den_ == o.den_) {
        *this = LaurentRational(p_, num_ + o.num_, den_);
        return *this;
    }
    *this = LaurentRational(p_, num_ * to_cyclotomic(o.den_) + o.num_ * to_cyclotomic(den_), den_ * o.den_);
    return *this;
}

LaurentRational LaurentRational::operator-() const {
    LaurentRational r = *this;
    r.num_.scale(Rational(-1));
    return r;
}

LaurentRational& LaurentRational::operator-=(const LaurentRational& o) { return *this += -o; }

LaurentRational& LaurentRational::operator*=(const LaurentRational& o) {
    if (o.p_ != p_) throw InputError("rational functions over different primes");
    *this = LaurentRational(p_, num_ * o.num_, den_ * o.den_);
    return *this;
}

LaurentRational& LaurentRational::operator*=(const CycScalar& c) {
    if (c.is_zero()) return *this = LaurentRational(p_);
    num_.scale(c);
    return *this;
}

LaurentRational& LaurentRational::operator/=(const LaurentRational& o) {
    if (o.is_zero()) throw DomainError("division by the zero rational function");
    if (!o.has_rational_coefficients()) throw Error("division by a rational function with cyclotomic coefficients");
    QPoly on;
    for (const auto& [e, c] : o.num_.coeffs()) on.add(e, c.rational_value());
    *this = LaurentRational(p_, num_ * to_cyclotomic(o.den_), den_ * on);
    return *this;
}

bool operator==(const LaurentRational& a, const LaurentRational& b) {
    return a.p_ == b.p_ && a.num_ == b.num_ && a.den_ == b.den_;
}

std::string LaurentRational::to_string() const { return "[" + poly_string(num_) + "] / [" + poly_string(den_) + "]"; }

}  // namespace padic
