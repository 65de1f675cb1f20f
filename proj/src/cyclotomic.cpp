#include "padic/cyclotomic.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace padic {

namespace {
using TermMap = std::map<std::int64_t, Rational>;

std::vector<CycScalar::Term> to_terms(const TermMap& m) {
    std::vector<CycScalar::Term> out;
    out.reserve(m.size());
    for (const auto& [e, c] : m)
        if (c != 0) out.emplace_back(e, c);
    return out;
}
}  // namespace

std::int64_t CycScalar::order(std::int64_t p, int level) {
    std::int64_t m = 1;
    for (int i = 0; i < level; ++i) {
        if (m > std::numeric_limits<std::int64_t>::max() / p / 4) throw Error("cyclotomic level too large");
        m *= p;
    }
    return m;
}

std::int64_t CycScalar::totient(std::int64_t p, int level) {
    if (level == 0) return 1;
    return order(p, level - 1) * (p - 1);
}

CycScalar::CycScalar(const Rational& q) {
    if (q != 0) terms_.emplace_back(0, q);
}

CycScalar::CycScalar(std::int64_t p, int level, std::vector<Term> terms)
    : p_(level == 0 ? 0 : p), level_(level), terms_(std::move(terms)) {
    normalize_level();
}

std::vector<CycScalar::Term> CycScalar::reduce(std::int64_t p, int level, const std::vector<Term>& raw) {
    if (level == 0) {
        Rational s = 0;
        for (const auto& t : raw) s += t.second;
        return s == 0 ? std::vector<Term>{} : std::vector<Term>{{0, s}};
    }
    const std::int64_t phi = totient(p, level);
    const std::int64_t step = order(p, level - 1);
    TermMap acc;
    for (const auto& [e, c] : raw) {
        if (e < phi) {
            acc[e] += c;
            continue;
        }
        // zeta^{phi + r} = - sum_{j=0}^{p-2} zeta^{j p^{K-1} + r}
        const std::int64_t r = e - phi;
        for (std::int64_t j = 0; j + 1 < p; ++j) acc[j * step + r] -= c;
    }
    return to_terms(acc);
}

void CycScalar::normalize_level() {
    while (level_ > 0) {
        if (terms_.empty()) {
            level_ = 0;
            break;
        }
        if (level_ == 1) {
            if (terms_.size() == 1 && terms_[0].first == 0) {
                level_ = 0;
                continue;
            }
            break;
        }
        const bool all_divisible =
            std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.first % p_ == 0; });
        if (!all_divisible) break;
        for (auto& t : terms_) t.first /= p_;
        --level_;
    }
    if (level_ == 0) p_ = 0;
}

CycScalar CycScalar::root_of_unity(Prime p, int level, const Integer& exponent) {
    const std::int64_t m = order(p.value(), level);
    Integer e = exponent % m;
    if (e < 0) e += m;
    const std::vector<Term> raw{{static_cast<std::int64_t>(e), Rational(1)}};
    return CycScalar(p.value(), level, reduce(p.value(), level, raw));
}

CycScalar CycScalar::from_basis(Prime p, int level, const std::vector<Rational>& coeffs) {
    if (static_cast<std::int64_t>(coeffs.size()) != totient(p.value(), level))
        throw InputError("cyclotomic coefficient vector has wrong length for level " + std::to_string(level));
    std::vector<Term> terms;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != 0) terms.emplace_back(static_cast<std::int64_t>(i), coeffs[i]);
    return CycScalar(p.value(), level, std::move(terms));
}

Rational CycScalar::rational_value() const {
    if (level_ != 0) throw Error("cyclotomic value is not rational");
    return terms_.empty() ? Rational(0) : terms_[0].second;
}

std::vector<CycScalar::Term> CycScalar::embedded_terms(int level) const {
    if (level < level_) throw Error("cannot embed into a smaller cyclotomic level");
    if (level_ == 0 || level == level_) return terms_;
    const std::int64_t factor = order(p_, level - level_);
    std::vector<Term> out = terms_;
    for (auto& t : out) t.first *= factor;
    return out;
}

std::vector<Rational> CycScalar::basis_coefficients(std::int64_t p, int level) const {
    if (level_ != 0 && p != p_) throw Error("prime mismatch in cyclotomic arithmetic");
    std::vector<Rational> out(static_cast<std::size_t>(totient(p, level)));
    if (level_ == 0) {
        if (!terms_.empty()) out[0] = terms_[0].second;
        return out;
    }
    for (const auto& [e, c] : embedded_terms(level)) out[static_cast<std::size_t>(e)] = c;
    return out;
}

std::int64_t CycScalar::common_prime(const CycScalar& a, const CycScalar& b) {
    if (a.level_ == 0) return b.p_;
    if (b.level_ == 0) return a.p_;
    if (a.p_ != b.p_) throw Error("prime mismatch in cyclotomic arithmetic");
    return a.p_;
}

CycScalar& CycScalar::operator+=(const CycScalar& o) {
    if (o.is_zero()) return *this;
    const std::int64_t p = common_prime(*this, o);
    const int level = std::max(level_, o.level_);
    TermMap acc;
    for (const auto& [e, c] : embedded_terms(level)) acc[e] += c;
    for (const auto& [e, c] : o.embedded_terms(level)) acc[e] += c;
    *this = CycScalar(p, level, to_terms(acc));
    return *this;
}

CycScalar& CycScalar::operator-=(const CycScalar& o) { return *this += -o; }

CycScalar CycScalar::operator-() const {
    CycScalar r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

CycScalar& CycScalar::operator*=(const Rational& q) {
    if (q == 0) {
        *this = CycScalar();
        return *this;
    }
    for (auto& t : terms_) t.second *= q;
    return *this;
}

CycScalar& CycScalar::operator*=(const CycScalar& o) {
    if (is_zero() || o.is_zero()) {
        *this = CycScalar();
        return *this;
    }
    if (o.level_ == 0) return *this *= o.terms_[0].second;
    if (level_ == 0) {
        const Rational q = terms_[0].second;
        *this = o;
        return *this *= q;
    }
    const std::int64_t p = common_prime(*this, o);
    const int level = std::max(level_, o.level_);
    const std::int64_t m = order(p, level);
    const auto a = embedded_terms(level);
    const auto b = o.embedded_terms(level);
    TermMap acc;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) acc[(ea + eb) % m] += ca * cb;
    *this = CycScalar(p, level, reduce(p, level, to_terms(acc)));
    return *this;
}

CycScalar CycScalar::conj() const {
    if (level_ == 0) return *this;
    const std::int64_t m = order(p_, level_);
    TermMap acc;
    for (const auto& [e, c] : terms_) acc[(m - e) % m] += c;
    return CycScalar(p_, level_, reduce(p_, level_, to_terms(acc)));
}

Complex CycScalar::to_complex() const {
    Complex sum;
    if (level_ == 0) {
        if (!terms_.empty()) sum.re = to_real(terms_[0].second);
        return sum;
    }
    const Integer m = order(p_, level_);
    for (const auto& [e, c] : terms_) sum += unit_root(Integer(e), m) * to_real(c);
    return sum;
}

std::string to_string(const CycScalar& c) {
    if (c.is_rational()) return to_string(c.rational_value());
    std::string out;
    const std::string root = "z" + std::to_string(Integer(pow(Integer(c.prime()), static_cast<unsigned>(c.level()))).convert_to<std::int64_t>());
    for (const auto& [e, q] : c.terms()) {
        if (!out.empty()) out += " + ";
        out += to_string(q);
        if (e != 0) out += "*" + root + "^" + std::to_string(e);
    }
    return out;
}

CycScalar psi(const Rational& x, Prime p) {
    const Rational frac = fractional_part(x, p);
    if (frac == 0) return CycScalar(1);
    const Integer den = denominator(frac);
    int k = 0;
    for (Integer d = den; d > 1; d /= p.value()) ++k;
    return CycScalar::root_of_unity(p, k, numerator(frac));
}

}  // namespace padic
