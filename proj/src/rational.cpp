#include "padic/rational.hpp"

#include <gmp.h>

namespace padic {

bool is_prime(std::int64_t p) noexcept {
    if (p < 2) return false;
    for (std::int64_t q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

Prime::Prime(std::int64_t p) : p_(p) {
    if (!is_prime(p)) throw InputError("not a prime: " + std::to_string(p));
}

std::int64_t Valuation::value() const {
    if (!v_) throw Error("valuation of zero is infinite");
    return *v_;
}

std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) noexcept {
    if (a.is_infinite() || b.is_infinite()) {
        if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
        return a.is_infinite() ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return *a.v_ <=> *b.v_;
}

Valuation valuation(const Integer& x, Prime p) {
    if (x == 0) return Valuation::infinite();
    Integer y = abs(x);
    std::int64_t v = 0;
    const Integer pp = p.value();
    while (y % pp == 0) {
        y /= pp;
        ++v;
    }
    return Valuation(v);
}

Valuation valuation(const Rational& x, Prime p) {
    if (x == 0) return Valuation::infinite();
    return Valuation(valuation(numerator(x), p).value() - valuation(denominator(x), p).value());
}

Integer ipow(std::int64_t base, std::int64_t e) {
    if (e < 0) throw Error("ipow: negative exponent");
    Integer r;
    mpz_ui_pow_ui(r.backend().data(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
    return r;
}

Rational power_of(Prime p, std::int64_t e) {
    if (e >= 0) return Rational(ipow(p.value(), e));
    return Rational(Integer(1), ipow(p.value(), -e));
}

Rational abs_p(const Rational& x, Prime p) {
    const Valuation v = valuation(x, p);
    if (v.is_infinite()) return Rational(0);
    return power_of(p, -v.value());
}

Rational fractional_part(const Rational& x, Prime p) {
    if (x == 0) return Rational(0);
    Integer den = denominator(x);
    const Integer pp = p.value();
    std::int64_t k = 0;
    while (den % pp == 0) {
        den /= pp;
        ++k;
    }
    if (k == 0) return Rational(0);
    const Integer pk = ipow(p.value(), k);
    // x = a / (p^k m); c = a m^{-1} mod p^k
    Integer inv;
    mpz_invert(inv.backend().data(), den.backend().data(), pk.backend().data());
    Integer c = (numerator(x) * inv) % pk;
    if (c < 0) c += pk;
    return Rational(c, pk);
}

Rational reduce_mod(const Rational& x, std::int64_t r, Prime p) {
    const Rational scale = power_of(p, r);
    return scale * fractional_part(x / scale, p);
}

Rational parse_rational(std::string_view text) {
    auto parse_int = [&](std::string_view s) {
        if (s.empty()) throw InputError("malformed rational: '" + std::string(text) + "'");
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) throw InputError("malformed rational: '" + std::string(text) + "'");
        for (std::size_t j = i; j < s.size(); ++j)
            if (s[j] < '0' || s[j] > '9') throw InputError("malformed rational: '" + std::string(text) + "'");
        return Integer(std::string(s[0] == '+' ? s.substr(1) : s));
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    const Integer num = parse_int(text.substr(0, slash));
    const Integer den = parse_int(text.substr(slash + 1));
    if (den == 0) throw InputError("zero denominator in rational: '" + std::string(text) + "'");
    return Rational(num, den);
}

std::string to_string(const Rational& x) {
    if (denominator(x) == 1) return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

bool RationalVectorLess::operator()(const std::vector<Rational>& a, const std::vector<Rational>& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) return true;
        if (b[i] < a[i]) return false;
    }
    return false;
}

Rational int_power(const Rational& x, std::int64_t e) {
    if (e < 0 && x == 0) throw DomainError("negative power of zero");
    Rational base = e < 0 ? Rational(1) / x : x, acc = 1;
    for (std::int64_t k = e < 0 ? -e : e; k > 0; k >>= 1) {
        if (k & 1) acc *= base;
        base *= base;
    }
    return acc;
}

}  // namespace padic
