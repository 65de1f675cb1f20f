#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace padic {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input (bad rational, non-prime p, dimension mismatch).
class InputError : public Error {
public:
    using Error::Error;
};

/// Evaluation outside the domain of a formula (a pole, an excluded exponent).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A pairing or integral whose defining series does not converge.
class DivergenceError : public Error {
public:
    using Error::Error;
};

/// A search or refinement hit its configured budget; the result is inconclusive.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// A prime number, checked at construction.
class Prime {
public:
    explicit Prime(std::int64_t p);

    std::int64_t value() const noexcept { return p_; }
    operator std::int64_t() const noexcept { return p_; }

    friend bool operator==(Prime a, Prime b) noexcept { return a.p_ == b.p_; }

private:
    std::int64_t p_;
};

bool is_prime(std::int64_t p) noexcept;

/// p-adic valuation; v(0) is a separate infinite value rather than a large integer.
class Valuation {
public:
    static Valuation infinite() noexcept { return Valuation(); }
    explicit Valuation(std::int64_t v) noexcept : v_(v) {}

    bool is_infinite() const noexcept { return !v_.has_value(); }
    /// Throws if infinite.
    std::int64_t value() const;

    friend bool operator==(const Valuation&, const Valuation&) = default;
    friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) noexcept;

private:
    Valuation() noexcept = default;
    std::optional<std::int64_t> v_;
};

Valuation valuation(const Integer& x, Prime p);
Valuation valuation(const Rational& x, Prime p);

/// |x|_p = p^{-v(x)}, |0|_p = 0.
Rational abs_p(const Rational& x, Prime p);

/// p^e as an exact rational; e may be negative.
Rational power_of(Prime p, std::int64_t e);
Integer ipow(std::int64_t base, std::int64_t e);
/// x^e for any integer e (x != 0 when e < 0).
Rational int_power(const Rational& x, std::int64_t e);

/// The p-adic fractional part {x}_p: the unique c/p^k with 0 <= c < p^k and x - c/p^k in Z_p.
Rational fractional_part(const Rational& x, Prime p);

/// Canonical representative of x modulo p^r Z_p: p^r {x p^{-r}}_p, a rational in [0, p^r)
/// whose denominator is a power of p.
Rational reduce_mod(const Rational& x, std::int64_t r, Prime p);

/// Parses "a", "-a" or "a/b" (b > 0 after normalization). Throws InputError.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& x);

/// Lexicographic order on coordinate vectors, used to key maps.
struct RationalVectorLess {
    bool operator()(const std::vector<Rational>& a, const std::vector<Rational>& b) const;
};

}  // namespace padic
