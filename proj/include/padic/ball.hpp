#pragma once

#include <cstdint>
#include <vector>

#include "padic/cyclotomic.hpp"
#include "padic/rational.hpp"

namespace padic {

/// A point of Q_p^n with rational coordinates.
struct Point {
    std::vector<Rational> coords;

    Point() = default;
    explicit Point(std::vector<Rational> c) : coords(std::move(c)) {}
    static Point zero(int n) { return Point(std::vector<Rational>(static_cast<std::size_t>(n))); }

    int dim() const noexcept { return static_cast<int>(coords.size()); }
    bool is_zero() const;

    friend Point operator+(const Point& a, const Point& b);
    friend Point operator-(const Point& a, const Point& b);
    Point operator-() const;
    friend Point operator*(const Rational& s, const Point& a);
    friend bool operator==(const Point&, const Point&) = default;
    friend bool operator<(const Point& a, const Point& b) { return RationalVectorLess{}(a.coords, b.coords); }
};

Rational dot(const Point& a, const Point& b);

/// min_i v(x_i); infinite for the zero vector.
Valuation valuation(const Point& x, Prime p);

/// ||x||_p = max_i |x_i|_p
Rational sup_norm(const Point& x, Prime p);

/// Coordinatewise canonical representative modulo (p^r Z_p)^n.
Point reduce_mod(const Point& x, std::int64_t r, Prime p);

/// The polydisc center + (p^scale Z_p)^n in canonical form.
class Ball {
public:
    Ball(Prime p, Point center, std::int64_t scale);
    /// (p^r Z_p)^n
    static Ball polydisc(Prime p, int n, std::int64_t r);

    Prime prime() const noexcept { return p_; }
    int dim() const noexcept { return center_.dim(); }
    const Point& center() const noexcept { return center_; }
    std::int64_t scale() const noexcept { return scale_; }

    bool contains(const Point& x) const;
    bool contains(const Ball& other) const;
    bool contains_origin() const { return center_.is_zero(); }
    /// Haar measure p^{-scale n}.
    Rational measure() const;
    /// log_p of max ||x|| over the ball.
    std::int64_t max_norm_exponent() const;
    /// The p^n sub-balls of scale + 1, in lexicographic digit order.
    std::vector<Ball> children() const;
    /// The ball of the given (smaller) scale that contains this one.
    Ball ancestor(std::int64_t scale) const;

    friend bool operator==(const Ball& a, const Ball& b) { return a.scale_ == b.scale_ && a.center_ == b.center_; }
    friend bool operator<(const Ball& a, const Ball& b) {
        if (a.scale_ != b.scale_) return a.scale_ < b.scale_;
        return a.center_ < b.center_;
    }

private:
    Prime p_;
    Point center_;
    std::int64_t scale_;
};

/// Children of a ball; free-function alias of Ball::children.
inline std::vector<Ball> residue_children(const Ball& b) { return b.children(); }

}  // namespace padic
