#include "padic/ball.hpp"

#include <algorithm>

namespace padic {

namespace {
void require_same_dim(const Point& a, const Point& b) {
    if (a.dim() != b.dim()) throw InputError("dimension mismatch");
}
}  // namespace

bool Point::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](const Rational& c) { return c == 0; });
}

Point operator+(const Point& a, const Point& b) {
    require_same_dim(a, b);
    Point r = a;
    for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
    return r;
}

Point operator-(const Point& a, const Point& b) {
    require_same_dim(a, b);
    Point r = a;
    for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] -= b.coords[i];
    return r;
}

Point Point::operator-() const {
    Point r = *this;
    for (auto& c : r.coords) c = -c;
    return r;
}

Point operator*(const Rational& s, const Point& a) {
    Point r = a;
    for (auto& c : r.coords) c *= s;
    return r;
}

Rational dot(const Point& a, const Point& b) {
    require_same_dim(a, b);
    Rational s = 0;
    for (std::size_t i = 0; i < a.coords.size(); ++i) s += a.coords[i] * b.coords[i];
    return s;
}

Valuation valuation(const Point& x, Prime p) {
    Valuation best = Valuation::infinite();
    for (const auto& c : x.coords) best = std::min(best, valuation(c, p));
    return best;
}

Rational sup_norm(const Point& x, Prime p) {
    const Valuation v = valuation(x, p);
    return v.is_infinite() ? Rational(0) : power_of(p, -v.value());
}

Point reduce_mod(const Point& x, std::int64_t r, Prime p) {
    Point out = x;
    for (auto& c : out.coords) c = reduce_mod(c, r, p);
    return out;
}

Ball::Ball(Prime p, Point center, std::int64_t scale)
    : p_(p), center_(reduce_mod(center, scale, p)), scale_(scale) {
    if (center_.dim() < 1) throw InputError("ball dimension must be at least 1");
}

Ball Ball::polydisc(Prime p, int n, std::int64_t r) { return Ball(p, Point::zero(n), r); }

bool Ball::contains(const Point& x) const {
    if (x.dim() != dim()) throw InputError("dimension mismatch");
    return valuation(x - center_, p_) >= Valuation(scale_);
}

bool Ball::contains(const Ball& other) const { return other.scale_ >= scale_ && contains(other.center_); }

Rational Ball::measure() const { return power_of(p_, -scale_ * dim()); }

std::int64_t Ball::max_norm_exponent() const {
    if (contains_origin()) return -scale_;
    return -valuation(center_, p_).value();
}

std::vector<Ball> Ball::children() const {
    const int n = dim();
    const std::int64_t p = p_.value();
    const Rational step = power_of(p_, scale_);
    std::vector<Ball> out;
    std::vector<std::int64_t> digits(static_cast<std::size_t>(n), 0);
    while (true) {
        Point c = center_;
        for (int i = 0; i < n; ++i) c.coords[static_cast<std::size_t>(i)] += step * digits[static_cast<std::size_t>(i)];
        out.emplace_back(p_, std::move(c), scale_ + 1);
        int i = n - 1;
        while (i >= 0 && ++digits[static_cast<std::size_t>(i)] == p) digits[static_cast<std::size_t>(i--)] = 0;
        if (i < 0) break;
    }
    return out;
}

Ball Ball::ancestor(std::int64_t scale) const {
    if (scale > scale_) throw Error("ancestor scale must not exceed the ball scale");
    return Ball(p_, center_, scale);
}

}  // namespace padic
