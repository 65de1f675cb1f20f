#include "doctest.h"
#include "padic/random.hpp"
#include "padic/schwartz.hpp"

using namespace padic;

namespace {
Rational q(const char* s) { return parse_rational(s); }

Point pt(std::initializer_list<Rational> c) { return Point(std::vector<Rational>(c)); }

Point unit_vector(int n, const Rational& v) {
    Point x = Point::zero(n);
    x.coords[0] = v;
    return x;
}

constexpr std::int64_t kPrimes[] = {2, 3, 5, 7};
}  // namespace

TEST_CASE("evaluate examples") {
    const Prime p(3);
    const auto chi0 = TestFunction::chi(p, 2, 0);
    CHECK(chi0(pt({Rational(1), q("1/2")})) == CycScalar(1));
    CHECK(chi0(pt({q("1/3"), Rational(0)})) == CycScalar(0));

    TestFunction f(p, 2);
    f.add_term(CycScalar(1), unit_vector(2, q("1/3")), Ball::polydisc(p, 2, 0));
    CHECK(f(unit_vector(2, Rational(1))) == CycScalar::root_of_unity(p, 1, 1));

    CHECK((f + f * CycScalar(-1))(pt({Rational(2), Rational(5)})).is_zero());
    CHECK_THROWS_AS(f(Point::zero(3)), InputError);
}

TEST_CASE("twist canonicalization is value preserving and idempotent") {
    Rng rng(5);
    for (std::int64_t pv : kPrimes) {
        const Prime p(pv);
        for (int i = 0; i < 20; ++i) {
            const Ball b(p, random_point(rng, p, 2, 1, 30), std::uniform_int_distribution<int>(-1, 2)(rng));
            const Point twist = random_point(rng, p, 2, 3, 200);
            const Term t = make_term(CycScalar(1), twist, b);
            const Term again = make_term(t.coeff, t.twist, t.ball);
            CHECK(again.twist == t.twist);
            CHECK(again.coeff == t.coeff);
            for (int j = 0; j < 5; ++j) {
                const Point x = b.center() + power_of(p, b.scale()) * random_point(rng, p, 2, 0, 50);
                CHECK(t.coeff * psi(dot(t.twist, x), p) == psi(dot(twist, x), p));
            }
        }
    }
}

TEST_CASE("canonical form has disjoint balls and preserves values") {
    Rng rng(17);
    for (std::int64_t pv : kPrimes) {
        const Prime p(pv);
        for (int i = 0; i < 15; ++i) {
            const auto f = random_test_function(rng, p, 2);
            const auto c = f.canonical();
            const auto& ts = c.terms();
            for (std::size_t a = 0; a < ts.size(); ++a)
                for (std::size_t b = a + 1; b < ts.size(); ++b)
                    if (!(ts[a].ball == ts[b].ball)) CHECK_FALSE(ts[a].ball.contains(ts[b].ball.center()));
            for (int j = 0; j < 10; ++j) {
                const Point x = random_point(rng, p, 2, 2, 100);
                CHECK(f(x) == c(x));
            }
            CHECK(c.canonical().terms().size() == ts.size());
        }
    }
}

TEST_CASE("fourier examples") {
    for (std::int64_t pv : kPrimes) {
        const Prime p(pv);
        for (int n : {1, 2, 3})
            for (std::int64_t r : {-2, 0, 1, 3}) {
                const auto lhs = fourier(TestFunction::chi(p, n, r));
                const auto rhs = TestFunction::chi(p, n, -r) * CycScalar(power_of(p, -n * r));
                CHECK(lhs == rhs);
            }
        CHECK(fourier(TestFunction::chi(p, 2, 0)) == TestFunction::chi(p, 2, 0));
        // shifted ball a + (pZ_p)^n
        const Point a = pt({Rational(1), Rational(0)});
        const auto shifted = TestFunction::indicator(Ball(p, a, 1));
        TestFunction expected(p, 2);
        expected.add_term(CycScalar(power_of(p, -2)), -a, Ball::polydisc(p, 2, -1));
        CHECK(fourier(shifted) == expected);
    }
}

TEST_CASE("integrate examples") {
    const Prime p(5);
    CHECK(integrate(TestFunction::chi(p, 2, 3)) == CycScalar(power_of(p, -6)));
    CHECK(integrate(TestFunction::chi(p, 1, -2)) == CycScalar(Rational(25)));
    TestFunction f(p, 2);
    f.add_term(CycScalar(1), unit_vector(2, q("1/25")), Ball::polydisc(p, 2, 0));
    CHECK(integrate(f).is_zero());
    Rng rng(2);
    for (int i = 0; i < 10; ++i) CHECK(integrate(random_zero_integral_function(rng, p, 2)).is_zero());
}

TEST_CASE("convolution examples") {
    Rng rng(23);
    for (std::int64_t pv : kPrimes) {
        const Prime p(pv);
        for (int n : {1, 2}) {
            const auto chi0 = TestFunction::chi(p, n, 0);
            CHECK(convolve(chi0, chi0) == chi0);
            const auto f = random_test_function(rng, p, n);
            const auto g = random_test_function(rng, p, n);
            CHECK(convolve(f, g) == convolve(g, f));
            const std::int64_t l = local_constancy_data(f).exponent;
            const auto delta = TestFunction::chi(p, n, l) * CycScalar(power_of(p, l * n));
            CHECK(convolve(f, delta) == f);
            // direct integral at a point
            const Point x = random_point(rng, p, n, 1, 20);
            CHECK(convolve(f, g)(x) == integrate(f.translated_reflected(x) * g));
        }
    }
}

TEST_CASE("local constancy examples") {
    for (std::int64_t pv : kPrimes) {
        const Prime p(pv);
        const auto d0 = local_constancy_data(TestFunction::chi(p, 2, 0));
        CHECK(d0.exponent == 0);
        CHECK(d0.r_phi == 0);
        const auto d2 = local_constancy_data(TestFunction::chi(p, 2, -2));
        CHECK(d2.exponent == 0);
        CHECK(d2.r_phi == 0);
        TestFunction g(p, 1);
        g.add_term(CycScalar(1), pt({power_of(p, -2)}), Ball::polydisc(p, 1, 0));
        CHECK(local_constancy_data(g).exponent == 2);
        const auto d3 = local_constancy_data(TestFunction::chi(p, 1, 3));
        CHECK(d3.exponent == 3);
        CHECK(d3.r_phi == 3);
        CHECK_THROWS_AS(local_constancy_data(TestFunction(p, 2)), Error);
    }
}

TEST_CASE("local constancy exponent is minimal") {
    Rng rng(31);
    for (std::int64_t pv : {2, 3}) {
        const Prime p(pv);
        for (int i = 0; i < 10; ++i) {
            const auto f = random_test_function(rng, p, 1);
            const auto d = local_constancy_data(f);
            // translating by p^l leaves f unchanged, by p^{l-1} does not (when l > 0)
            const auto shift = [&](std::int64_t e) {
                return f.translated_reflected(pt({power_of(p, e)})).reflected();
            };
            CHECK(shift(d.exponent) == f);
            if (d.exponent > 0) CHECK_FALSE(shift(d.exponent - 1) == f);
        }
    }
}

TEST_CASE("decomposition examples") {
    for (std::int64_t pv : kPrimes) {
        const Prime p(pv);
        const auto chi0 = TestFunction::chi(p, 2, 0);
        const auto d = decompose_lw(chi0);
        CHECK(d.w_part == chi0);
        CHECK(d.l_part.is_zero());

        const auto shifted = TestFunction::indicator(Ball(p, pt({Rational(1), Rational(0)}), 1));
        const auto ds = decompose_lw(shifted);
        const std::int64_t r = local_constancy_data(shifted).r_phi;
        CHECK(r == 1);
        CHECK(ds.w_part == TestFunction::chi(p, 2, r) * CycScalar(power_of(p, r * 2) * power_of(p, -2)));
        CHECK(integrate(ds.l_part).is_zero());
        CHECK(ds.l_part + ds.w_part == shifted);
    }
    Rng rng(8);
    const Prime p(3);
    const auto l = random_zero_integral_function(rng, p, 2);
    CHECK(decompose_lw(l).w_part.is_zero());
}

TEST_CASE("fourier inversion, parseval and reflection on random functions") {
    Rng rng(42);
    for (std::int64_t pv : kPrimes) {
        const Prime p(pv);
        for (int n : {1, 2, 3}) {
            for (int i = 0; i < 8; ++i) {
                const auto f = random_test_function(rng, p, n);
                const auto ff = fourier(f);
                CHECK(fourier(ff, Direction::inverse) == f);
                CHECK(fourier(fourier(f, Direction::inverse)) == f);
                const CycScalar lhs = integrate(f * f.conj());
                const CycScalar rhs = integrate(ff * ff.conj());
                CHECK(lhs == rhs);
                CHECK(lhs == lhs.conj());
                CHECK(fourier(fourier(f.reflected())) == f);
                const auto d = decompose_lw(f);
                CHECK(d.l_part + d.w_part == f);
                const auto again = decompose_lw(d.l_part + d.w_part);
                CHECK(again.l_part == d.l_part);
                CHECK(again.w_part == d.w_part);
                CHECK(is_in_w(d.w_part));
                CHECK(is_in_w(fourier(d.w_part)));
            }
        }
    }
}

TEST_CASE("w membership") {
    const Prime p(2);
    auto w = TestFunction::chi(p, 2, -1) * CycScalar(3) - TestFunction::chi(p, 2, 2);
    CHECK(is_in_w(w));
    CHECK(is_in_w(fourier(w)));
    CHECK_FALSE(is_in_w(TestFunction::indicator(Ball(p, pt({Rational(1), Rational(0)}), 1))));
}
