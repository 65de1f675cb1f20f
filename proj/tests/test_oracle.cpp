#include "doctest.h"
#include "padic/operators.hpp"
#include "padic/oracle.hpp"
#include "padic/random.hpp"

using namespace padic;

namespace {
constexpr std::int64_t kPrimes[] = {2, 3, 5, 7};

// Random functions small enough to live on G_K.
TestFunction fitting_function(Rng& rng, Prime p, int n, int k) {
    RandomShape shape;
    shape.min_scale = -1;
    shape.max_scale = 1;
    shape.max_twist_den_exp = 1;
    shape.max_center_den_exp = 1;
    for (;;) {
        auto f = random_test_function(rng, p, n, shape);
        if (required_level(f) <= k) return f;
    }
}
}  // namespace

TEST_CASE("double-double arithmetic") {
    const DoubleDouble third = DoubleDouble::from_real(Real(1) / 3);
    const Real back = (third * DoubleDouble(3.0)).to_real();
    CHECK(abs(back - 1) < Real(1e-31));
    const DoubleDouble big(1e16), tiny(1.0);
    CHECK(((big + tiny) - big).to_real() == 1);
}

TEST_CASE("projection") {
    for (std::int64_t pv : kPrimes) {
        const Prime p(pv);
        const auto g = project(TestFunction::chi(p, 1, 0), 1);
        CHECK(abs(g.total().re - 1) < Real(1e-30));
        CHECK_THROWS_AS(project(TestFunction::chi(p, 1, -2), 1), InputError);
        const auto zero_mass = TestFunction::chi(p, 1, 1) - TestFunction::chi(p, 1, 0) * CycScalar(Rational(1, pv));
        CHECK(project(zero_mass, 1).total().abs() < Real(1e-30));
        CHECK_THROWS_AS(QuotientFunction(p, 2, 6), InputError);
        const auto x = Point({Rational(3, pv)});
        const auto q = project(TestFunction::chi(p, 1, -1), 1);
        CHECK(q.index_of(q.point(q.index_of(x))) == q.index_of(x));
    }
}

TEST_CASE("radix-p transform agrees with the naive sum") {
    Rng rng(42);
    for (std::int64_t pv : kPrimes)
        for (int n : {1, 2})
            for (int k : {1, 2}) {
                const Prime p(pv);
                if (std::pow(double(pv), 2.0 * k * n) > 7000) continue;
                const auto g = project(fitting_function(rng, p, n, k), k);
                for (auto dir : {Direction::forward, Direction::inverse}) {
                    const auto fast = dft(g, dir);
                    const auto slow = dft_naive(g, dir);
                    Real worst = 0;
                    for (std::size_t i = 0; i < g.size(); ++i)
                        worst = std::max(worst, Real((fast.values()[i] - slow.values()[i]).to_complex().abs()));
                    CHECK(worst < Real(1e-28));
                }
            }
}

TEST_CASE("transform on the quotient commutes with the exact transform") {
    Rng rng(7);
    for (std::int64_t pv : kPrimes)
        for (int n : {1, 2}) {
            const Prime p(pv);
            const int k = (n == 2 && pv >= 5) ? 1 : 2;
            const auto chi = project(TestFunction::chi(p, n, 0), k);
            CHECK(compare(dft(chi), TestFunction::chi(p, n, 0), Real(1e-25)).pass);
            for (int i = 0; i < 3; ++i) {
                const auto phi = fitting_function(rng, p, n, k);
                const auto g = project(phi, k);
                const auto spec = dft(g);
                const auto rep = compare(spec, fourier(phi), Real(1e-25));
                CHECK(rep.pass);
                CHECK(compare(dft(spec, Direction::inverse), phi, Real(1e-25)).pass);
                CHECK(abs(spec.l2_norm2() - g.l2_norm2()) < Real(1e-25));
            }
        }
}

TEST_CASE("convolution against direct summation") {
    Rng rng(4);
    for (std::int64_t pv : {2, 3, 5}) {
        const Prime p(pv);
        for (int n : {1, 2}) {
            const int k = (n == 2 && pv > 2) ? 1 : 2;
            const auto a = fitting_function(rng, p, n, k);
            const auto b = fitting_function(rng, p, n, k);
            const auto brute = convolve_direct(project(a, k), project(b, k));
            CHECK(compare(brute, convolve(a, b), Real(1e-18)).pass);
        }
    }
}

TEST_CASE("norm multiplier against the grid") {
    Rng rng(5);
    for (std::int64_t pv : kPrimes)
        for (int n : {1, 2}) {
            const Prime p(pv);
            const int k = (n == 2 && pv >= 5) ? 1 : 2;
            const auto phi = fitting_function(rng, p, n, k);
            for (const Real a : {Real(1) / 2, Real(23) / 10}) {
                const auto brute = norm_multiplier(project(phi, k), a);
                std::vector<std::size_t> idx;
                for (std::size_t i = 0; i < brute.size(); i += std::max<std::size_t>(1, brute.size() / 12)) idx.push_back(i);
                const auto rep = compare(brute, idx, [&](const Point& x) {
                    return multiplier_apply(Multiplier::taibleson(p, n, a), phi, x).value;
                }, Real(1e-10));
                CHECK(rep.pass);
                CHECK(rep.max_abs < Real(1e-25));
            }
        }
}
