#include <random>

#include "doctest.h"
#include "padic/radial.hpp"
#include "padic/random.hpp"
#include "padic/zeta.hpp"

using namespace padic;

namespace {
Rational q(const char* s) { return parse_rational(s); }

QPoly qp(std::initializer_list<std::pair<std::int64_t, Rational>> terms) {
    QPoly r;
    for (const auto& [e, c] : terms) r.add(e, c);
    return r;
}

std::int64_t vint(const Integer& x, Prime p) { return valuation(Rational(x), p).value(); }

constexpr std::int64_t kPrimes[] = {2, 3, 5, 7};

IntPolynomial norm_form(std::int64_t p) {
    if (p == 2) return parse_polynomial("x1^2 + x1*x2 + x2^2", 2);
    if (p == 5) return parse_polynomial("x1^2 - 2*x2^2", 2);
    return parse_polynomial("x1^2 + x2^2", 2);
}

IntPolynomial ramified_form(std::int64_t p) { return parse_polynomial("x1^2 - " + std::to_string(p) + "*x2^2", 2); }
}  // namespace

TEST_CASE("laurent rational canonical form") {
    const Prime p(3);
    const LaurentRational a(p, qp({{0, 1}, {2, -1}}), qp({{0, 1}, {1, -1}}));  // (1-t^2)/(1-t)
    CHECK(a == LaurentRational(p, qp({{0, 1}, {1, 1}}), qp({{0, 1}})));
    CHECK(a.is_laurent_polynomial());
    // t^{-2}(1 + t) / (t^{-1} (2 - 2t)) = t^{-1} (1 + t) / (2 (1 - t))
    const LaurentRational b(p, qp({{-2, 1}, {-1, 1}}), qp({{-1, 2}, {0, -2}}));
    CHECK(b.den().min_exponent() == 0);
    CHECK(b.den().coeff(1) == 1);  // monic
    CHECK(b.evaluate(q("1/2")) == CycScalar(Rational(3)));
    CHECK_THROWS_AS(b.evaluate(Rational(1)), DomainError);
    CHECK(a + b - b == a);
    CHECK(a * b / b == a);
    // substitution t -> 2 t^{-1} then back
    CHECK(b.substitute(Rational(2), -1).substitute(Rational(2), -1) == b);
    // cyclotomic numerator: zeta_3 t / (1 - t) - zeta_3 / (1 - t) = -zeta_3
    const CycScalar z = CycScalar::root_of_unity(p, 1, 1);
    CPoly num;
    num.add(1, z);
    num.add(0, -z);
    CHECK(LaurentRational(p, num, qp({{0, 1}, {1, -1}})) == LaurentRational::constant(p, -z));
}

TEST_CASE("polynomial parsing and evaluation") {
    const auto f = parse_polynomial("3*x1^2*x2 - x2^3 + 2*x1*x2*x2", 2);
    CHECK(f.degree() == 3);
    CHECK(f.is_homogeneous());
    CHECK(f(Point({Rational(1), Rational(2)})) == 6 - 8 + 8);
    CHECK_FALSE(parse_polynomial("x1^2 + x2", 2).is_homogeneous());
    CHECK_THROWS_AS(parse_polynomial("x3^2", 2), InputError);
    CHECK_THROWS_AS(parse_polynomial("x1^^2", 2), InputError);
    CHECK(parse_polynomial(f.to_string(), 2) == f);
    // homogeneity f(c x) = c^d f(x)
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<int> num(-30, 30), den(1, 30);
    for (int i = 0; i < 20; ++i) {
        const Rational c(num(rng), den(rng));
        const Point x({Rational(num(rng), den(rng)), Rational(num(rng), den(rng))});
        CHECK(f(c * x) == c * c * c * f(x));
    }
}

TEST_CASE("ellipticity examples") {
    const auto sum3 = parse_polynomial("x1^2 + x2^2 + x3^2", 3);
    CHECK(ellipticity_check(sum3, Prime(2)).status == EllipticStatus::elliptic);
    const auto r3 = ellipticity_check(sum3, Prime(3));
    REQUIRE(r3.status == EllipticStatus::zero_found);
    CHECK(vint(sum3(r3.witness), Prime(3)) >= r3.witness_depth);
    bool unit = false;
    for (const auto& c : r3.witness) unit = unit || c % 3 != 0;
    CHECK(unit);
    for (std::int64_t pv : kPrimes) {
        const auto x1 = parse_polynomial("x1", 1);
        CHECK(ellipticity_check(x1, Prime(pv)).status == EllipticStatus::elliptic);
        const auto cov = sphere_covering(x1, Prime(pv));
        CHECK(cov.leaves.size() == static_cast<std::size_t>(pv - 1));
        CHECK(cov.m_max == 0);
        const auto c = norm_comparison(cov);
        CHECK(c.c0 == 1);
        CHECK(c.c1 == 1);
    }
    CHECK(ellipticity_check(parse_polynomial("x1^2 + x2", 2), Prime(3)).status == EllipticStatus::not_homogeneous);
    // a singular zero cannot be certified by lifting and exhausts the budget
    const auto sq = parse_polynomial("x1^4 + 2*x1^2*x2^2 + x2^4", 2);  // (x1^2 + x2^2)^2, zero mod 5
    CHECK(ellipticity_check(sq, Prime(5), SearchBudget{6, 100000}).status == EllipticStatus::budget_exceeded);
    CHECK_THROWS_AS(sphere_covering(sq, Prime(5), SearchBudget{6, 100000}), BudgetExceeded);
    CHECK_THROWS_AS(sphere_covering(sum3, Prime(3)), InputError);
}

TEST_CASE("sphere covering partitions the sphere with constant |f|") {
    std::mt19937_64 rng(9);
    for (std::int64_t pv : kPrimes) {
        const Prime p(pv);
        for (const auto& f : {norm_form(pv), ramified_form(pv), parse_polynomial("x1^2", 1)}) {
            const auto cov = sphere_covering(f, p);
            CHECK(cov.total_measure() == 1 - power_of(p, -f.dim()));
            for (const auto& leaf : cov.leaves) {
                CHECK(leaf.value_exponent < leaf.depth);
                const Integer mod = ipow(p, leaf.depth);
                std::uniform_int_distribution<int> lift(0, 1000);
                for (int i = 0; i < 50; ++i) {
                    std::vector<Integer> y = leaf.representative;
                    for (auto& c : y) c += mod * lift(rng);
                    CHECK(vint(f(y), p) == leaf.value_exponent);
                }
            }
        }
    }
    const auto sum2 = parse_polynomial("x1^2 + x2^2", 2);
    CHECK(sphere_covering(sum2, Prime(3)).total_measure() == q("8/9"));
}

TEST_CASE("covering extremes agree with an exhaustive residue scan") {
    const Prime p(2);
    const auto f = parse_polynomial("x1^2 + x2^2 + x3^2", 3);
    const auto cov = sphere_covering(f, p);
    int depth = 0;
    for (const auto& l : cov.leaves) depth = std::max(depth, l.depth);
    const std::int64_t mod = ipow(p, depth).convert_to<std::int64_t>();
    std::int64_t vmax = -1, vmin = 1 << 20;
    for (std::int64_t a = 0; a < mod; ++a)
        for (std::int64_t b = 0; b < mod; ++b)
            for (std::int64_t c = 0; c < mod; ++c) {
                if (a % 2 == 0 && b % 2 == 0 && c % 2 == 0) continue;
                const std::int64_t v = vint(f(std::vector<Integer>{a, b, c}), p);
                vmax = std::max(vmax, v);
                vmin = std::min(vmin, v);
            }
    CHECK(vmax == cov.m_max);
    CHECK(vmin == cov.m_min);
    CHECK(cov.lemma_m() == cov.m_max + 1);
}

TEST_CASE("norm comparison bounds hold on random points and are attained") {
    std::mt19937_64 rng(1);
    for (std::int64_t pv : kPrimes) {
        const Prime p(pv);
        for (const auto& f : {norm_form(pv), ramified_form(pv)}) {
            const auto cov = sphere_covering(f, p);
            const auto c = norm_comparison(cov);
            const int d = f.degree();
            for (int i = 0; i < 200; ++i) {
                Point x = random_point(rng, p, 2, 3, 500);
                if (x.is_zero()) continue;
                const Rational nx = int_power(sup_norm(x, p), d);
                const Rational fx = abs_p(f(x), p);
                CHECK(c.c0 * nx <= fx);
                CHECK(fx <= c.c1 * nx);
            }
            bool lo = false, hi = false;
            for (const auto& leaf : cov.leaves) {
                const Rational fx = abs_p(f(leaf.point()), p);
                lo = lo || fx == c.c0;
                hi = hi || fx == c.c1;
            }
            CHECK(lo);
            CHECK(hi);
        }
        CHECK(norm_comparison(sphere_covering(ramified_form(pv), p)).c0 < 1);
    }
}

TEST_CASE("igusa zeta examples") {
    for (std::int64_t pv : kPrimes) {
        const Prime p(pv);
        const auto x1 = sphere_covering(parse_polynomial("x1", 1), p);
        const LaurentRational z = igusa_zeta(x1);
        CHECK(z == LaurentRational(p, qp({{0, 1 - power_of(p, -1)}}), qp({{0, 1}, {1, -power_of(p, -1)}})));
        for (const auto& f : {norm_form(pv), ramified_form(pv), parse_polynomial("x1^2", 1), parse_polynomial("x1", 1)}) {
            const auto cov = sphere_covering(f, p);
            const LaurentRational zf = igusa_zeta(cov);
            CHECK(zf.evaluate(Rational(1)) == CycScalar(1));
            // pole at s = -n/d, i.e. t = p^{n/d}
            const Real t0 = pow(Real(pv), Real(f.dim()) / f.degree());
            CHECK(zf.denominator_at(Complex(t0)).abs() < Real(1e-30));
            CHECK(zf.numerator_at(Complex(t0)).abs() > Real(1e-6));
            const auto h = HomogeneousSymbol::elliptic(f, cov);
            CHECK(zeta_pairing(h, TestFunction::chi(p, f.dim(), 0)) == zf);
            for (std::int64_t r : {1, 2, 3}) {
                const auto phi = TestFunction::chi(p, f.dim(), -r) * CycScalar(power_of(p, -f.dim() * r));
                CHECK(zeta_pairing(h, phi) == LaurentRational::monomial(p, CycScalar(1), -f.degree() * r) * zf);
            }
        }
        // a ball away from 0 where |x1| = 1: p^{-1} t^0
        const auto h1 = HomogeneousSymbol::elliptic(parse_polynomial("x1", 1), x1);
        const auto off = TestFunction::indicator(Ball(p, Point({Rational(1)}), 1));
        CHECK(zeta_pairing(h1, off) == LaurentRational::constant(p, CycScalar(power_of(p, -1))));
    }
}

TEST_CASE("igusa zeta against a truncated residue sum") {
    const Prime p(3);
    const auto f = parse_polynomial("x1^2 + x2^2", 2);
    const auto cov = sphere_covering(f, p);
    const LaurentRational z = igusa_zeta(cov);
    const Rational t = q("1/9");
    const int K = static_cast<int>(cov.m_max) + 3;
    const std::int64_t mod = ipow(p, K).convert_to<std::int64_t>();
    const Rational cell = power_of(p, -2 * K);
    // unit sphere by exhaustive scan mod p^K: every class must have v(f) < K
    Rational sphere = 0;
    int ambiguous = 0;
    for (std::int64_t a = 0; a < mod; ++a)
        for (std::int64_t b = 0; b < mod; ++b) {
            if (a % 3 == 0 && b % 3 == 0) continue;
            const std::int64_t e = vint(f(std::vector<Integer>{a, b}), p);
            if (e < K)
                sphere += cell * int_power(t, e);
            else
                ++ambiguous;
        }
    CHECK(ambiguous == 0);
    // shells ||x|| = p^{-j}: p^{-2j} t^{2j} times the sphere integral, truncated
    Real sum = 0, ratio = to_real(power_of(p, -2) * t * t), term = to_real(sphere);
    int j = 0;
    for (; j < 40; ++j, term *= ratio) sum += term;
    const Real tail = term / (1 - ratio);
    CHECK(tail < Real(1e-15));
    CHECK(abs(sum - z.evaluate(to_real(t)).re) < Real(1e-12));
}
