#include <random>
#include <set>

#include "doctest.h"
#include "padic/ball.hpp"
#include "padic/cyclotomic.hpp"

using namespace padic;

namespace {
Rational q(const char* s) { return parse_rational(s); }

Rational random_ppower_rational(std::mt19937_64& rng, Prime p, int max_den_exp, int max_num) {
    std::uniform_int_distribution<int> num(-max_num, max_num);
    std::uniform_int_distribution<int> e(0, max_den_exp);
    return Rational(num(rng)) / power_of(p, e(rng));
}
}  // namespace

TEST_CASE("valuation examples") {
    CHECK(valuation(Rational(24), Prime(2)) == Valuation(3));
    CHECK(abs_p(Rational(24), Prime(2)) == q("1/8"));
    CHECK(valuation(Rational(0), Prime(3)).is_infinite());
    CHECK(valuation(q("7/25"), Prime(5)) == Valuation(-2));
    CHECK(Valuation::infinite() > Valuation(1000000));
    CHECK_THROWS_AS(Prime(9), InputError);
}

TEST_CASE("sup norm examples") {
    CHECK(sup_norm(Point({q("1/3"), Rational(9)}), Prime(3)) == 3);
    CHECK(sup_norm(Point::zero(3), Prime(5)) == 0);
    CHECK(sup_norm(Point({Rational(3), q("1/4")}), Prime(2)) == 4);
}

TEST_CASE("fractional part and reduction") {
    const Prime p(2);
    CHECK(fractional_part(q("1/3"), p) == 0);
    CHECK(fractional_part(q("5/4"), p) == q("1/4"));
    CHECK(fractional_part(q("1/12"), p) == q("3/4"));  // 1/12 = (1/3)/4, 1/3 = 3 mod 4
    CHECK(reduce_mod(q("1/3"), 3, p) == 3);
    CHECK(reduce_mod(Rational(24), 3, p) == 0);
    CHECK(reduce_mod(q("-1/2"), -1, p) == 0);
    CHECK(reduce_mod(q("-1/4"), -1, p) == q("1/4"));
}

TEST_CASE("psi examples") {
    CHECK(psi(q("1/2"), Prime(2)) == CycScalar(-1));
    CHECK(psi(Rational(17), Prime(5)) == CycScalar(1));
    CHECK(psi(q("2/7"), Prime(5)) == CycScalar(1));  // 2/7 in Z_5
    const CycScalar z3 = psi(q("1/3"), Prime(3));
    CHECK(z3.level() == 1);
    CHECK(z3 == CycScalar::root_of_unity(Prime(3), 1, 1));
    CHECK(z3 * z3 * z3 == CycScalar(1));
}

TEST_CASE("cyclotomic arithmetic examples") {
    const CycScalar i4 = CycScalar::root_of_unity(Prime(2), 2, 1);
    const CycScalar z2 = CycScalar::root_of_unity(Prime(2), 1, 1);
    CHECK(z2 * z2 == CycScalar(1));
    CHECK(i4 * i4 == CycScalar(-1));
    CHECK(i4.conj() * i4 == CycScalar(1));
    for (std::int64_t p : {2, 3, 5, 7}) {
        CycScalar s;
        for (int j = 0; j < p; ++j) s += CycScalar::root_of_unity(Prime(p), 1, j);
        CHECK(s.is_zero());
        CycScalar s2;
        for (int j = 0; j < p * p; ++j) s2 += CycScalar::root_of_unity(Prime(p), 2, j);
        CHECK(s2.is_zero());
    }
    // embedding across levels: zeta_9^3 = zeta_3
    CHECK(CycScalar::root_of_unity(Prime(3), 2, 3) == CycScalar::root_of_unity(Prime(3), 1, 1));
    CHECK_THROWS(CycScalar::root_of_unity(Prime(3), 1, 1) + CycScalar::root_of_unity(Prime(5), 1, 1));
}

TEST_CASE("psi is additive on random p-power rationals") {
    std::mt19937_64 rng(42);
    for (std::int64_t pv : {2, 3, 5, 7}) {
        const Prime p(pv);
        for (int i = 0; i < 50; ++i) {
            const Rational x = random_ppower_rational(rng, p, 3, 400);
            const Rational y = random_ppower_rational(rng, p, 3, 400);
            CHECK(psi(x + y, p) == psi(x, p) * psi(y, p));
        }
    }
}

TEST_CASE("ultrametric inequality") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> num(-500, 500), den(1, 200);
    for (std::int64_t pv : {2, 3, 5, 7}) {
        const Prime p(pv);
        for (int i = 0; i < 200; ++i) {
            const Rational x(num(rng), den(rng)), y(num(rng), den(rng));
            const Rational ax = abs_p(x, p), ay = abs_p(y, p), as = abs_p(x + y, p);
            CHECK(as <= std::max(ax, ay));
            if (ax != ay) CHECK(as == std::max(ax, ay));
        }
    }
}

TEST_CASE("cyclotomic reduction is canonical and matches numeric rendering") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> expo(0, 200), coef(-5, 5);
    const Real tol = Real(1) / pow(Real(2), 100);
    for (std::int64_t pv : {2, 3, 5, 7}) {
        const Prime p(pv);
        for (int i = 0; i < 20; ++i) {
            CycScalar a, b;
            for (int k = 0; k < 4; ++k) {
                a += CycScalar::root_of_unity(p, 2, expo(rng)) * Rational(coef(rng));
                b += CycScalar::root_of_unity(p, 3, expo(rng)) * Rational(coef(rng));
            }
            const CycScalar prod = a * b;
            const Complex direct = a.to_complex() * b.to_complex();
            CHECK((prod.to_complex() - direct).abs() < tol);
            // conj(x) x is real and equals |x|^2
            const CycScalar m = a.conj() * a;
            CHECK(abs(m.to_complex().im) < tol);
            CHECK(abs(m.to_complex().re - a.to_complex().norm2()) < tol);
            // re-adding zero keeps the canonical form
            CHECK(prod + CycScalar() == prod);
            CHECK((prod - prod).is_zero());
        }
    }
}

TEST_CASE("residue children") {
    const Prime p2(2), p3(3);
    {
        const auto kids = residue_children(Ball::polydisc(p2, 1, 0));
        REQUIRE(kids.size() == 2);
        CHECK(kids[0] == Ball(p2, Point({Rational(0)}), 1));
        CHECK(kids[1] == Ball(p2, Point({Rational(1)}), 1));
    }
    {
        const auto kids = residue_children(Ball(p3, Point({Rational(1)}), 1));
        REQUIRE(kids.size() == 3);
        CHECK(kids[0].center().coords[0] == 1);
        CHECK(kids[1].center().coords[0] == 4);
        CHECK(kids[2].center().coords[0] == 7);
        CHECK(kids[0].scale() == 2);
    }
    for (std::int64_t pv : {2, 3, 5}) {
        for (int n : {1, 2, 3}) {
            const Ball b(Prime(pv), Point(std::vector<Rational>(static_cast<std::size_t>(n), q("1/2"))), -1);
            const auto kids = b.children();
            CHECK(kids.size() == static_cast<std::size_t>(std::pow(pv, n)));
            Rational total = 0;
            std::set<Ball> distinct(kids.begin(), kids.end());
            CHECK(distinct.size() == kids.size());
            for (const auto& k : kids) {
                total += k.measure();
                CHECK(b.contains(k));
                for (const auto& other : kids)
                    if (!(other == k)) CHECK_FALSE(k.contains(other.center()));
            }
            CHECK(total == b.measure());
        }
    }
}

TEST_CASE("balls are nested or disjoint") {
    std::mt19937_64 rng(3);
    const Prime p(3);
    std::uniform_int_distribution<int> num(-40, 40), sc(-2, 3);
    for (int i = 0; i < 300; ++i) {
        const Ball a(p, Point({Rational(num(rng), 9), Rational(num(rng))}), sc(rng));
        const Ball b(p, Point({Rational(num(rng), 3), Rational(num(rng), 9)}), sc(rng));
        const bool intersect = a.contains(b.center()) || b.contains(a.center());
        if (intersect) CHECK((a.contains(b) || b.contains(a)));
    }
}
