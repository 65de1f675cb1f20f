#include "padic/random.hpp"

namespace padic {

Rational random_ppower_rational(Rng& rng, Prime p, int max_den_exp, int max_num) {
    std::uniform_int_distribution<int> num(-max_num, max_num);
    std::uniform_int_distribution<int> e(0, max_den_exp);
    return Rational(num(rng)) / power_of(p, e(rng));
}

Point random_point(Rng& rng, Prime p, int n, int max_den_exp, int max_num) {
    Point x = Point::zero(n);
    for (auto& c : x.coords) c = random_ppower_rational(rng, p, max_den_exp, max_num);
    return x;
}

TestFunction random_test_function(Rng& rng, Prime p, int n, const RandomShape& shape) {
    std::uniform_int_distribution<int> count(1, shape.max_terms);
    std::uniform_int_distribution<std::int64_t> scale(shape.min_scale, shape.max_scale);
    std::uniform_int_distribution<int> coef(-4, 4), twisted(0, 2), root(0, 20);
    const int span = static_cast<int>(p.value() * p.value());
    TestFunction f(p, n);
    while (f.is_zero()) {
        const int k = count(rng);
        for (int i = 0; i < k; ++i) {
            const std::int64_t r = scale(rng);
            const Point center = random_point(rng, p, n, shape.max_center_den_exp, span);
            Point twist = Point::zero(n);
            // about a third of the terms carry a character
            if (twisted(rng) == 0) twist = random_point(rng, p, n, shape.max_twist_den_exp + static_cast<int>(std::max<std::int64_t>(r, 0)), span);
            CycScalar c(Rational(coef(rng)));
            if (twisted(rng) == 1) c *= CycScalar::root_of_unity(p, 1, Integer(root(rng)));
            f.add_term(c, twist, Ball(p, center, r));
        }
    }
    return f;
}

TestFunction random_zero_integral_function(Rng& rng, Prime p, int n, const RandomShape& shape) {
    while (true) {
        TestFunction f = random_test_function(rng, p, n, shape);
        TestFunction l = decompose_lw(f).l_part;
        if (!l.is_zero()) return l;
    }
}

}  // namespace padic
