#include "padic/serialize.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace padic {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw InputError((where.empty() ? std::string("/") : where) + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object()) fail(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(where, std::string("missing field '") + key + "'");
    return *it;
}

std::int64_t int_from_json(const Json& j, const std::string& where) {
    if (!j.is_number_integer()) fail(where, "expected an integer, got " + j.dump());
    return j.get<std::int64_t>();
}

int small_int(const Json& j, const std::string& where, std::int64_t lo, std::int64_t hi) {
    const std::int64_t v = int_from_json(j, where);
    if (v < lo || v > hi) fail(where, "value " + std::to_string(v) + " out of range");
    return static_cast<int>(v);
}

Prime prime_from_json(const Json& j, const std::string& where) {
    const std::int64_t v = int_from_json(j, where);
    if (!is_prime(v)) fail(where, "not a prime: " + std::to_string(v));
    return Prime(v);
}

Integer integer_from_json(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
    if (j.is_string()) {
        const Rational q = rational_from_json(j, where);
        if (denominator(q) != 1) fail(where, "expected an integer, got " + j.dump());
        return numerator(q);
    }
    fail(where, "expected an integer, got " + j.dump());
}

Json integer_to_json(const Integer& z) {
    if (z >= std::numeric_limits<std::int64_t>::min() && z <= std::numeric_limits<std::int64_t>::max())
        return z.convert_to<std::int64_t>();
    return z.str();
}

std::int64_t exponent_key(const std::string& key, const std::string& where) {
    try {
        std::size_t used = 0;
        const long long e = std::stoll(key, &used);
        if (used == key.size()) return e;
    } catch (const std::exception&) {
    }
    fail(where, "exponent key '" + key + "' is not an integer");
}

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (!j.is_string()) fail(where, "expected a rational string, got " + j.dump());
    try {
        return parse_rational(j.get<std::string>());
    } catch (const InputError& e) {
        fail(where, e.what());
    }
}

Json to_json(const CycScalar& c) {
    Json coeffs = Json::array();
    if (c.is_rational()) {
        coeffs.push_back(to_json(c.rational_value()));
        return Json{{"level", 0}, {"coeffs", coeffs}};
    }
    for (const auto& q : c.basis_coefficients(c.prime(), c.level())) coeffs.push_back(to_json(q));
    return Json{{"level", c.level()}, {"coeffs", coeffs}};
}

CycScalar cyc_from_json(const Json& j, Prime p, const std::string& where) {
    if (j.is_string() || j.is_number_integer()) return CycScalar(rational_from_json(j, where));
    const int level = small_int(field(j, "level", where), where + "/level", 0, 12);
    const Json& arr = field(j, "coeffs", where);
    if (!arr.is_array()) fail(where + "/coeffs", "expected an array");
    std::vector<Rational> coeffs;
    for (std::size_t i = 0; i < arr.size(); ++i)
        coeffs.push_back(rational_from_json(arr[i], where + "/coeffs/" + std::to_string(i)));
    if (level == 0) {
        if (coeffs.size() != 1) fail(where + "/coeffs", "level 0 takes exactly one coefficient");
        return CycScalar(coeffs[0]);
    }
    try {
        return CycScalar::from_basis(p, level, coeffs);
    } catch (const InputError& e) {
        fail(where + "/coeffs", e.what());
    }
}

Json to_json(const Point& x) {
    Json out = Json::array();
    for (const auto& c : x.coords) out.push_back(to_json(c));
    return out;
}

Point point_from_json(const Json& j, int n, const std::string& where) {
    if (!j.is_array()) fail(where, "expected an array of " + std::to_string(n) + " rationals");
    if (static_cast<int>(j.size()) != n)
        fail(where, "expected " + std::to_string(n) + " coordinates, got " + std::to_string(j.size()));
    std::vector<Rational> c;
    for (std::size_t i = 0; i < j.size(); ++i) c.push_back(rational_from_json(j[i], where + "/" + std::to_string(i)));
    return Point(std::move(c));
}

Json to_json(const Real& x) { return Json{{"value", to_string(x)}, {"precision_bits", precision_bits()}}; }

Json to_json(const Complex& z) {
    return Json{{"re", to_string(z.re)}, {"im", to_string(z.im)}, {"precision_bits", precision_bits()}};
}

Json to_json(const TestFunction& phi) {
    Json terms = Json::array();
    for (const auto& t : phi.terms())
        terms.push_back(Json{{"coeff", to_json(t.coeff)},
                             {"twist", to_json(t.twist)},
                             {"center", to_json(t.ball.center())},
                             {"scale", t.ball.scale()}});
    return Json{{"p", phi.prime().value()}, {"n", phi.dim()}, {"terms", terms}};
}

TestFunction test_function_from_json(const Json& j, const std::string& where) {
    const Prime p = prime_from_json(field(j, "p", where), where + "/p");
    const int n = small_int(field(j, "n", where), where + "/n", 1, 16);
    const Json& terms = field(j, "terms", where);
    if (!terms.is_array()) fail(where + "/terms", "expected an array");
    TestFunction phi(p, n);
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const std::string at = where + "/terms/" + std::to_string(i);
        const Json& t = terms[i];
        const CycScalar c = cyc_from_json(field(t, "coeff", at), p, at + "/coeff");
        const Point twist = t.contains("twist") ? point_from_json(t["twist"], n, at + "/twist") : Point::zero(n);
        const Point center = t.contains("center") ? point_from_json(t["center"], n, at + "/center") : Point::zero(n);
        const std::int64_t scale = int_from_json(field(t, "scale", at), at + "/scale");
        phi.add_term(c, twist, Ball(p, center, scale));
    }
    return phi;
}

Json to_json(const IntPolynomial& f, Prime p) {
    Json mons = Json::array();
    for (const auto& m : f.monomials()) mons.push_back(Json{{"c", integer_to_json(m.coeff)}, {"e", m.exponents}});
    return Json{{"p", p.value()}, {"n", f.dim()}, {"monomials", mons}};
}

PolynomialInput polynomial_from_json(const Json& j, const std::string& where) {
    const Prime p = prime_from_json(field(j, "p", where), where + "/p");
    const int n = small_int(field(j, "n", where), where + "/n", 1, 16);
    std::vector<Monomial> mons;
    if (j.contains("text")) {
        if (!j["text"].is_string()) fail(where + "/text", "expected a string");
        try {
            return {p, parse_polynomial(j["text"].get<std::string>(), n)};
        } catch (const InputError& e) {
            fail(where + "/text", e.what());
        }
    }
    const Json& arr = field(j, "monomials", where);
    if (!arr.is_array()) fail(where + "/monomials", "expected an array");
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string at = where + "/monomials/" + std::to_string(i);
        Monomial m;
        m.coeff = integer_from_json(field(arr[i], "c", at), at + "/c");
        const Json& e = field(arr[i], "e", at);
        if (!e.is_array() || static_cast<int>(e.size()) != n) fail(at + "/e", "expected " + std::to_string(n) + " exponents");
        for (std::size_t k = 0; k < e.size(); ++k)
            m.exponents.push_back(small_int(e[k], at + "/e/" + std::to_string(k), 0, 64));
        mons.push_back(std::move(m));
    }
    return {p, IntPolynomial(n, std::move(mons))};
}

Json to_json(const LaurentRational& r) {
    Json num = Json::object(), den = Json::object();
    for (const auto& [e, c] : r.num().coeffs())
        num[std::to_string(e)] = c.is_rational() ? to_json(c.rational_value()) : to_json(c);
    for (const auto& [e, c] : r.den().coeffs()) den[std::to_string(e)] = to_json(c);
    return Json{{"p", r.prime().value()}, {"num", num}, {"den", den}};
}

LaurentRational laurent_from_json(const Json& j, const std::string& where) {
    const Prime p = prime_from_json(field(j, "p", where), where + "/p");
    const Json& num = field(j, "num", where);
    const Json& den = field(j, "den", where);
    if (!num.is_object()) fail(where + "/num", "expected an object of exponent: coefficient");
    if (!den.is_object()) fail(where + "/den", "expected an object of exponent: coefficient");
    CPoly n;
    QPoly d;
    for (const auto& [key, value] : num.items()) {
        const std::string at = where + "/num/" + key;
        n.add(exponent_key(key, at), cyc_from_json(value, p, at));
    }
    for (const auto& [key, value] : den.items()) {
        const std::string at = where + "/den/" + key;
        d.add(exponent_key(key, at), rational_from_json(value, at));
    }
    if (d.is_zero()) fail(where + "/den", "zero denominator");
    return LaurentRational(p, n, d);
}

std::vector<Point> points_from_json(const Json& j, int n, const std::string& where) {
    const bool wrapped = j.is_object();
    const Json& arr = wrapped ? field(j, "points", where) : j;
    const std::string base = wrapped ? where + "/points" : where;
    if (!arr.is_array()) fail(base, "expected an array of points");
    std::vector<Point> out;
    for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(point_from_json(arr[i], n, base + "/" + std::to_string(i)));
    return out;
}

Json parse_json_text(const std::string& text, const std::string& source) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(source + ": JSON syntax error at byte " + std::to_string(e.byte) + ": " + e.what());
    }
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json_text(buf.str(), path);
}

}  // namespace padic
