#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "padic/laurent.hpp"
#include "padic/polynomial.hpp"
#include "padic/schwartz.hpp"

namespace padic {

using Json = nlohmann::ordered_json;

/// Rationals are "num/den" strings. Parsers take the JSON pointer of the value
/// so that InputError messages name the offending location.
Json to_json(const Rational& q);
Rational rational_from_json(const Json& j, const std::string& where = "");

/// {"level": K, "coeffs": [...]} in the power basis of Q(zeta_{p^K}); level 0 is a rational.
Json to_json(const CycScalar& c);
CycScalar cyc_from_json(const Json& j, Prime p, const std::string& where = "");

Json to_json(const Point& x);
Point point_from_json(const Json& j, int n, const std::string& where = "");

/// Reals carry their precision: {"value": "...", "precision_bits": b}.
Json to_json(const Real& x);
Json to_json(const Complex& z);

Json to_json(const TestFunction& phi);
TestFunction test_function_from_json(const Json& j, const std::string& where = "");

Json to_json(const IntPolynomial& f, Prime p);
struct PolynomialInput {
    Prime p;
    IntPolynomial f;
};
PolynomialInput polynomial_from_json(const Json& j, const std::string& where = "");

/// num maps exponents to rationals, or to cyclotomic objects when a coefficient is not rational.
Json to_json(const LaurentRational& r);
LaurentRational laurent_from_json(const Json& j, const std::string& where = "");

/// Accepts [[...], ...] or {"points": [[...], ...]}.
std::vector<Point> points_from_json(const Json& j, int n, const std::string& where = "");

/// Parses text; syntax errors become InputError with the byte offset.
Json parse_json_text(const std::string& text, const std::string& source);
Json read_json_file(const std::string& path);

}  // namespace padic
