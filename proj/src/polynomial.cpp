#include "padic/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace padic {

IntPolynomial::IntPolynomial(int n, std::vector<Monomial> monomials) : n_(n) {
    if (n < 1) throw InputError("polynomial dimension must be at least 1");
    std::map<std::vector<int>, Integer> acc;
    for (auto& m : monomials) {
        if (static_cast<int>(m.exponents.size()) != n) throw InputError("monomial exponent vector has wrong length");
        if (std::any_of(m.exponents.begin(), m.exponents.end(), [](int e) { return e < 0; }))
            throw InputError("negative exponent in polynomial");
        acc[m.exponents] += m.coeff;
    }
    for (auto& [e, c] : acc)
        if (c != 0) monomials_.push_back(Monomial{c, e});
}

int IntPolynomial::degree() const {
    int d = 0;
    for (const auto& m : monomials_) {
        int s = 0;
        for (int e : m.exponents) s += e;
        d = std::max(d, s);
    }
    return d;
}

bool IntPolynomial::is_homogeneous() const {
    const int d = degree();
    return std::all_of(monomials_.begin(), monomials_.end(), [&](const Monomial& m) {
        int s = 0;
        for (int e : m.exponents) s += e;
        return s == d;
    });
}

Rational IntPolynomial::operator()(const Point& x) const {
    if (x.dim() != n_) throw InputError("dimension mismatch");
    Rational sum = 0;
    for (const auto& m : monomials_) {
        Rational term(m.coeff);
        for (int i = 0; i < n_; ++i)
            for (int k = 0; k < m.exponents[static_cast<std::size_t>(i)]; ++k) term *= x.coords[static_cast<std::size_t>(i)];
        sum += term;
    }
    return sum;
}

Integer IntPolynomial::operator()(const std::vector<Integer>& x) const {
    if (static_cast<int>(x.size()) != n_) throw InputError("dimension mismatch");
    Integer sum = 0;
    for (const auto& m : monomials_) {
        Integer term = m.coeff;
        for (int i = 0; i < n_; ++i) {
            const auto e = m.exponents[static_cast<std::size_t>(i)];
            if (e > 0) term *= Integer(pow(x[static_cast<std::size_t>(i)], static_cast<unsigned>(e)));
        }
        sum += term;
    }
    return sum;
}

IntPolynomial IntPolynomial::derivative(int i) const {
    if (i < 0 || i >= n_) throw InputError("derivative index out of range");
    std::vector<Monomial> out;
    for (const auto& m : monomials_) {
        const int e = m.exponents[static_cast<std::size_t>(i)];
        if (e == 0) continue;
        Monomial d = m;
        d.coeff *= e;
        d.exponents[static_cast<std::size_t>(i)] = e - 1;
        out.push_back(std::move(d));
    }
    return IntPolynomial(n_, std::move(out));
}

std::string IntPolynomial::to_string() const {
    if (monomials_.empty()) return "0";
    std::string out;
    for (const auto& m : monomials_) {
        std::string vars;
        for (int i = 0; i < n_; ++i) {
            const int e = m.exponents[static_cast<std::size_t>(i)];
            if (e == 0) continue;
            vars += "*x" + std::to_string(i + 1);
            if (e > 1) vars += "^" + std::to_string(e);
        }
        std::string c = m.coeff.str();
        if (!out.empty()) out += c[0] == '-' ? " - " : " + ";
        if (c[0] == '-' && !out.empty()) c = c.substr(1);
        if (vars.empty())
            out += c;
        else if (c == "1")
            out += vars.substr(1);
        else if (c == "-1")
            out += "-" + vars.substr(1);
        else
            out += c + vars;
    }
    return out;
}

bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.n_ != b.n_ || a.monomials_.size() != b.monomials_.size()) return false;
    for (std::size_t i = 0; i < a.monomials_.size(); ++i)
        if (a.monomials_[i].coeff != b.monomials_[i].coeff || a.monomials_[i].exponents != b.monomials_[i].exponents)
            return false;
    return true;
}

namespace {

class PolyParser {
public:
    PolyParser(const std::string& text, int n) : s_(text), n_(n) {}

    IntPolynomial parse() {
        std::vector<Monomial> out;
        skip();
        if (pos_ == s_.size()) fail("empty polynomial");
        bool first = true;
        while (pos_ < s_.size()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = get() == '-' ? -1 : 1;
                skip();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            out.push_back(monomial(sign));
            first = false;
            skip();
        }
        return IntPolynomial(n_, std::move(out));
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw InputError("cannot parse polynomial '" + s_ + "': " + what);
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char get() { return s_[pos_++]; }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    Integer number() {
        const std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected a number");
        return Integer(s_.substr(start, pos_ - start));
    }
    int small_number() {
        const Integer v = number();
        if (v > 1000) fail("exponent or index too large");
        return v.convert_to<int>();
    }

    Monomial monomial(int sign) {
        Monomial m{Integer(sign), std::vector<int>(static_cast<std::size_t>(n_), 0)};
        bool need_factor = true;
        while (need_factor) {
            skip();
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                m.coeff *= number();
            } else if (peek() == 'x') {
                get();
                const int idx = small_number();
                if (idx < 1 || idx > n_) fail("variable x" + std::to_string(idx) + " out of range");
                int e = 1;
                skip();
                if (peek() == '^') {
                    get();
                    skip();
                    e = small_number();
                }
                m.exponents[static_cast<std::size_t>(idx - 1)] += e;
            } else {
                fail("unexpected character");
            }
            skip();
            need_factor = peek() == '*';
            if (need_factor) get();
        }
        return m;
    }

    std::string s_;
    int n_;
    std::size_t pos_ = 0;
};

}  // namespace

IntPolynomial parse_polynomial(const std::string& text, int n) { return PolyParser(text, n).parse(); }

}  // namespace padic
