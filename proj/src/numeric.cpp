#include "padic/numeric.hpp"

#include <cmath>
#include <sstream>

#include <boost/math/constants/constants.hpp>

namespace padic {

namespace {
unsigned g_bits = kDefaultPrecisionBits;

unsigned digits_for(unsigned bits) {
    return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
}
}  // namespace

void set_precision_bits(unsigned bits) {
    if (bits < 24) throw InputError("precision must be at least 24 bits");
    g_bits = bits;
    Real::default_precision(digits_for(bits));
}

unsigned precision_bits() { return g_bits; }

PrecisionScope::PrecisionScope(unsigned bits) : saved_(g_bits) { set_precision_bits(bits); }
PrecisionScope::~PrecisionScope() { set_precision_bits(saved_); }

namespace {
struct InitPrecision {
    InitPrecision() { Real::default_precision(digits_for(kDefaultPrecisionBits)); }
} g_init;
}  // namespace

Real to_real(const Rational& x) {
    Real r;
    mpfr_set_q(r.backend().data(), x.backend().data(), MPFR_RNDN);
    return r;
}

Real real_pi() { return boost::math::constants::pi<Real>(); }

Real real_pow(std::int64_t p, const Real& e) { return exp(e * log(Real(p))); }

std::string to_string(const Real& x) {
    std::ostringstream os;
    os.precision(static_cast<std::streamsize>(digits_for(g_bits)));
    os << x;
    return os.str();
}

Real parse_real(const std::string& text) {
    try {
        return Real(text);
    } catch (const std::exception&) {
        throw InputError("malformed real number: '" + text + "'");
    }
}

Complex unit_root(const Integer& k, const Integer& m) {
    Integer kk = k % m;
    if (kk < 0) kk += m;
    const Real angle = 2 * real_pi() * to_real(Rational(kk, m));
    return Complex(cos(angle), sin(angle));
}

}  // namespace padic
