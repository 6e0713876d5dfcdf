#include "bzeta/bigreal.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace bzeta {

BigReal BigReal::from_rational(const Rational& q, mpfr_prec_t prec) {
    BigReal r(prec);
    mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
    return r;
}

BigReal BigReal::from_string(std::string_view s, mpfr_prec_t prec) {
    BigReal r(prec);
    std::string buf(s);
    if (mpfr_set_str(r.v_, buf.c_str(), 10, MPFR_RNDN) != 0)
        throw std::invalid_argument("not a valid decimal number: " + buf);
    return r;
}

BigReal BigReal::pi(mpfr_prec_t prec) {
    BigReal r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

BigReal BigReal::log2_const(mpfr_prec_t prec) {
    BigReal r(prec);
    mpfr_const_log2(r.v_, MPFR_RNDN);
    return r;
}

BigReal BigReal::pow2(long e, mpfr_prec_t prec) {
    BigReal r(prec);
    mpfr_set_si_2exp(r.v_, 1, e, MPFR_RNDN);
    return r;
}

std::string BigReal::to_string(size_t digits) const {
    if (is_nan()) return "nan";
    if (is_inf()) return sign() < 0 ? "-inf" : "inf";
    if (is_zero()) return "0";
    if (digits == 0)
        digits = static_cast<size_t>(std::ceil(static_cast<double>(prec()) * 0.30103)) + 2;
    mpfr_exp_t e;
    char* s = mpfr_get_str(nullptr, &e, 10, digits, v_, MPFR_RNDN);
    std::string m(s);
    mpfr_free_str(s);
    std::string sign_part;
    if (!m.empty() && m[0] == '-') {
        sign_part = "-";
        m.erase(0, 1);
    }
    // trim trailing zeros of the mantissa, keep at least one digit
    size_t last = m.find_last_not_of('0');
    m.erase(last + 1);
    std::string out = sign_part + m.substr(0, 1);
    if (m.size() > 1) out += "." + m.substr(1);
    out += "e" + std::to_string(static_cast<long>(e) - 1);
    return out;
}

namespace {
using mpfr_unop = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);
BigReal unop(mpfr_unop f, const BigReal& x) {
    BigReal r(x.prec());
    f(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}
} // namespace

BigReal abs(const BigReal& x) { return unop(mpfr_abs, x); }
BigReal sqrt(const BigReal& x) { return unop(mpfr_sqrt, x); }
BigReal exp(const BigReal& x) { return unop(mpfr_exp, x); }
BigReal log(const BigReal& x) { return unop(mpfr_log, x); }
BigReal log1p(const BigReal& x) { return unop(mpfr_log1p, x); }
BigReal sin(const BigReal& x) { return unop(mpfr_sin, x); }
BigReal cos(const BigReal& x) { return unop(mpfr_cos, x); }
BigReal sinh(const BigReal& x) { return unop(mpfr_sinh, x); }
BigReal cosh(const BigReal& x) { return unop(mpfr_cosh, x); }
BigReal floor(const BigReal& x) {
    BigReal r(x.prec());
    mpfr_floor(r.raw(), x.raw());
    return r;
}

BigReal pow(const BigReal& base, const BigReal& e) {
    BigReal r(std::max(base.prec(), e.prec()));
    mpfr_pow(r.raw(), base.raw(), e.raw(), MPFR_RNDN);
    return r;
}

BigReal pow(const BigReal& base, long e) {
    BigReal r(base.prec());
    mpfr_pow_si(r.raw(), base.raw(), e, MPFR_RNDN);
    return r;
}

BigReal max(const BigReal& a, const BigReal& b) { return a >= b ? a : b; }

} // namespace bzeta
