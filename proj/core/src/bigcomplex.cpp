#include "bzeta/bigcomplex.hpp"

namespace bzeta {

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    if (b.is_real()) return {a.re_ / b.re_, a.im_ / b.re_};
    BigReal den = b.re_ * b.re_ + b.im_ * b.im_;
    return {(a.re_ * b.re_ + a.im_ * b.im_) / den, (a.im_ * b.re_ - a.re_ * b.im_) / den};
}

BigReal abs(const BigComplex& z) {
    BigReal r(z.prec());
    mpfr_hypot(r.raw(), z.re().raw(), z.im().raw(), MPFR_RNDN);
    return r;
}

BigComplex sin(const BigComplex& z) {
    if (z.is_real()) return BigComplex(sin(z.re()), BigReal(0L, z.prec()));
    return {sin(z.re()) * cosh(z.im()), cos(z.re()) * sinh(z.im())};
}

BigComplex cos(const BigComplex& z) {
    if (z.is_real()) return BigComplex(cos(z.re()), BigReal(0L, z.prec()));
    return {cos(z.re()) * cosh(z.im()), -(sin(z.re()) * sinh(z.im()))};
}

BigComplex exp(const BigComplex& z) {
    if (z.is_real()) return BigComplex(exp(z.re()), BigReal(0L, z.prec()));
    BigReal m = exp(z.re());
    return {m * cos(z.im()), m * sin(z.im())};
}

BigComplex pow(const BigReal& base, const BigComplex& e) {
    if (e.is_real()) return BigComplex(pow(base, e.re()), BigReal(0L, e.prec()));
    return exp(e * log(base));
}

} // namespace bzeta
