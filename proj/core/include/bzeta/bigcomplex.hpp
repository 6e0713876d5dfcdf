#ifndef BZETA_BIGCOMPLEX_HPP
#define BZETA_BIGCOMPLEX_HPP

#include "bzeta/bigreal.hpp"

namespace bzeta {

/// Rectangular complex on top of BigReal. Only the operations the zeta
/// evaluator needs; principal branches throughout.
class BigComplex {
public:
    explicit BigComplex(mpfr_prec_t prec) : re_(0L, prec), im_(0L, prec) {}
    BigComplex(BigReal re, BigReal im) : re_(std::move(re)), im_(std::move(im)) {}
    explicit BigComplex(BigReal re) : re_(std::move(re)), im_(0L, re_.prec()) {}
    BigComplex(long re, mpfr_prec_t prec) : re_(re, prec), im_(0L, prec) {}

    const BigReal& re() const { return re_; }
    const BigReal& im() const { return im_; }
    mpfr_prec_t prec() const { return std::max(re_.prec(), im_.prec()); }

    bool is_real() const { return im_.is_zero(); }
    bool is_finite() const { return re_.is_finite() && im_.is_finite(); }
    /// True when the value is an exact real integer (e.g. parsed from "2").
    bool is_exact_integer() const { return is_real() && re_.is_integer(); }

    BigComplex operator-() const { return {-re_, -im_}; }

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
        return {a.re_ + b.re_, a.im_ + b.im_};
    }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
        return {a.re_ - b.re_, a.im_ - b.im_};
    }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b);

    friend BigComplex operator+(const BigComplex& a, const BigReal& b) { return {a.re_ + b, a.im_}; }
    friend BigComplex operator-(const BigComplex& a, const BigReal& b) { return {a.re_ - b, a.im_}; }
    friend BigComplex operator*(const BigComplex& a, const BigReal& b) { return {a.re_ * b, a.im_ * b}; }
    friend BigComplex operator/(const BigComplex& a, const BigReal& b) { return {a.re_ / b, a.im_ / b}; }
    friend BigComplex operator+(const BigComplex& a, long b) { return {a.re_ + b, a.im_}; }
    friend BigComplex operator-(const BigComplex& a, long b) { return {a.re_ - b, a.im_}; }
    friend BigComplex operator-(long a, const BigComplex& b) { return {a - b.re_, -b.im_}; }
    friend BigComplex operator*(const BigComplex& a, long b) { return {a.re_ * b, a.im_ * b}; }
    friend BigComplex operator/(const BigComplex& a, long b) { return {a.re_ / b, a.im_ / b}; }
    friend BigComplex operator/(long a, const BigComplex& b) { return BigComplex(a, b.prec()) / b; }

    BigComplex& operator+=(const BigComplex& o) { re_ += o.re_; im_ += o.im_; return *this; }

    friend bool operator==(const BigComplex& a, const BigComplex& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

private:
    BigReal re_, im_;
};

BigReal abs(const BigComplex& z);
BigComplex sin(const BigComplex& z);
BigComplex cos(const BigComplex& z);
BigComplex exp(const BigComplex& z);
/// base^e for a positive real base: exp(e ln base).
BigComplex pow(const BigReal& base, const BigComplex& e);

} // namespace bzeta

#endif
