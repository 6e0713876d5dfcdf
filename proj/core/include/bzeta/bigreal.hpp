#ifndef BZETA_BIGREAL_HPP
#define BZETA_BIGREAL_HPP

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <string_view>

namespace bzeta {

using Rational = mpq_class;

/// Arbitrary-precision real backed by MPFR. Every value carries an explicit
/// precision in bits; arithmetic rounds to the wider of the two operands.
class BigReal {
public:
    explicit BigReal(mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_nan(v_);
    }
    BigReal(long value, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_si(v_, value, MPFR_RNDN);
    }
    BigReal(const BigReal& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigReal(BigReal&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    BigReal& operator=(const BigReal& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigReal& operator=(BigReal&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigReal() { mpfr_clear(v_); }

    static BigReal from_rational(const Rational& q, mpfr_prec_t prec);
    /// Parses decimal strings, including exponents ("1e-12").
    static BigReal from_string(std::string_view s, mpfr_prec_t prec);
    static BigReal pi(mpfr_prec_t prec);
    static BigReal log2_const(mpfr_prec_t prec);
    /// 2^e as an exact power of two.
    static BigReal pow2(long e, mpfr_prec_t prec);

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_inf() const { return mpfr_inf_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_integer() const { return mpfr_integer_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

    /// Round-trippable decimal string; digits = 0 selects full precision.
    std::string to_string(size_t digits = 0) const;

    BigReal round_to(mpfr_prec_t prec) const {
        BigReal r(prec);
        mpfr_set(r.v_, v_, MPFR_RNDN);
        return r;
    }

    BigReal operator-() const {
        BigReal r(prec());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }

    friend BigReal operator+(const BigReal& a, const BigReal& b) { return binop(mpfr_add, a, b); }
    friend BigReal operator-(const BigReal& a, const BigReal& b) { return binop(mpfr_sub, a, b); }
    friend BigReal operator*(const BigReal& a, const BigReal& b) { return binop(mpfr_mul, a, b); }
    friend BigReal operator/(const BigReal& a, const BigReal& b) { return binop(mpfr_div, a, b); }

    friend BigReal operator+(const BigReal& a, long b) { return binop_si(mpfr_add_si, a, b); }
    friend BigReal operator-(const BigReal& a, long b) { return binop_si(mpfr_sub_si, a, b); }
    friend BigReal operator*(const BigReal& a, long b) { return binop_si(mpfr_mul_si, a, b); }
    friend BigReal operator/(const BigReal& a, long b) { return binop_si(mpfr_div_si, a, b); }
    friend BigReal operator+(long a, const BigReal& b) { return b + a; }
    friend BigReal operator*(long a, const BigReal& b) { return b * a; }
    friend BigReal operator-(long a, const BigReal& b) {
        BigReal r(b.prec());
        mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigReal operator/(long a, const BigReal& b) {
        BigReal r(b.prec());
        mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
        return r;
    }

    BigReal& operator+=(const BigReal& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigReal& operator-=(const BigReal& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigReal& operator*=(const BigReal& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigReal& operator/=(const BigReal& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

    friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator!=(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.v_, b.v_) == 0; }
    friend bool operator<(const BigReal& a, const BigReal& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const BigReal& a, const BigReal& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>(const BigReal& a, const BigReal& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const BigReal& a, const BigReal& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
    friend bool operator==(const BigReal& a, long b) { return mpfr_cmp_si(a.v_, b) == 0 && !a.is_nan(); }
    friend bool operator<(const BigReal& a, long b) { return !a.is_nan() && mpfr_cmp_si(a.v_, b) < 0; }
    friend bool operator>(const BigReal& a, long b) { return !a.is_nan() && mpfr_cmp_si(a.v_, b) > 0; }
    friend bool operator<=(const BigReal& a, long b) { return !a.is_nan() && mpfr_cmp_si(a.v_, b) <= 0; }
    friend bool operator>=(const BigReal& a, long b) { return !a.is_nan() && mpfr_cmp_si(a.v_, b) >= 0; }

private:
    using mpfr_binop = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
    using mpfr_binop_si = int (*)(mpfr_ptr, mpfr_srcptr, long, mpfr_rnd_t);

    static BigReal binop(mpfr_binop f, const BigReal& a, const BigReal& b) {
        BigReal r(std::max(a.prec(), b.prec()));
        f(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    static BigReal binop_si(mpfr_binop_si f, const BigReal& a, long b) {
        BigReal r(a.prec());
        f(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }

    mpfr_t v_;
};

BigReal abs(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal log(const BigReal& x);
BigReal log1p(const BigReal& x);
BigReal sin(const BigReal& x);
BigReal cos(const BigReal& x);
BigReal sinh(const BigReal& x);
BigReal cosh(const BigReal& x);
BigReal floor(const BigReal& x);
BigReal pow(const BigReal& base, const BigReal& e);
BigReal pow(const BigReal& base, long e);
/// max by value (NaN-poisoning).
BigReal max(const BigReal& a, const BigReal& b);

} // namespace bzeta

#endif
