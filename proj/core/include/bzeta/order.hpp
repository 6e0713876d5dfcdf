#ifndef BZETA_ORDER_HPP
#define BZETA_ORDER_HPP

#include "bzeta/bigreal.hpp"
#include "bzeta/numerics.hpp"

#include <string>
#include <string_view>

namespace bzeta {

/// The Bessel order nu, either exact (rational) or floating. Construction
/// enforces nu > -1.
class Order {
public:
    explicit Order(Rational nu);
    explicit Order(BigReal nu);

    /// "p/q" (or an integer) selects exact mode; a decimal selects float mode.
    static Order parse(std::string_view text, mpfr_prec_t prec);

    bool exact() const { return exact_; }
    const Rational& rat() const; // exact mode only
    BigReal real(mpfr_prec_t prec) const;

    bool is_rational(const Rational& q) const { return exact_ && rat_ == q; }
    bool is_half() const { return is_rational(Rational(1, 2)); }
    bool is_minus_half() const { return is_rational(Rational(-1, 2)); }

    std::string to_string() const;

private:
    bool exact_;
    Rational rat_;
    BigReal real_;
};

} // namespace bzeta

#endif
