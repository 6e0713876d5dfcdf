#include "bzeta/order.hpp"

#include "bzeta/error.hpp"

namespace bzeta {

namespace {
constexpr mpfr_prec_t kOrderStoragePrec = 320;
}

Order::Order(Rational nu) : exact_(true), rat_(std::move(nu)), real_(kOrderStoragePrec) {
    rat_.canonicalize();
    if (rat_ <= Rational(-1)) throw Error(Errc::domain, "order must satisfy nu > -1");
    real_ = BigReal::from_rational(rat_, kOrderStoragePrec);
}

Order::Order(BigReal nu) : exact_(false), rat_(0), real_(std::move(nu)) {
    if (!real_.is_finite() || real_ <= -1L)
        throw Error(Errc::domain, "order must satisfy nu > -1");
}

Order Order::parse(std::string_view text, mpfr_prec_t prec) {
    bool decimal = text.find('.') != std::string_view::npos ||
                   text.find('e') != std::string_view::npos ||
                   text.find('E') != std::string_view::npos;
    if (decimal) return Order(BigReal::from_string(text, prec));
    return Order(rational_from_string(text));
}

const Rational& Order::rat() const {
    if (!exact_) throw Error(Errc::bad_argument, "order is not exact");
    return rat_;
}

BigReal Order::real(mpfr_prec_t prec) const {
    if (exact_) return BigReal::from_rational(rat_, prec);
    return real_.round_to(prec);
}

std::string Order::to_string() const {
    return exact_ ? bzeta::to_string(rat_) : real_.to_string();
}

} // namespace bzeta
