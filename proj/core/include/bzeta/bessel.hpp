#ifndef BZETA_BESSEL_HPP
#define BZETA_BESSEL_HPP

#include "bzeta/order.hpp"

#include <vector>

namespace bzeta {

struct JPair {
    BigReal value;
    BigReal derivative;
};

/// J_nu(x) and J'_nu(x) for x >= 0, by the ascending series summed with
/// enough precision headroom to absorb the large-x cancellation.
JPair eval_j(const Order& order, const BigReal& x, mpfr_prec_t prec);

/// Modified Bessel function I_nu(x), x >= 0, from the ascending series.
BigReal eval_i(const Order& order, const BigReal& x, mpfr_prec_t prec);

/// I_nu(x) together with I'_nu(x) (termwise-differentiated series).
JPair eval_i_pair(const Order& order, const BigReal& x, mpfr_prec_t prec);

/// Ordered positive zeros j_{nu,1} < j_{nu,2} < ... of J_nu.
class ZeroTable {
public:
    const Order& order() const { return order_; }
    mpfr_prec_t precision() const { return prec_; }
    size_t size() const { return zeros_.size(); }
    const BigReal& operator[](size_t n_minus_1) const { return zeros_.at(n_minus_1); }
    const std::vector<BigReal>& all() const { return zeros_; }

private:
    friend ZeroTable zeros(const Order&, size_t, mpfr_prec_t);
    ZeroTable(Order o, mpfr_prec_t p, std::vector<BigReal> z)
        : order_(std::move(o)), prec_(p), zeros_(std::move(z)) {}

    Order order_;
    mpfr_prec_t prec_;
    std::vector<BigReal> zeros_;
};

/// First `count` positive zeros to precision `prec`. McMahon bracketing with
/// safeguarded Newton refinement; results are cached per (order, prec).
ZeroTable zeros(const Order& order, size_t count, mpfr_prec_t prec);

/// McMahon first-order estimate (n + nu/2 - 1/4) pi.
BigReal mcmahon_estimate(const Order& order, size_t n, mpfr_prec_t prec);

} // namespace bzeta

#endif
