#ifndef BZETA_COEFFICIENTS_HPP
#define BZETA_COEFFICIENTS_HPP

#include "bzeta/order.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace bzeta {

enum class Family { c, d, a, alpha, beta };

char family_letter(Family f);
Family family_from_letter(char ch);

/// Index of the first entry of a family: c:0, d:2, a:0, alpha:1, beta:1.
/// (beta_0 is not a sequence entry; it lives in its own slot.)
size_t family_first_index(Family f);

/// Immutable snapshot of one coefficient family at a fixed order.
/// Entries are exact rationals when the order is exact, BigReal otherwise.
/// Extending a table never changes existing entries.
class CoefficientTable {
public:
    Family family() const { return family_; }
    const Order& order() const { return order_; }
    mpfr_prec_t precision() const { return prec_; }
    bool exact() const { return exact_; }

    size_t first_index() const { return family_first_index(family_); }
    /// Number of stored entries; valid indices are [first_index, first_index+size).
    size_t size() const { return count_; }

    const Rational& rat(size_t index) const;
    BigReal real(size_t index, mpfr_prec_t prec) const;

    /// Family beta only: the non-rational leading term ln(Gamma(nu+1) 2^nu / sqrt(2 pi)).
    const BigReal& beta0() const;

private:
    friend CoefficientTable make_table(Family, const Order&, size_t, mpfr_prec_t);
    friend class TableStore;

    CoefficientTable(Family f, Order o, mpfr_prec_t p, bool exact,
                     std::shared_ptr<const std::vector<Rational>> rat,
                     std::shared_ptr<const std::vector<BigReal>> real,
                     size_t count, std::optional<BigReal> beta0)
        : family_(f), order_(std::move(o)), prec_(p), exact_(exact),
          rat_(std::move(rat)), real_(std::move(real)), count_(count),
          beta0_(std::move(beta0)) {}

    Family family_;
    Order order_;
    mpfr_prec_t prec_;
    bool exact_;
    std::shared_ptr<const std::vector<Rational>> rat_;
    std::shared_ptr<const std::vector<BigReal>> real_;
    size_t count_;
    std::optional<BigReal> beta0_;
};

/// Hawkins coefficients c_0, c_1, ..., c_{count-1} (c_0 = c_1 = (nu^2-1/4)/2).
CoefficientTable c_seq(const Order& order, size_t count, mpfr_prec_t prec);
/// Asymptotic-ratio coefficients d_2, ..., d_{count+1} (count entries, from index 2).
CoefficientTable d_seq(const Order& order, size_t count, mpfr_prec_t prec);
/// Origin-ratio coefficients a_0, ..., a_{count-1} (a_0 = nu).
CoefficientTable a_seq(const Order& order, size_t count, mpfr_prec_t prec);
/// Log-series coefficients at the origin, alpha_1, ..., alpha_count.
CoefficientTable alpha_seq(const Order& order, size_t count, mpfr_prec_t prec);
/// Log-series coefficients at infinity, beta_1, ..., beta_count, plus beta_0.
CoefficientTable beta_seq(const Order& order, size_t count, mpfr_prec_t prec);

CoefficientTable make_table(Family f, const Order& order, size_t count, mpfr_prec_t prec);

} // namespace bzeta

#endif
