#ifndef BZETA_NUMERICS_HPP
#define BZETA_NUMERICS_HPP

#include "bzeta/bigreal.hpp"

#include <string_view>

namespace bzeta {

/// Exact Bernoulli number B_n (B_1 = -1/2). Memoized; thread-safe.
Rational bernoulli(unsigned n);

/// Rising factorial x(x+1)...(x+n-1); exact in the rational overload.
Rational pochhammer(const Rational& x, unsigned n);
BigReal pochhammer(const BigReal& x, unsigned n);

/// ln Gamma(x) for x > 0; throws Error(domain) otherwise.
BigReal log_gamma(const BigReal& x);

mpz_class factorial(unsigned long n);

/// Parses "p/q" or "p"; canonicalizes; throws on a zero denominator.
Rational rational_from_string(std::string_view s);
std::string to_string(const Rational& q);

} // namespace bzeta

#endif
