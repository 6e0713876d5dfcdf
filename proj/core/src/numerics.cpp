#include "bzeta/numerics.hpp"

#include "bzeta/error.hpp"

#include <mutex>
#include <shared_mutex>
#include <vector>

namespace bzeta {

namespace {

// Memo table grows monotonically; readers share, extension is single-writer.
std::shared_mutex bern_mutex;
std::vector<Rational> bern_table; // bern_table[k] = B_k

void extend_bernoulli(unsigned n) {
    std::unique_lock lock(bern_mutex);
    if (bern_table.empty()) bern_table.emplace_back(1);
    // sum_{k=0}^{m} C(m+1,k) B_k = 0  =>  B_m = -(1/(m+1)) sum_{k<m} C(m+1,k) B_k
    for (unsigned m = bern_table.size(); m <= n; ++m) {
        mpz_class binom = 1; // C(m+1, 0)
        Rational acc(0);
        for (unsigned k = 0; k < m; ++k) {
            acc += Rational(binom) * bern_table[k];
            binom = binom * (m + 1 - k) / (k + 1);
        }
        Rational b = -acc / Rational(binom); // binom == C(m+1, m) == m+1
        b.canonicalize();
        bern_table.push_back(b);
    }
}

} // namespace

Rational bernoulli(unsigned n) {
    {
        std::shared_lock lock(bern_mutex);
        if (n < bern_table.size()) return bern_table[n];
    }
    extend_bernoulli(n);
    std::shared_lock lock(bern_mutex);
    return bern_table[n];
}

Rational pochhammer(const Rational& x, unsigned n) {
    Rational p(1);
    Rational f(x);
    for (unsigned i = 0; i < n; ++i) {
        p *= f;
        f += 1;
    }
    p.canonicalize();
    return p;
}

BigReal pochhammer(const BigReal& x, unsigned n) {
    BigReal p(1L, x.prec());
    for (unsigned i = 0; i < n; ++i) p *= x + static_cast<long>(i);
    return p;
}

BigReal log_gamma(const BigReal& x) {
    if (!(x > 0L)) throw Error(Errc::domain, "log_gamma requires x > 0");
    BigReal r(x.prec());
    int sign = 0;
    mpfr_lgamma(r.raw(), &sign, x.raw(), MPFR_RNDN);
    return r;
}

mpz_class factorial(unsigned long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Rational rational_from_string(std::string_view s) {
    Rational q;
    std::string buf(s);
    if (mpq_set_str(q.get_mpq_t(), buf.c_str(), 10) != 0)
        throw Error(Errc::bad_argument, "not a valid rational: " + buf);
    if (q.get_den() == 0) throw Error(Errc::bad_argument, "zero denominator: " + buf);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    return q.get_str();
}

} // namespace bzeta
