#include "bzeta/coefficients.hpp"

#include "bzeta/error.hpp"
#include "bzeta/numerics.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>

namespace bzeta {

char family_letter(Family f) {
    switch (f) {
        case Family::c: return 'c';
        case Family::d: return 'd';
        case Family::a: return 'a';
        case Family::alpha: return 'A';
        case Family::beta: return 'B';
    }
    return '?';
}

Family family_from_letter(char ch) {
    switch (ch) {
        case 'c': return Family::c;
        case 'd': return Family::d;
        case 'a': return Family::a;
        case 'A': return Family::alpha;
        case 'B': return Family::beta;
    }
    throw Error(Errc::bad_argument, std::string("unknown coefficient family: ") + ch);
}

size_t family_first_index(Family f) {
    switch (f) {
        case Family::d: return 2;
        case Family::alpha: return 1;
        case Family::beta: return 1;
        default: return 0;
    }
}

const Rational& CoefficientTable::rat(size_t index) const {
    if (!exact_) throw Error(Errc::bad_argument, "table is not exact");
    return rat_->at(index - first_index());
}

BigReal CoefficientTable::real(size_t index, mpfr_prec_t prec) const {
    if (exact_) return BigReal::from_rational(rat_->at(index - first_index()), prec);
    return real_->at(index - first_index()).round_to(prec);
}

const BigReal& CoefficientTable::beta0() const {
    if (!beta0_) throw Error(Errc::bad_argument, "beta0 is only present for family beta");
    return *beta0_;
}

namespace {

// The two scalar modes share the recursion code through this little trait.
template <class T> struct Num;

template <> struct Num<Rational> {
    static Rational make(long v, mpfr_prec_t) { return Rational(v); }
    static Rational ratio(long n, long d, mpfr_prec_t) { return Rational(n, d); }
    static Rational from_int(const mpz_class& z, mpfr_prec_t) { return Rational(z); }
    static Rational nu(const Order& o, mpfr_prec_t) { return o.rat(); }
};

template <> struct Num<BigReal> {
    static BigReal make(long v, mpfr_prec_t p) { return BigReal(v, p); }
    static BigReal ratio(long n, long d, mpfr_prec_t p) { return BigReal(n, p) / d; }
    static BigReal from_int(const mpz_class& z, mpfr_prec_t p) {
        return BigReal::from_rational(Rational(z), p);
    }
    static BigReal nu(const Order& o, mpfr_prec_t p) { return o.real(p); }
};

// c_0 = c_1 = (nu^2 - 1/4)/2;  c_{m+2} = ((m+3) c_{m+1} - sum_{k=0}^m c_{m-k} c_k)/2.
template <class T>
void extend_c(std::vector<T>& c, size_t count, const Order& order, mpfr_prec_t p) {
    T nu = Num<T>::nu(order, p);
    if (c.empty() && count > 0) {
        T c0 = (nu * nu - Num<T>::ratio(1, 4, p)) / 2;
        c.push_back(c0);
    }
    if (c.size() == 1 && count > 1) c.push_back(c[0]); // c_1 = c_0
    while (c.size() < count) {
        long m = static_cast<long>(c.size()) - 2;
        T s = Num<T>::make(0, p);
        for (long k = 0; k <= m; ++k) s += c[m - k] * c[k];
        c.push_back(((m + 3) * c[m + 1] - s) / 2);
    }
}

// Storage slot i holds d_{i+2}. d_2 = d_3 = 1;
// d_{m+2} = ((m+1)/2) d_{m+1} + ((1-4nu^2)/16) sum_{k=0}^{m-2} d_{m-k} d_{k+2},  m >= 2.
template <class T>
void extend_d(std::vector<T>& d, size_t count, const Order& order, mpfr_prec_t p) {
    T nu = Num<T>::nu(order, p);
    T pref = (Num<T>::make(1, p) - 4 * (nu * nu)) / 16;
    while (d.size() < 2 && d.size() < count) d.push_back(Num<T>::make(1, p));
    while (d.size() < count) {
        long m = static_cast<long>(d.size()); // computing d_{m+2}
        T s = Num<T>::make(0, p);
        for (long k = 0; k <= m - 2; ++k) s += d[m - k - 2] * d[k];
        T next = (m + 1) * d[m - 1] / 2 + pref * s;
        d.push_back(next);
    }
}

// a_0 = nu;  a_n = (2n+nu)/(n! (nu+1)_n) - sum_{k=0}^{n-1} a_k/((n-k)! (nu+1)_{n-k}),
// every Gamma ratio realized as a reciprocal Pochhammer so exact mode stays rational.
template <class T>
void extend_a(std::vector<T>& a, size_t count, const Order& order, mpfr_prec_t p) {
    T nu = Num<T>::nu(order, p);
    if (a.empty() && count > 0) a.push_back(nu);
    if (a.size() >= count) return;
    size_t n_max = count - 1;
    std::vector<T> poch;   // poch[j] = (nu+1)_j
    std::vector<T> fact;   // fact[j] = j!
    poch.push_back(Num<T>::make(1, p));
    fact.push_back(Num<T>::make(1, p));
    for (size_t j = 1; j <= n_max; ++j) {
        poch.push_back(poch[j - 1] * (nu + static_cast<long>(j)));
        fact.push_back(static_cast<long>(j) * fact[j - 1]);
    }
    for (size_t n = a.size(); n <= n_max; ++n) {
        T t = (2 * static_cast<long>(n) + nu) / (fact[n] * poch[n]);
        for (size_t k = 0; k < n; ++k) t -= a[k] / (fact[n - k] * poch[n - k]);
        a.push_back(t);
    }
}

// alpha_k = (-1)^{k+1} a_k / (k 2^{2k+1}),  k >= 1. Storage slot i holds alpha_{i+1}.
template <class T>
void extend_alpha(std::vector<T>& al, size_t count, const Order& order, mpfr_prec_t p) {
    std::vector<T> a;
    extend_a(a, count + 1, order, p);
    mpz_class two_pow(8); // 2^{2k+1} at k=1
    for (size_t k = 1; k <= count; ++k) {
        if (k > al.size()) {
            T denom = static_cast<long>(k) * Num<T>::from_int(two_pow, p);
            T v = a[k] / denom;
            al.push_back(k % 2 == 1 ? v : -v);
        }
        two_pow *= 4;
    }
}

// beta_{2k-1} = -c_{2k-2}/(2k-1) and beta_{2k} = -c_{2k-1}/(2k), i.e. beta_n = -c_{n-1}/n.
// Storage slot i holds beta_{i+1}.
template <class T>
void extend_beta(std::vector<T>& b, size_t count, const Order& order, mpfr_prec_t p) {
    std::vector<T> c;
    extend_c(c, count, order, p);
    for (size_t n = b.size() + 1; n <= count; ++n)
        b.push_back(-(c[n - 1] / static_cast<long>(n)));
}

template <class T>
void extend_family(Family f, std::vector<T>& v, size_t count, const Order& order, mpfr_prec_t p) {
    switch (f) {
        case Family::c: extend_c(v, count, order, p); break;
        case Family::d: extend_d(v, count, order, p); break;
        case Family::a: extend_a(v, count, order, p); break;
        case Family::alpha: extend_alpha(v, count, order, p); break;
        case Family::beta: extend_beta(v, count, order, p); break;
    }
}

BigReal compute_beta0(const Order& order, mpfr_prec_t prec) {
    mpfr_prec_t wp = prec + 32;
    BigReal nu = order.real(wp);
    BigReal two_pi = 2 * BigReal::pi(wp);
    BigReal b0 = log_gamma(nu + 1) + nu * BigReal::log2_const(wp) - log(two_pi) / 2;
    return b0.round_to(prec);
}

} // namespace

/// Process-wide store of the longest table built per key; snapshots are
/// immutable, extension installs a longer vector without touching readers.
class TableStore {
public:
    static TableStore& instance() {
        static TableStore store;
        return store;
    }

    CoefficientTable get(Family f, const Order& order, size_t count, mpfr_prec_t prec) {
        if (count < 1) throw Error(Errc::bad_argument, "count must be >= 1");
        if (f == Family::d && count < 2)
            throw Error(Errc::bad_argument, "d table needs count >= 2");
        std::optional<BigReal> beta0;
        if (f == Family::beta) beta0 = compute_beta0(order, prec);
        if (order.exact()) {
            auto vec = lookup(exact_, key(f, order, 0), f, count, order, mpfr_prec_t(64));
            return CoefficientTable(f, order, prec, true, vec, nullptr, count, std::move(beta0));
        }
        auto vec = lookup(float_, key(f, order, prec), f, count, order, prec);
        return CoefficientTable(f, order, prec, false, nullptr, vec, count, std::move(beta0));
    }

private:
    static std::string key(Family f, const Order& order, mpfr_prec_t prec) {
        return std::string(1, family_letter(f)) + "|" + order.to_string() + "|" +
               std::to_string(prec);
    }

    template <class T>
    std::shared_ptr<const std::vector<T>> lookup(
        std::map<std::string, std::shared_ptr<const std::vector<T>>>& cache,
        const std::string& k, Family f, size_t count, const Order& order, mpfr_prec_t prec) {
        {
            std::shared_lock lock(mutex_);
            auto it = cache.find(k);
            if (it != cache.end() && it->second->size() >= count) return it->second;
        }
        std::unique_lock lock(mutex_);
        auto it = cache.find(k);
        if (it != cache.end() && it->second->size() >= count) return it->second;
        std::vector<T> grown;
        if (it != cache.end()) grown = *it->second; // keep existing entries verbatim
        extend_family(f, grown, count, order, prec);
        auto sp = std::make_shared<const std::vector<T>>(std::move(grown));
        cache[k] = sp;
        return sp;
    }

    std::shared_mutex mutex_;
    std::map<std::string, std::shared_ptr<const std::vector<Rational>>> exact_;
    std::map<std::string, std::shared_ptr<const std::vector<BigReal>>> float_;
};

CoefficientTable make_table(Family f, const Order& order, size_t count, mpfr_prec_t prec) {
    return TableStore::instance().get(f, order, count, prec);
}

CoefficientTable c_seq(const Order& o, size_t n, mpfr_prec_t p) { return make_table(Family::c, o, n, p); }
CoefficientTable d_seq(const Order& o, size_t n, mpfr_prec_t p) { return make_table(Family::d, o, n, p); }
CoefficientTable a_seq(const Order& o, size_t n, mpfr_prec_t p) { return make_table(Family::a, o, n, p); }
CoefficientTable alpha_seq(const Order& o, size_t n, mpfr_prec_t p) { return make_table(Family::alpha, o, n, p); }
CoefficientTable beta_seq(const Order& o, size_t n, mpfr_prec_t p) { return make_table(Family::beta, o, n, p); }

} // namespace bzeta
