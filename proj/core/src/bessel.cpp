#include "bzeta/bessel.hpp"

#include "bzeta/error.hpp"
#include "bzeta/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>

namespace bzeta {

namespace {

// The alternating series cancels ~x log2(e) bits at argument x; size the
// working precision so the cancellation lands in the guard bits.
mpfr_prec_t working_prec(mpfr_prec_t prec, const BigReal& x) {
    double xd = std::abs(x.to_double());
    if (!std::isfinite(xd)) throw Error(Errc::domain, "bessel argument out of range");
    return prec + 64 + static_cast<mpfr_prec_t>(std::ceil(1.45 * xd));
}

struct SeriesResult {
    BigReal sum;        // sum of (-1)^k t_k   (or t_k for I)
    BigReal weighted;   // sum of (nu+2k) times the same terms
};

// t_k = (x/2)^{2k} / (k! (nu+1)_k); alternating for J, positive for I.
SeriesResult ratio_series(const BigReal& nu, const BigReal& x, mpfr_prec_t wp, bool alternating) {
    BigReal q = (x / 2) * (x / 2);
    BigReal term(1L, wp);
    BigReal sum(1L, wp);
    BigReal weighted = nu.round_to(wp);
    BigReal max_abs(1L, wp);
    BigReal eps = BigReal::pow2(-static_cast<long>(wp) - 8, 64);
    for (long k = 0; ; ++k) {
        BigReal next = term * q / ((k + 1) * (nu + (k + 1)));
        if (alternating) next = -next;
        term = next;
        sum += term;
        weighted += term * (nu + 2 * (k + 1));
        BigReal a = abs(term);
        if (a > max_abs) max_abs = a;
        if (a * (2 * k + 4) < max_abs * eps) break;
        if (k > 1000 + 8 * static_cast<long>(wp))
            throw Error(Errc::nonconvergence, "bessel series failed to terminate");
    }
    return {std::move(sum), std::move(weighted)};
}

// (x/2)^nu / Gamma(nu+1)
BigReal series_prefactor(const BigReal& nu, const BigReal& x, mpfr_prec_t wp) {
    return exp(nu * log(x / 2) - log_gamma(nu + 1));
}

JPair eval_at_zero_x(const BigReal& nu, mpfr_prec_t prec) {
    BigReal value(prec), deriv(prec);
    if (nu.is_zero()) {
        return {BigReal(1L, prec), BigReal(0L, prec)};
    }
    if (nu > 1L) {
        return {BigReal(0L, prec), BigReal(0L, prec)};
    }
    if (nu == 1L) {
        BigReal half = BigReal(1L, prec) / 2;
        return {BigReal(0L, prec), std::move(half)};
    }
    if (nu > 0L) { // 0 < nu < 1: J(0)=0, slope blows up
        mpfr_set_zero(value.raw(), 1);
        mpfr_set_inf(deriv.raw(), 1);
        return {std::move(value), std::move(deriv)};
    }
    // -1 < nu < 0: the function itself diverges at 0+
    mpfr_set_inf(value.raw(), 1);
    mpfr_set_inf(deriv.raw(), -1);
    return {std::move(value), std::move(deriv)};
}

} // namespace

JPair eval_j(const Order& order, const BigReal& x, mpfr_prec_t prec) {
    if (x.is_nan() || x < 0L) throw Error(Errc::domain, "eval_j requires x >= 0");
    mpfr_prec_t wp = working_prec(prec, x);
    BigReal nu = order.real(wp);
    if (x.is_zero()) return eval_at_zero_x(nu, prec);
    BigReal xw = x.round_to(wp);
    SeriesResult s = ratio_series(nu, xw, wp, true);
    BigReal pref = series_prefactor(nu, xw, wp);
    // J'(x) = pref * sum (nu+2k)(-1)^k t_k / x
    BigReal value = pref * s.sum;
    BigReal deriv = pref * s.weighted / xw;
    return {value.round_to(prec), deriv.round_to(prec)};
}

BigReal eval_i(const Order& order, const BigReal& x, mpfr_prec_t prec) {
    return eval_i_pair(order, x, prec).value;
}

JPair eval_i_pair(const Order& order, const BigReal& x, mpfr_prec_t prec) {
    if (x.is_nan() || x < 0L) throw Error(Errc::domain, "eval_i requires x >= 0");
    mpfr_prec_t wp = prec + 64; // all-positive terms, no cancellation
    BigReal nu = order.real(wp);
    if (x.is_zero()) return eval_at_zero_x(nu, prec);
    BigReal xw = x.round_to(wp);
    SeriesResult s = ratio_series(nu, xw, wp, false);
    BigReal pref = series_prefactor(nu, xw, wp);
    BigReal value = pref * s.sum;
    BigReal deriv = pref * s.weighted / xw;
    return {value.round_to(prec), deriv.round_to(prec)};
}

BigReal mcmahon_estimate(const Order& order, size_t n, mpfr_prec_t prec) {
    BigReal nu = order.real(prec);
    return (nu / 2 + (static_cast<long>(n) * 4 - 1) / BigReal(4L, prec)) * BigReal::pi(prec);
}

namespace {

struct Bracket {
    BigReal lo, hi;  // J changes sign across [lo, hi]
    int sign_lo;
};

int j_sign(const Order& order, const BigReal& x, mpfr_prec_t p) {
    return eval_j(order, x, p).value.sign();
}

// Scan [from, limit] in steps of `step` for a sign change.
std::optional<Bracket> scan_bracket(const Order& order, const BigReal& from, const BigReal& step,
                                    long max_steps, mpfr_prec_t p) {
    BigReal lo = from;
    int slo = j_sign(order, lo, p);
    for (long i = 0; i < max_steps; ++i) {
        BigReal hi = lo + step;
        int shi = j_sign(order, hi, p);
        if (shi == 0) { // landed on the zero; nudge so the bracket is proper
            BigReal nudge = step / 1024;
            return Bracket{hi - nudge, hi + nudge, j_sign(order, hi - nudge, p)};
        }
        if (shi != slo) return Bracket{std::move(lo), std::move(hi), slo};
        lo = std::move(hi);
        slo = shi;
    }
    return std::nullopt;
}

// Safeguarded Newton inside a bracket: any iterate that leaves the bracket is
// replaced by a bisection step, and the bracket shrinks by sign.
BigReal refine_zero(const Order& order, Bracket br, mpfr_prec_t prec, const BigReal& x0) {
    BigReal x = x0;
    // precision ladder: converge cheaply first, then polish at full precision
    std::vector<mpfr_prec_t> stages;
    for (mpfr_prec_t t = 64; t < prec; t *= 2) stages.push_back(t);
    stages.push_back(prec + 32);
    for (mpfr_prec_t target : stages) {
        BigReal tol = abs(x) * BigReal::pow2(-static_cast<long>(target), 64);
        for (int it = 0;; ++it) {
            if (it > 120)
                throw Error(Errc::nonconvergence, "zero refinement failed to shrink its bracket");
            JPair j = eval_j(order, x, target + 32);
            if (j.value.is_zero()) break;
            bool ok = !j.derivative.is_zero();
            BigReal step = ok ? j.value / j.derivative : BigReal(0L, target);
            BigReal xn = ok ? x - step : x;
            if (!ok || xn <= br.lo || xn >= br.hi) {
                xn = (br.lo + br.hi) / 2; // bisect
                step = br.hi - br.lo;
            }
            int s = j_sign(order, xn, target + 32);
            if (s == 0) { x = xn; break; }
            if (s == br.sign_lo) br.lo = xn; else br.hi = xn;
            x = std::move(xn);
            if (abs(step) < tol) break;
        }
    }
    // one last full-precision polish
    mpfr_prec_t wp = prec + 32;
    JPair j = eval_j(order, x, wp);
    if (!j.derivative.is_zero()) x = x - j.value / j.derivative;
    return x.round_to(prec);
}

class ZeroStore {
public:
    static ZeroStore& instance() {
        static ZeroStore store;
        return store;
    }

    std::shared_ptr<const std::vector<BigReal>> get(const Order& order, size_t count,
                                                    mpfr_prec_t prec) {
        std::string key = order.to_string() + "|" + std::to_string(prec);
        {
            std::shared_lock lock(mutex_);
            auto it = cache_.find(key);
            if (it != cache_.end() && it->second->size() >= count) return it->second;
        }
        std::unique_lock lock(mutex_);
        auto it = cache_.find(key);
        if (it != cache_.end() && it->second->size() >= count) return it->second;
        std::vector<BigReal> z;
        if (it != cache_.end()) z = *it->second;
        extend(order, z, count, prec);
        auto sp = std::make_shared<const std::vector<BigReal>>(std::move(z));
        cache_[key] = sp;
        return sp;
    }

private:
    static void extend(const Order& order, std::vector<BigReal>& z, size_t count,
                       mpfr_prec_t prec) {
        mpfr_prec_t bp = 96; // bracketing needs signs only
        BigReal pi = BigReal::pi(bp);
        for (size_t n = z.size() + 1; n <= count; ++n) {
            std::optional<Bracket> br;
            if (n <= 2) {
                // scan forward from 0 (or from the previous zero); the step
                // shrinks with nu+1 so tiny first zeros near nu = -1 are not hopped over
                BigReal nu = order.real(bp);
                BigReal step = pi / 8;
                BigReal small = sqrt(nu + 1);
                if (small < step) step = small;
                BigReal from = n == 1 ? step / 1024 : z[n - 2].round_to(bp) + step / 1024;
                br = scan_bracket(order, from, step, 4000, bp);
            } else {
                BigReal est = mcmahon_estimate(order, n, bp);
                BigReal lo = est - pi / 4;
                BigReal hi = est + pi / 4;
                if (lo <= z[n - 2]) lo = z[n - 2] + (est - z[n - 2]) / 1024;
                int slo = j_sign(order, lo, bp);
                int shi = j_sign(order, hi, bp);
                if (slo != 0 && slo != shi) {
                    br = Bracket{std::move(lo), std::move(hi), slo};
                } else {
                    // McMahon drifts for large nu; fall back to a forward scan
                    br = scan_bracket(order, z[n - 2].round_to(bp) + pi / 1024, pi / 16, 4000, bp);
                }
            }
            if (!br) throw Error(Errc::nonconvergence, "failed to bracket a Bessel zero");
            BigReal x0 = (br->lo + br->hi) / 2;
            z.push_back(refine_zero(order, *br, prec, x0));
        }
    }

    std::shared_mutex mutex_;
    std::map<std::string, std::shared_ptr<const std::vector<BigReal>>> cache_;
};

} // namespace

ZeroTable zeros(const Order& order, size_t count, mpfr_prec_t prec) {
    if (count < 1) throw Error(Errc::bad_argument, "zeros: count must be >= 1");
    auto sp = ZeroStore::instance().get(order, count, prec);
    std::vector<BigReal> out(sp->begin(), sp->begin() + static_cast<long>(count));
    return ZeroTable(order, prec, std::move(out));
}

} // namespace bzeta
