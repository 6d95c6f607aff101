#include "minkq/quadrature.hpp"

#include <map>
#include <mutex>

#include "minkq/errors.hpp"

namespace minkq {

namespace {

// Legendre P_n(x) and P_n'(x) by the three-term recurrence.
void legendre_pd(unsigned n, const BigReal& x, BigReal& p, BigReal& dp,
                 mpfr_prec_t prec) {
    BigReal p0 = BigReal::from_long(1, prec);
    BigReal p1 = x;
    for (unsigned k = 2; k <= n; ++k) {
        BigReal pk = (x * p1).mul_long(2 * static_cast<long>(k) - 1) -
                     p0.mul_long(static_cast<long>(k) - 1);
        pk = pk.div_long(static_cast<long>(k));
        p0 = p1;
        p1 = pk;
    }
    p = p1;
    // (x^2 - 1) P_n' = n (x P_n - P_{n-1})
    BigReal num = (x * p1 - p0).mul_long(static_cast<long>(n));
    BigReal den = x * x - BigReal::from_long(1, prec);
    dp = num / den;
}

GaussLegendre build_gl(unsigned n, mpfr_prec_t prec) {
    GaussLegendre gl;
    gl.nodes.reserve(n);
    gl.weights.reserve(n);
    for (unsigned i = 0; i < n; ++i) {
        // Chebyshev initial guess, then Newton
        BigReal x(prec);
        mpfr_const_pi(x.raw(), MPFR_RNDN);
        mpfr_mul_d(x.raw(), x.raw(), (i + 0.75) / (n + 0.5), MPFR_RNDN);
        mpfr_cos(x.raw(), x.raw(), MPFR_RNDN);
        x.set_err(0.0);
        BigReal p(prec), dp(prec);
        for (int it = 0; it < 200; ++it) {
            legendre_pd(n, x, p, dp, prec);
            BigReal step = p / dp;
            x -= step;
            if (step.is_zero() ||
                mpfr_get_exp(step.raw()) < -static_cast<mpfr_exp_t>(prec - 4))
                break;
        }
        legendre_pd(n, x, p, dp, prec);
        BigReal one = BigReal::from_long(1, prec);
        BigReal w = (one - x * x) * dp * dp;
        w = BigReal::from_long(2, prec) / w;
        x.set_err(x.ulp() * 4);
        w.set_err(w.ulp() * 8);
        gl.nodes.push_back(std::move(x));
        gl.weights.push_back(std::move(w));
    }
    return gl;
}

} // namespace

const GaussLegendre& gauss_legendre(unsigned n, mpfr_prec_t prec) {
    if (n < 2 || n > 512) throw domain_error("gauss_legendre: order out of range");
    static std::mutex mu;
    static std::map<std::pair<unsigned, mpfr_prec_t>, GaussLegendre> cache;
    std::scoped_lock lock(mu);
    auto key = std::make_pair(n, prec);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, build_gl(n, prec)).first;
    return it->second;
}

BigReal gl_panel(const std::function<BigReal(const BigReal&)>& f, const BigReal& a,
                 const BigReal& b, unsigned n, mpfr_prec_t prec) {
    const auto& gl = gauss_legendre(n, prec);
    BigReal half = (b - a).mul_2exp(-1);
    BigReal mid = (b + a).mul_2exp(-1);
    BigReal acc(prec);
    for (unsigned i = 0; i < n; ++i) {
        BigReal x = mid + half * gl.nodes[i];
        acc += gl.weights[i] * f(x);
    }
    return acc * half;
}

const GaussLegendreD& gauss_legendre_d(unsigned n) {
    static std::mutex mu;
    static std::map<unsigned, GaussLegendreD> cache;
    std::scoped_lock lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) {
        const auto& gl = gauss_legendre(n, 96);
        GaussLegendreD d;
        for (unsigned i = 0; i < n; ++i) {
            d.nodes.push_back(gl.nodes[i].to_double());
            d.weights.push_back(gl.weights[i].to_double());
        }
        it = cache.emplace(n, std::move(d)).first;
    }
    return it->second;
}

} // namespace minkq
