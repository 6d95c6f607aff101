#include "minkq/special.hpp"

#include <gmpxx.h>

#include "minkq/bernoulli.hpp"

namespace minkq {

namespace {

constexpr double kSiSplit = 40.0; // Si argument where the asymptotic takes over

BigReal from_mpq(const mpq_class& q, mpfr_prec_t prec) {
    BigReal r(prec);
    mpfr_set_q(r.raw(), q.get_mpq_t(), MPFR_RNDN);
    r.set_err(r.ulp());
    return r;
}

BigReal from_mpz(const mpz_class& z, mpfr_prec_t prec) {
    BigReal r(prec);
    mpfr_set_z(r.raw(), z.get_mpz_t(), MPFR_RNDN);
    r.set_err(r.ulp());
    return r;
}

} // namespace

BigReal zeta_even(unsigned n, const PrecisionContext& ctx) {
    if (n < 1) throw domain_error("zeta_even: n must be >= 1");
    const mpfr_prec_t prec = ctx.work();
    BigReal twopi = BigReal::pi(prec).mul_2exp(1);
    BigReal r = twopi.pow_ui(2 * n);
    r.set_err((2.0 * n + 2.0) * r.ulp());
    BigReal b = from_mpq(bernoulli(2 * n), prec).abs();
    BigReal fact = from_mpz(factorial(2 * n), prec);
    BigReal out = r * b / fact.mul_2exp(1);
    out.widen_err(4.0 * out.ulp());
    return out;
}

BigReal zeta_even_minus_one(unsigned n, const PrecisionContext& ctx) {
    const mpfr_prec_t prec = ctx.work();
    if (2 * n < 64) {
        BigReal z = zeta_even(n, ctx);
        BigReal one = BigReal::from_long(1, prec);
        BigReal out = z - one;
        // absolute error unchanged by the exact subtraction
        out.set_err(BigReal::add_err(z.err(), out.ulp()));
        return out;
    }
    // direct series: k_max satisfies k^(-2n) < 2^(-prec-8) * 2^(-2n)
    BigReal out(prec);
    BigReal term(prec);
    unsigned long k = 2;
    for (;; ++k) {
        mpfr_set_ui(term.raw(), k, MPFR_RNDN);
        mpfr_pow_si(term.raw(), term.raw(), -static_cast<long>(2 * n), MPFR_RNDN);
        if (mpfr_zero_p(term.raw()) ||
            mpfr_get_exp(term.raw()) < -static_cast<mpfr_exp_t>(prec + 8 + 2 * n))
            break;
        mpfr_add(out.raw(), out.raw(), term.raw(), MPFR_RNDN);
    }
    // tail <= integral bound k_max^(1-2n)/(2n-1) <= 2 * k_max^(-2n)
    double tail = 2.0 * std::pow(static_cast<double>(k), -2.0 * static_cast<double>(n));
    if (!(tail > 0)) tail = BigReal::kMinErr;
    out.set_err(BigReal::add_err(tail, 64.0 * out.ulp()));
    return out;
}

BigReal sine_integral_tail(const BigReal& a, const PrecisionContext& ctx) {
    if (a.sign() <= 0) throw domain_error("sine_integral_tail: a must be > 0");
    const mpfr_prec_t prec = ctx.work();
    double zd = 2.0 * 3.14159265358979 * a.to_double();
    if (zd <= kSiSplit) {
        // tail(a) = pi/2 - Si(z); power series for Si.
        // carry extra bits against the e^z growth of intermediate terms
        const mpfr_prec_t wp = prec + 16 + static_cast<mpfr_prec_t>(1.5 * kSiSplit);
        BigReal aw(wp);
        mpfr_set(aw.raw(), a.raw(), MPFR_RNDN);
        aw.set_err(a.err());
        BigReal z = BigReal::pi(wp).mul_2exp(1) * aw;
        BigReal z2 = z * z;
        BigReal u = z;                      // z^(2k+1)/(2k+1)!
        BigReal si(wp);
        unsigned k = 0;
        for (;;) {
            BigReal term = u.div_long(2 * k + 1);
            if (k % 2 == 0)
                si += term;
            else
                si -= term;
            if (!mpfr_zero_p(term.raw()) &&
                mpfr_get_exp(term.raw()) < -static_cast<mpfr_exp_t>(prec + 8) &&
                2 * k + 1 > zd)
                break;
            ++k;
            u = u * z2;
            u = u.div_long(static_cast<long>(2 * k) * (2 * k + 1));
            if (k > 4000) throw convergence_error("sine_integral_tail: series stall");
        }
        BigReal out = BigReal::pi(wp).mul_2exp(-1) - si;
        BigReal res(prec);
        mpfr_set(res.raw(), out.raw(), MPFR_RNDN);
        res.set_err(BigReal::add_err(out.err(), res.ulp()));
        return res;
    }
    // asymptotic: tail(a) = cos(z) f(z) + sin(z) g(z),
    // f ~ (1/z) sum (-1)^k (2k)!/z^(2k), g ~ (1/z^2) sum (-1)^k (2k+1)!/z^(2k)
    BigReal z = BigReal::pi(prec).mul_2exp(1) * a;
    BigReal zinv = BigReal::from_long(1, prec) / z;
    BigReal z2inv = zinv * zinv;
    BigReal f(prec), g(prec);
    BigReal tf = zinv;          // (2k)! / z^(2k+1)
    BigReal tg = z2inv;         // (2k+1)! / z^(2k+2)
    double prev = 1e300;
    unsigned k = 0;
    double trunc = 0;
    for (;;) {
        if (k % 2 == 0) {
            f += tf;
            g += tg;
        } else {
            f -= tf;
            g -= tg;
        }
        double cur = tf.mag();
        BigReal ntf = tf * z2inv;
        ntf = ntf.mul_long(static_cast<long>(2 * k + 1) * (2 * k + 2));
        BigReal ntg = tg * z2inv;
        ntg = ntg.mul_long(static_cast<long>(2 * k + 2) * (2 * k + 3));
        double nxt = ntf.mag() + ntg.mag();
        if (nxt >= prev || nxt < BigReal::exp2_clamped(-double(prec + 8))) {
            trunc = nxt; // remainder bounded by first omitted terms
            break;
        }
        prev = cur;
        tf = ntf;
        tg = ntg;
        ++k;
    }
    BigReal s(prec), c(prec);
    mpfr_sin_cos(s.raw(), c.raw(), z.raw(), MPFR_RNDN);
    s.set_err(BigReal::add_err(std::min(z.err(), 2.0), s.ulp()));
    c.set_err(BigReal::add_err(std::min(z.err(), 2.0), c.ulp()));
    BigReal out = c * f + s * g;
    out.widen_err(2.0 * trunc);
    return out;
}

BigReal sine_integral_tail_int(unsigned long a, const PrecisionContext& ctx) {
    return sine_integral_tail(BigReal::from_long(static_cast<long>(a), ctx.work()), ctx);
}

BigReal twopow_log_series(unsigned r, const PrecisionContext& ctx) {
    if (r < 1) throw domain_error("twopow_log_series: r must be >= 1");
    const mpfr_prec_t prec = ctx.work();
    BigReal out(prec);
    BigReal ln(prec);
    unsigned long n = 2; // log 1 = 0
    for (;; ++n) {
        mpfr_set_ui(ln.raw(), n, MPFR_RNDN);
        mpfr_log(ln.raw(), ln.raw(), MPFR_RNDN);
        BigReal term = ln.pow_ui(r).mul_2exp(-static_cast<long>(n));
        mpfr_add(out.raw(), out.raw(), term.raw(), MPFR_RNDN);
        if (mpfr_get_exp(term.raw()) < -static_cast<mpfr_exp_t>(prec + 8)) break;
        if (n > static_cast<unsigned long>(prec) + 64 + 8 * r) break;
    }
    // geometric tail: sum_{m>n} 2^-m (log m)^r <= 2^-n (log n)^r * 2 for n >= 8
    double lt = std::pow(std::log(double(n)), double(r));
    out.set_err(BigReal::add_err(2.0 * lt * BigReal::exp2_clamped(-double(n)),
                                 double(n) * out.ulp()));
    return out;
}

BigReal polylog_half(unsigned s, const PrecisionContext& ctx) {
    const mpfr_prec_t prec = ctx.work();
    BigReal out(prec);
    BigReal term(prec);
    unsigned long k = 1;
    for (;; ++k) {
        mpfr_set_ui(term.raw(), k, MPFR_RNDN);
        mpfr_pow_si(term.raw(), term.raw(), -static_cast<long>(s), MPFR_RNDN);
        mpfr_mul_2si(term.raw(), term.raw(), -static_cast<mpfr_exp_t>(k), MPFR_RNDN);
        mpfr_add(out.raw(), out.raw(), term.raw(), MPFR_RNDN);
        if (mpfr_get_exp(term.raw()) < -static_cast<mpfr_exp_t>(prec + 8)) break;
    }
    out.set_err(BigReal::add_err(2.0 * BigReal::exp2_clamped(-double(k)),
                                 double(k) * out.ulp()));
    return out;
}

BigReal hurwitz_tail(unsigned s, unsigned long N, const PrecisionContext& ctx) {
    if (s < 2) throw domain_error("hurwitz_tail: s must be >= 2");
    if (N < 8) throw domain_error("hurwitz_tail: N must be >= 8");
    const mpfr_prec_t prec = ctx.work();
    const unsigned long M = N + 1;
    BigReal m = BigReal::from_long(static_cast<long>(M), prec);
    BigReal minv = BigReal::from_long(1, prec) / m;
    // integral + f(M)/2
    BigReal fm = minv.pow_ui(s);
    BigReal out = fm * m;
    out = out.div_long(static_cast<long>(s) - 1); // M^(1-s)/(s-1)
    out += fm.mul_2exp(-1);
    // Euler-Maclaurin corrections: + B_2j/(2j)! * (s)_{2j-1} * M^(-s-2j+1)
    BigReal m2inv = minv * minv;
    BigReal pow = fm * minv; // M^(-s-1)
    mpq_class poch(1);
    double prev = 1e300;
    double bound = 0;
    for (unsigned j = 1; j <= 40; ++j) {
        // (s)_{2j-1} = s (s+1) ... (s+2j-2)
        if (j == 1)
            poch = s;
        else
            poch *= mpq_class(static_cast<long>(s + 2 * j - 3)) *
                    mpq_class(static_cast<long>(s + 2 * j - 2));
        mpq_class coef = bernoulli(2 * j) * poch / mpq_class(factorial(2 * j));
        BigReal term = from_mpq(coef, prec) * pow;
        double tm = term.mag();
        if (tm >= prev) { // asymptotic turn: stop, bound by this term
            bound = tm;
            break;
        }
        out += term;
        bound = tm;
        prev = tm;
        if (tm < BigReal::exp2_clamped(-double(prec + 8)) * fm.mag()) break;
        pow = pow * m2inv;
    }
    out.widen_err(2.0 * bound);
    return out;
}

} // namespace minkq
