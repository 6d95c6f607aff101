#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "minkq/bernoulli.hpp"
#include "minkq/quadrature.hpp"
#include "minkq/special.hpp"

using namespace minkq;

namespace {

const PrecisionContext ctx{256, 64};

double dist(const BigReal& a, const BigReal& b) { return (a - b).abs().to_double(); }

// independent oracle: composite Gauss-Legendre over quarter-period panels up
// to the integer endpoint b, plus the by-parts expansion there (sin(2*pi*b)=0,
// remainder below 1e-130 for b = 50).
BigReal tail_oracle(const BigReal& a, unsigned long b) {
    const mpfr_prec_t prec = ctx.work();
    auto f = [&](const BigReal& y) {
        BigReal arg = BigReal::pi(prec).mul_2exp(1) * y;
        return arg.sin() / y;
    };
    BigReal acc(prec);
    BigReal lo = a;
    BigReal quarter = BigReal::from_long(1, prec).div_long(4);
    BigReal bb = BigReal::from_long(static_cast<long>(b), prec);
    while (lo.cmp(bb) < 0) {
        BigReal hi = lo + quarter;
        if (hi.cmp(bb) > 0) hi = bb;
        acc += gl_panel(f, lo, hi, 48, prec);
        lo = hi;
    }
    // tail(b) = sum_j (-1)^j (2j)! / (2 pi b)^(2j+1) at integer b
    BigReal z = BigReal::pi(prec).mul_2exp(1) * bb;
    BigReal zinv = BigReal::from_long(1, prec) / z;
    BigReal term = zinv, tail(prec);
    for (unsigned j = 0; j < 30; ++j) {
        if (j % 2 == 0)
            tail += term;
        else
            tail -= term;
        term = term * zinv * zinv;
        term = term.mul_long((2 * static_cast<long>(j) + 1) * (2 * static_cast<long>(j) + 2));
    }
    return acc + tail;
}

} // namespace

TEST_CASE("bernoulli numbers: values and defining recurrence") {
    CHECK(bernoulli(0) == mpq_class(1));
    CHECK(bernoulli(1) == mpq_class(-1, 2));
    CHECK(bernoulli(2) == mpq_class(1, 6));
    CHECK(bernoulli(3) == 0);
    CHECK(bernoulli(12) == mpq_class(-691, 2730));
    for (unsigned k = 1; k <= 64; ++k) {
        mpq_class s(0);
        mpz_class c;
        for (unsigned j = 0; j <= k; ++j) {
            mpz_bin_uiui(c.get_mpz_t(), k + 1, j);
            s += mpq_class(c) * bernoulli(j);
        }
        CHECK(s == 0);
    }
    CHECK_THROWS_AS(bernoulli(kBernoulliCap + 1), range_error);
}

TEST_CASE("zeta at even integers") {
    BigReal pi = BigReal::pi(ctx.work());
    CHECK(dist(zeta_even(1, ctx), pi * pi / BigReal::from_long(6, ctx.work())) < 1e-70);
    BigReal pi4 = pi.pow_ui(4);
    CHECK(dist(zeta_even(2, ctx), pi4 / BigReal::from_long(90, ctx.work())) < 1e-70);

    // zeta(2n) - 1 ~ 2^-2n; direct Dirichlet series as oracle
    for (unsigned n : {1u, 2u, 3u, 5u, 10u, 20u, 40u}) {
        BigReal direct(ctx.work());
        for (unsigned long k = 2; k <= 4096; ++k) {
            BigReal t = BigReal::from_long(static_cast<long>(k), ctx.work());
            t = BigReal::from_long(1, ctx.work()) / t.pow_ui(2 * n);
            direct += t;
            if (t.to_double() < 1e-90) break;
        }
        double tail_bound = 2.0 * std::pow(4096.0, -2.0 * n + 1.0);
        BigReal impl = zeta_even_minus_one(n, ctx);
        CHECK(dist(impl, direct) <= impl.err() + direct.err() + tail_bound + 1e-85);
        if (n >= 10) {
            double ratio = impl.to_double() * std::pow(2.0, 2.0 * n);
            CHECK(ratio > 1.0);
            CHECK(ratio < 1.06);
        }
    }
}

TEST_CASE("sine integral tail against the quadrature oracle") {
    BigReal one = BigReal::from_long(1, ctx.work());
    BigReal a1 = sine_integral_tail(one, ctx);
    BigReal o1 = tail_oracle(one, 50);
    CHECK(dist(a1, o1) < 1e-40);

    BigReal quarter = one.div_long(4);
    BigReal aq = sine_integral_tail(quarter, ctx);
    BigReal oq = tail_oracle(quarter, 50);
    CHECK(dist(aq, oq) < 1e-40);
}

TEST_CASE("sine integral tail: envelope and additivity") {
    for (double av : {1.0, 5.0, 17.25, 120.0, 4096.0}) {
        BigReal a = BigReal::from_double(av, ctx.work());
        BigReal t = sine_integral_tail(a, ctx);
        CHECK(t.abs().to_double() <= 1.0 / (3.14159 * av));
    }
    // tail(a) - tail(a') = integral over [a, a'], straddling the regime split
    BigReal a = BigReal::from_long(2, ctx.work());
    BigReal ap = BigReal::from_long(9, ctx.work());
    auto f = [&](const BigReal& y) {
        BigReal arg = BigReal::pi(ctx.work()).mul_2exp(1) * y;
        return arg.sin() / y;
    };
    BigReal mid(ctx.work());
    BigReal lo = a;
    BigReal quarter = BigReal::from_long(1, ctx.work()).div_long(4);
    for (int i = 0; i < 28; ++i) {
        mid += gl_panel(f, lo, lo + quarter, 48, ctx.work());
        lo = lo + quarter;
    }
    BigReal lhs = sine_integral_tail(a, ctx);
    BigReal rhs = sine_integral_tail(ap, ctx) + mid;
    CHECK(dist(lhs, rhs) <= lhs.err() + rhs.err() + 1e-17);
}

TEST_CASE("auxiliary 2^-n log^r n series") {
    BigReal v1 = twopow_log_series(1, ctx);
    CHECK(v1.to_double() > 0.5);
    CHECK(v1.to_double() < 0.52);
    // two-precision cross-check
    BigReal v1b = twopow_log_series(1, PrecisionContext{512, 64});
    CHECK(dist(v1, v1b) <= v1.err() + 1e-90);
    BigReal v3 = twopow_log_series(3, ctx);
    BigReal v3b = twopow_log_series(3, PrecisionContext{512, 64});
    CHECK(dist(v3, v3b) <= v3.err() + 1e-90);
    CHECK(v3.to_double() > v1.to_double()); // log^3 n dominates once n >= 3
    CHECK_THROWS_AS(twopow_log_series(0, ctx), domain_error);
}

TEST_CASE("polylog at 1/2") {
    const mpfr_prec_t prec = ctx.work();
    CHECK(dist(polylog_half(1, ctx), BigReal::log2(prec)) < 1e-70);
    BigReal pi = BigReal::pi(prec);
    BigReal l2 = BigReal::log2(prec);
    BigReal li2 = pi * pi / BigReal::from_long(12, prec) - (l2 * l2).mul_2exp(-1);
    CHECK(dist(polylog_half(2, ctx), li2) < 1e-70);
    // Li_3(1/2) = 7 zeta(3)/8 - pi^2 log2/12 + log^3 2/6
    BigReal z3(prec);
    mpfr_set_ui(z3.raw(), 3, MPFR_RNDN);
    mpfr_zeta(z3.raw(), z3.raw(), MPFR_RNDN);
    z3.set_err(z3.ulp());
    BigReal li3 = z3.mul_long(7).div_long(8) - pi * pi * l2 / BigReal::from_long(12, prec) +
                  (l2 * l2 * l2).div_long(6);
    CHECK(dist(polylog_half(3, ctx), li3) < 1e-70);
}

TEST_CASE("hurwitz tails against closed forms") {
    const mpfr_prec_t prec = ctx.work();
    BigReal pi = BigReal::pi(prec);
    for (unsigned long N : {10ul, 50ul, 400ul}) {
        BigReal partial2(prec), partial4(prec);
        for (unsigned long n = 1; n <= N; ++n) {
            BigReal t = BigReal::from_long(static_cast<long>(n), prec);
            partial2 += BigReal::from_long(1, prec) / (t * t);
            partial4 += BigReal::from_long(1, prec) / (t * t * t * t);
        }
        BigReal exact2 = pi * pi / BigReal::from_long(6, prec) - partial2;
        BigReal exact4 = pi.pow_ui(4) / BigReal::from_long(90, prec) - partial4;
        BigReal t2 = hurwitz_tail(2, N, ctx);
        BigReal t4 = hurwitz_tail(4, N, ctx);
        CHECK(dist(t2, exact2) <= t2.err() + 1e-60);
        CHECK(dist(t4, exact4) <= t4.err() + 1e-60);
    }
}

TEST_CASE("doubling precision moves results by less than the reported err") {
    PrecisionContext hi{512, 64};
    CHECK(dist(zeta_even(5, ctx), zeta_even(5, hi)) <= zeta_even(5, ctx).err());
    BigReal a = BigReal::from_long(3, ctx.work());
    BigReal ahi = BigReal::from_long(3, hi.work());
    CHECK(dist(sine_integral_tail(a, ctx), sine_integral_tail(ahi, hi)) <=
          sine_integral_tail(a, ctx).err());
}
