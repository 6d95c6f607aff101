#include "minkq/question_mark.hpp"

#include <numeric>
#include <vector>

namespace minkq {

namespace {

// ?([0; a1, ..., ak]) = 2 * sum_i (-1)^(i+1) 2^(-s_i), s_i = a1 + ... + ai.
// As a dyadic: num = sum_i (-1)^(i+1) 2^(s_k - s_i), exp = s_k - 1.
Dyadic qm_from_quotients(const std::vector<mpz_class>& a, unsigned long bit_cap) {
    if (a.empty()) return Dyadic();
    mpz_class total = std::accumulate(a.begin(), a.end(), mpz_class(0));
    if (!total.fits_ulong_p() || total.get_ui() > bit_cap)
        throw resource_error(
            "question_mark: sum of partial quotients (" + total.get_str() +
            ") exceeds the exact-evaluation bit cap; use the rounded evaluator");
    mpz_class acc(0);
    for (size_t i = 0; i < a.size(); ++i) {
        acc <<= a[i].get_ui();
        if (i % 2 == 0)
            acc += 1;
        else
            acc -= 1;
    }
    return Dyadic(std::move(acc), total.get_ui() - 1);
}

// A +-2^e term is exact at any precision; a tiny shared temp avoids churn.
struct PowTerm {
    mpfr_t t;
    PowTerm() { mpfr_init2(t, 8); }
    ~PowTerm() { mpfr_clear(t); }
};

void add_pow2(mpfr_ptr out, bool plus, mpfr_exp_t e) {
    thread_local PowTerm pt;
    mpfr_set_si_2exp(pt.t, plus ? 1 : -1, e, MPFR_RNDN);
    mpfr_add(out, out, pt.t, MPFR_RNDN);
}

} // namespace

Dyadic question_mark(const Rational& x, unsigned long bit_cap) {
    if (x.sign() < 0 || x.cmp_long(1, 1) > 0)
        throw domain_error("question_mark: argument must lie in [0,1]");
    ContinuedFraction cf = cf_expand(x);
    if (cf.a0 == 1) return dyadic_one();
    return qm_from_quotients(cf.quotients, bit_cap);
}

Dyadic question_mark_ext(const Rational& x, unsigned long bit_cap) {
    if (x.sign() <= 0) return Dyadic();
    if (x.cmp_long(1, 1) >= 0) return dyadic_one();
    return question_mark(x, bit_cap);
}

Dyadic extended_F(const Rational& x, unsigned long bit_cap) {
    if (x.sign() < 0) throw domain_error("extended_F: argument must be >= 0");
    Rational y = x / (x + Rational(1, 1));
    return question_mark(y, bit_cap);
}

Dyadic delta(const Rational& x, unsigned long bit_cap) {
    mpz_class fl = x.floor();
    if (!fl.fits_slong_p())
        throw resource_error("delta: floor(x) too large");
    long k = fl.get_si();
    Rational frac = x - Rational(fl, mpz_class(1));
    Dyadic d = dyadic_sub(dyadic_one(), extended_F(frac, bit_cap));
    return dyadic_mul_2exp(d, -k); // Delta(x) = 2^-floor(x) Delta({x})
}

Dyadic phi(const Rational& x, unsigned long bit_cap) {
    // 2^floor(x) Delta(x) = Delta({x})
    mpz_class fl = x.floor();
    Rational frac = x - Rational(fl, mpz_class(1));
    return dyadic_sub(dyadic_one(), extended_F(frac, bit_cap));
}

BigReal question_mark_real(const Rational& x, mpfr_prec_t prec) {
    if (x.sign() <= 0) return BigReal::from_long(0, prec);
    if (x.cmp_long(1, 1) >= 0) return BigReal::from_long(1, prec);
    ContinuedFraction cf = cf_expand(x);
    BigReal out(prec);
    mpz_class s(0), s1(0);
    bool plus = true;
    const mpz_class exp_cap = mpz_class(1) << 60; // stay inside mpfr's exponent range
    for (const auto& a : cf.quotients) {
        s += a;
        if (s1 == 0) s1 = s;
        if (s > exp_cap) break;
        // terms below the precision window total less than 1/4 ulp
        if (s - s1 > prec + 8) break;
        add_pow2(out.raw(), plus, 1 - static_cast<mpfr_exp_t>(s.get_ui()));
        plus = !plus;
    }
    out.set_err(2.0 * out.ulp());
    return out;
}

void question_mark_u64(std::uint64_t p, std::uint64_t q, mpfr_ptr out) {
    if (p == 0) {
        mpfr_set_zero(out, 1);
        return;
    }
    if (p >= q) {
        mpfr_set_ui(out, 1, MPFR_RNDN);
        return;
    }
    mpfr_prec_t prec = mpfr_get_prec(out);
    mpfr_set_zero(out, 1);
    std::uint64_t num = p, den = q;
    std::uint64_t s = 0, s1 = 0;
    bool plus = true;
    while (num != 0) {
        std::uint64_t a = den / num;
        std::uint64_t r = den - a * num;
        s += a;
        if (s1 == 0) s1 = s;
        if (s - s1 > static_cast<std::uint64_t>(prec) + 8) break;
        add_pow2(out, plus, 1 - static_cast<mpfr_exp_t>(s));
        plus = !plus;
        den = num;
        num = r;
    }
}

} // namespace minkq
