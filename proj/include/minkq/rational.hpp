#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "minkq/bigreal.hpp"
#include "minkq/errors.hpp"

namespace minkq {

// Reduced fraction p/q with q >= 1; canonical zero is 0/1.
class Rational {
  public:
    Rational() : q_(0, 1) {}
    Rational(long num, long den) : q_(num, den) { normalize(); }
    Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) { normalize(); }
    explicit Rational(const mpq_class& q) : q_(q) { normalize(); }

    // Parses "P/Q" or "P".
    static Rational parse(const std::string& s);

    const mpz_class num() const { return q_.get_num(); }
    const mpz_class den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return q_ == 0; }
    int sign() const { return sgn(q_); }
    int cmp(const Rational& o) const { return ::cmp(q_, o.q_); }
    int cmp_long(long a, long b) const { return ::cmp(q_, mpq_class(a, b)); }

    bool operator<(const Rational& o) const { return cmp(o) < 0; }
    bool operator==(const Rational& o) const { return q_ == o.q_; }
    bool operator!=(const Rational& o) const { return q_ != o.q_; }

    Rational operator+(const Rational& o) const { return Rational(mpq_class(q_ + o.q_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(q_ - o.q_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(q_ * o.q_)); }
    Rational operator/(const Rational& o) const;
    Rational operator-() const { return Rational(mpq_class(-q_)); }

    // floor(p/q)
    mpz_class floor() const {
        mpz_class f;
        mpz_fdiv_q(f.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
        return f;
    }

    static Rational mediant(const Rational& a, const Rational& b) {
        return Rational(a.num() + b.num(), a.den() + b.den());
    }

    BigReal to_bigreal(mpfr_prec_t prec) const {
        BigReal r(prec);
        mpfr_set_q(r.raw(), q_.get_mpq_t(), MPFR_RNDN);
        r.set_err(r.ulp());
        return r;
    }

    double to_double() const { return q_.get_d(); }
    std::string str() const { return q_.get_str(); }

  private:
    void normalize() {
        if (q_.get_den() == 0) throw domain_error("Rational: zero denominator");
        q_.canonicalize();
    }
    mpq_class q_;
};

// num / 2^exp with num odd or zero when normalized.
struct Dyadic {
    mpz_class num;
    unsigned long exp = 0;

    Dyadic() : num(0) {}
    Dyadic(mpz_class n, unsigned long e) : num(std::move(n)), exp(e) { normalize(); }

    void normalize() {
        if (num == 0) {
            exp = 0;
            return;
        }
        unsigned long tz = mpz_scan1(num.get_mpz_t(), 0);
        if (tz > 0) {
            unsigned long k = std::min(tz, exp);
            num >>= k;
            exp -= k;
        }
    }

    bool operator==(const Dyadic& o) const { return exp == o.exp && num == o.num; }

    Rational to_rational() const {
        mpz_class d = 1;
        d <<= exp;
        return Rational(num, d);
    }

    // value = num * 2^-exp, rounded to prec
    BigReal to_bigreal(mpfr_prec_t prec) const {
        BigReal r(prec);
        mpfr_set_z_2exp(r.raw(), num.get_mpz_t(), -static_cast<mpfr_exp_t>(exp), MPFR_RNDN);
        r.set_err(r.ulp());
        return r;
    }

    std::string str() const {
        if (exp == 0) return num.get_str();
        return num.get_str() + "/2^" + std::to_string(exp);
    }
};

// Dyadic arithmetic (exact). Results normalized.
Dyadic dyadic_add(const Dyadic& a, const Dyadic& b);
Dyadic dyadic_sub(const Dyadic& a, const Dyadic& b);
Dyadic dyadic_mul_2exp(const Dyadic& a, long e); // multiply by 2^e; e<0 raises exp
Dyadic dyadic_one();

} // namespace minkq
