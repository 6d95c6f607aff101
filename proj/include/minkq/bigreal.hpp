#pragma once

#include <mpfr.h>

#include <cmath>
#include <string>
#include <utility>

#include "minkq/precision.hpp"

namespace minkq {

// Arbitrary-precision real with an attached worst-case absolute error bound.
//
// The error channel is a double (upper bound, NaN = unknown); arithmetic
// propagates it interval-style plus one rounding ulp per operation. The bound
// is clamped from below so it stays representable, which keeps it an upper
// bound at any mpfr precision.
class BigReal {
  public:
    explicit BigReal(mpfr_prec_t prec = 256) {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
        err_ = 0.0;
    }
    BigReal(const BigReal& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
        err_ = o.err_;
    }
    BigReal(BigReal&& o) noexcept {
        mpfr_init2(v_, 64);
        mpfr_swap(v_, o.v_);
        err_ = o.err_;
    }
    BigReal& operator=(const BigReal& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
            err_ = o.err_;
        }
        return *this;
    }
    BigReal& operator=(BigReal&& o) noexcept {
        if (this != &o) {
            mpfr_swap(v_, o.v_);
            err_ = o.err_;
        }
        return *this;
    }
    ~BigReal() { mpfr_clear(v_); }

    static BigReal from_long(long n, mpfr_prec_t prec);
    static BigReal from_double(double x, mpfr_prec_t prec);
    static BigReal from_string(const std::string& s, mpfr_prec_t prec);

    static BigReal pi(mpfr_prec_t prec);
    static BigReal log2(mpfr_prec_t prec);         // log(2)
    static BigReal log_2pi(mpfr_prec_t prec);      // log(2*pi)
    static BigReal euler_gamma(mpfr_prec_t prec);
    static BigReal lipschitz_alpha(mpfr_prec_t prec); // log 2 / (2 log((1+sqrt5)/2))

    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

    double err() const { return err_; }
    bool err_known() const { return !std::isnan(err_); }
    void set_err(double e) { err_ = e; }
    void clear_err() { err_ = std::numeric_limits<double>::quiet_NaN(); }
    void widen_err(double e) { err_ = add_err(err_, e); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    int cmp(const BigReal& o) const { return mpfr_cmp(v_, o.v_); }
    int cmp_d(double d) const { return mpfr_cmp_d(v_, d); }

    bool operator<(const BigReal& o) const { return cmp(o) < 0; }
    bool operator>(const BigReal& o) const { return cmp(o) > 0; }
    bool operator==(const BigReal& o) const { return cmp(o) == 0; }

    BigReal operator+(const BigReal& o) const;
    BigReal operator-(const BigReal& o) const;
    BigReal operator*(const BigReal& o) const;
    BigReal operator/(const BigReal& o) const;
    BigReal operator-() const;
    BigReal& operator+=(const BigReal& o);
    BigReal& operator-=(const BigReal& o);
    BigReal& operator*=(const BigReal& o);

    BigReal mul_2exp(long e) const;   // exact scale by 2^e
    BigReal mul_long(long k) const;
    BigReal div_long(long k) const;
    BigReal abs() const;
    BigReal sqrt() const;
    BigReal log() const;
    BigReal log1p() const;
    BigReal exp() const;
    BigReal sin() const;
    BigReal cos() const;
    BigReal pow_ui(unsigned long k) const;

    // One ulp of the stored value at its precision (0 for zero value).
    double ulp() const {
        if (mpfr_zero_p(v_) || !mpfr_number_p(v_)) return 0.0;
        return exp2_clamped(static_cast<double>(mpfr_get_exp(v_)) -
                            static_cast<double>(mpfr_get_prec(v_)) + 1.0);
    }

    // Upper bound on |value|, as a double (clamped away from under/overflow).
    double mag() const {
        if (mpfr_zero_p(v_)) return 0.0;
        return exp2_clamped(static_cast<double>(mpfr_get_exp(v_)));
    }

    // Decimal string, round-to-nearest, `digits` significant digits in
    // scientific form (no trailing-zero trimming: stable golden output).
    std::string to_decimal(int digits) const;

    static double add_err(double a, double b) {
        double s = (a + b) * kSlack;
        return clamp_err(s);
    }
    static double clamp_err(double e) {
        if (std::isnan(e)) return e;
        if (e == 0.0) return 0.0;
        if (e < kMinErr) return kMinErr;
        return e;
    }
    static double exp2_clamped(double e) {
        if (e < -960.0) return kMinErr;
        if (e > 960.0) return std::numeric_limits<double>::infinity();
        return std::ldexp(1.0, static_cast<int>(e));
    }

    static constexpr double kMinErr = 1e-289;
    static constexpr double kSlack = 1.0 + 1e-12;

  private:
    mpfr_t v_;
    double err_;
};

} // namespace minkq
