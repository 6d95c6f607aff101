#include "minkq/bigreal.hpp"

#include <limits>
#include <vector>

namespace minkq {

namespace {
mpfr_prec_t join_prec(const BigReal& a, const BigReal& b) {
    return std::max(a.prec(), b.prec());
}
} // namespace

BigReal BigReal::from_long(long n, mpfr_prec_t prec) {
    BigReal r(prec);
    mpfr_set_si(r.raw(), n, MPFR_RNDN);
    r.set_err(0.0);
    return r;
}

BigReal BigReal::from_double(double x, mpfr_prec_t prec) {
    BigReal r(prec);
    mpfr_set_d(r.raw(), x, MPFR_RNDN);
    r.set_err(0.0); // doubles are exact in >=53-bit targets
    return r;
}

BigReal BigReal::from_string(const std::string& s, mpfr_prec_t prec) {
    BigReal r(prec);
    if (mpfr_set_str(r.raw(), s.c_str(), 10, MPFR_RNDN) != 0)
        throw domain_error("BigReal: unparsable decimal literal: " + s);
    r.set_err(r.ulp());
    return r;
}

BigReal BigReal::pi(mpfr_prec_t prec) {
    BigReal r(prec);
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    r.set_err(r.ulp());
    return r;
}

BigReal BigReal::log2(mpfr_prec_t prec) {
    BigReal r(prec);
    mpfr_const_log2(r.raw(), MPFR_RNDN);
    r.set_err(r.ulp());
    return r;
}

BigReal BigReal::log_2pi(mpfr_prec_t prec) {
    BigReal t = pi(prec).mul_2exp(1);
    return t.log();
}

BigReal BigReal::euler_gamma(mpfr_prec_t prec) {
    BigReal r(prec);
    mpfr_const_euler(r.raw(), MPFR_RNDN);
    r.set_err(r.ulp());
    return r;
}

BigReal BigReal::lipschitz_alpha(mpfr_prec_t prec) {
    BigReal five = from_long(5, prec);
    BigReal phi = (five.sqrt() + from_long(1, prec)).div_long(2);
    BigReal r = log2(prec) / phi.log().mul_2exp(1);
    return r;
}

BigReal BigReal::operator+(const BigReal& o) const {
    BigReal r(join_prec(*this, o));
    mpfr_add(r.raw(), v_, o.v_, MPFR_RNDN);
    r.set_err(add_err(err_, add_err(o.err_, r.ulp())));
    return r;
}

BigReal BigReal::operator-(const BigReal& o) const {
    BigReal r(join_prec(*this, o));
    mpfr_sub(r.raw(), v_, o.v_, MPFR_RNDN);
    r.set_err(add_err(err_, add_err(o.err_, r.ulp())));
    return r;
}

BigReal BigReal::operator*(const BigReal& o) const {
    BigReal r(join_prec(*this, o));
    mpfr_mul(r.raw(), v_, o.v_, MPFR_RNDN);
    double e = mag() * o.err_ + o.mag() * err_ + err_ * o.err_;
    r.set_err(add_err(e, r.ulp()));
    return r;
}

BigReal BigReal::operator/(const BigReal& o) const {
    BigReal r(join_prec(*this, o));
    mpfr_div(r.raw(), v_, o.v_, MPFR_RNDN);
    double ob = o.mag();
    double e;
    if (o.err_ >= 0.5 * ob || ob == 0.0)
        e = std::numeric_limits<double>::quiet_NaN();
    else
        e = (err_ + r.mag() * o.err_) / (ob - o.err_) * 2.0;
    r.set_err(add_err(e, r.ulp()));
    return r;
}

BigReal BigReal::operator-() const {
    BigReal r(prec());
    mpfr_neg(r.raw(), v_, MPFR_RNDN);
    r.set_err(err_);
    return r;
}

BigReal& BigReal::operator+=(const BigReal& o) { return *this = *this + o; }
BigReal& BigReal::operator-=(const BigReal& o) { return *this = *this - o; }
BigReal& BigReal::operator*=(const BigReal& o) { return *this = *this * o; }

BigReal BigReal::mul_2exp(long e) const {
    BigReal r(prec());
    mpfr_mul_2si(r.raw(), v_, e, MPFR_RNDN);
    r.set_err(clamp_err(err_ * exp2_clamped(static_cast<double>(e))));
    return r;
}

BigReal BigReal::mul_long(long k) const {
    BigReal r(prec());
    mpfr_mul_si(r.raw(), v_, k, MPFR_RNDN);
    r.set_err(add_err(err_ * std::fabs(static_cast<double>(k)), r.ulp()));
    return r;
}

BigReal BigReal::div_long(long k) const {
    BigReal r(prec());
    mpfr_div_si(r.raw(), v_, k, MPFR_RNDN);
    r.set_err(add_err(err_ / std::fabs(static_cast<double>(k)), r.ulp()));
    return r;
}

BigReal BigReal::abs() const {
    BigReal r(prec());
    mpfr_abs(r.raw(), v_, MPFR_RNDN);
    r.set_err(err_);
    return r;
}

BigReal BigReal::sqrt() const {
    BigReal r(prec());
    mpfr_sqrt(r.raw(), v_, MPFR_RNDN);
    double rb = r.mag();
    double e = rb > 0 ? err_ / rb : std::numeric_limits<double>::quiet_NaN();
    r.set_err(add_err(e, r.ulp()));
    return r;
}

BigReal BigReal::log() const {
    BigReal r(prec());
    mpfr_log(r.raw(), v_, MPFR_RNDN);
    double xb = mag();
    double e = (err_ < 0.5 * xb) ? err_ / (xb * 0.5)
                                 : std::numeric_limits<double>::quiet_NaN();
    r.set_err(add_err(e, r.ulp()));
    return r;
}

BigReal BigReal::log1p() const {
    BigReal r(prec());
    mpfr_log1p(r.raw(), v_, MPFR_RNDN);
    // |d/dx log(1+x)| <= 1/(1+x); arguments here are >= 0
    r.set_err(add_err(err_, r.ulp()));
    return r;
}

BigReal BigReal::exp() const {
    BigReal r(prec());
    mpfr_exp(r.raw(), v_, MPFR_RNDN);
    r.set_err(add_err(r.mag() * err_ * 1.5, r.ulp()));
    return r;
}

BigReal BigReal::sin() const {
    BigReal r(prec());
    mpfr_sin(r.raw(), v_, MPFR_RNDN);
    r.set_err(add_err(std::min(err_, 2.0), r.ulp()));
    return r;
}

BigReal BigReal::cos() const {
    BigReal r(prec());
    mpfr_cos(r.raw(), v_, MPFR_RNDN);
    r.set_err(add_err(std::min(err_, 2.0), r.ulp()));
    return r;
}

BigReal BigReal::pow_ui(unsigned long k) const {
    BigReal r(prec());
    mpfr_pow_ui(r.raw(), v_, k, MPFR_RNDN);
    double e;
    if (err_ == 0.0)
        e = 0.0;
    else if (mag() <= 1.0)
        e = static_cast<double>(k) * err_; // |d/dx x^k| <= k on [-1,1]
    else
        e = static_cast<double>(k) * err_ * (r.mag() / mag()) * 2.0;
    r.set_err(add_err(e, static_cast<double>(k) * r.ulp()));
    return r;
}

std::string BigReal::to_decimal(int digits) const {
    if (digits < 1) digits = 1;
    std::vector<char> buf(static_cast<size_t>(digits) + 64);
    mpfr_snprintf(buf.data(), buf.size(), "%.*RNe", digits - 1, v_);
    return std::string{buf.data()};
}

} // namespace minkq
