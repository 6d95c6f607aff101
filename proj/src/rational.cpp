#include "minkq/rational.hpp"

namespace minkq {

Rational Rational::parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(mpz_class(s), mpz_class(1));
        mpz_class p(s.substr(0, slash));
        mpz_class q(s.substr(slash + 1));
        return Rational(p, q);
    } catch (const std::invalid_argument&) {
        throw domain_error("Rational: unparsable value: " + s);
    }
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw domain_error("Rational: division by zero");
    return Rational(mpq_class(q_ / o.q_));
}

Dyadic dyadic_add(const Dyadic& a, const Dyadic& b) {
    unsigned long e = std::max(a.exp, b.exp);
    mpz_class n = (a.num << (e - a.exp)) + (b.num << (e - b.exp));
    return Dyadic(std::move(n), e);
}

Dyadic dyadic_sub(const Dyadic& a, const Dyadic& b) {
    unsigned long e = std::max(a.exp, b.exp);
    mpz_class n = (a.num << (e - a.exp)) - (b.num << (e - b.exp));
    return Dyadic(std::move(n), e);
}

Dyadic dyadic_mul_2exp(const Dyadic& a, long e) {
    if (e >= 0) {
        mpz_class n = a.num << static_cast<unsigned long>(e);
        return Dyadic(std::move(n), a.exp);
    }
    return Dyadic(a.num, a.exp + static_cast<unsigned long>(-e));
}

Dyadic dyadic_one() { return Dyadic(mpz_class(1), 0); }

} // namespace minkq
