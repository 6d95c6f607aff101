#include "minkq/continued_fraction.hpp"

#include <sstream>

namespace minkq {

Rational ContinuedFraction::value() const {
    mpq_class acc(0);
    for (auto it = quotients.rbegin(); it != quotients.rend(); ++it) {
        acc += *it;             // a_i + previous tail
        acc = 1 / acc;          // descend one level
    }
    acc += a0;
    return Rational(acc);
}

ContinuedFraction ContinuedFraction::alternate() const {
    ContinuedFraction alt = *this;
    if (quotients.empty()) {
        if (a0 > 0) {
            alt.a0 = a0 - 1;
            alt.quotients = {mpz_class(1)};
        }
        return alt; // 0 has a single representation
    }
    if (quotients.back() >= 2) {
        alt.quotients.back() -= 1;
        alt.quotients.emplace_back(1);
        return alt;
    }
    // last quotient is 1: fold it into the previous term
    alt.quotients.pop_back();
    if (alt.quotients.empty())
        alt.a0 += 1;
    else
        alt.quotients.back() += 1;
    return alt;
}

std::string ContinuedFraction::str() const {
    std::ostringstream os;
    os << "[" << a0.get_str();
    if (!quotients.empty()) {
        os << ";";
        for (size_t i = 0; i < quotients.size(); ++i)
            os << (i ? "," : "") << quotients[i].get_str();
    }
    os << "]";
    return os.str();
}

ContinuedFraction cf_expand(const Rational& x) {
    if (x.sign() < 0 || x.cmp_long(1, 1) > 0)
        throw domain_error("cf_expand: argument must lie in [0,1]");
    return cf_expand_general(x);
}

ContinuedFraction cf_expand_general(const Rational& x) {
    ContinuedFraction cf;
    cf.a0 = x.floor();
    mpz_class num = x.num() - cf.a0 * x.den(); // fractional part, 0 <= num < den
    mpz_class den = x.den();
    while (num != 0) {
        mpz_class a, r;
        mpz_fdiv_qr(a.get_mpz_t(), r.get_mpz_t(), den.get_mpz_t(), num.get_mpz_t());
        cf.quotients.push_back(a);
        den = num;
        num = r;
    }
    return cf;
}

} // namespace minkq
