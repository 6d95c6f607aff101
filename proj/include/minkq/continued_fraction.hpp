#pragma once

#include <vector>

#include "minkq/rational.hpp"

namespace minkq {

// Regular continued fraction a0 + 1/(a1 + 1/(a2 + ...)) with a_i >= 1 for
// i >= 1. Canonical finite form has last quotient >= 2 unless the expansion is
// a single 1; the alternate form (..., a_k - 1, 1) represents the same value.
struct ContinuedFraction {
    mpz_class a0;
    std::vector<mpz_class> quotients;

    bool empty() const { return quotients.empty(); }
    size_t length() const { return quotients.size(); }

    Rational value() const;

    // The other finite representation of the same rational.
    ContinuedFraction alternate() const;

    bool is_canonical() const {
        return quotients.empty() || quotients.size() == 1 || quotients.back() >= 2;
    }

    std::string str() const;
};

// Euclidean expansion of x in [0,1] (a0 = 0 except x = 1 -> [1]).
// Returns the canonical form.
ContinuedFraction cf_expand(const Rational& x);

// Expansion of any rational (a0 = floor(x)).
ContinuedFraction cf_expand_general(const Rational& x);

} // namespace minkq
