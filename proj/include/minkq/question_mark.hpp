#pragma once

#include <cstdint>

#include "minkq/continued_fraction.hpp"
#include "minkq/rational.hpp"

namespace minkq {

// Cap on the sum of partial quotients for exact dyadic evaluation (the result
// numerator has that many bits). Rounded evaluation has no such cap.
inline constexpr unsigned long kExactBitCap = 1ul << 26;

// ?(x) for x in [0,1], exact dyadic value.
Dyadic question_mark(const Rational& x, unsigned long bit_cap = kExactBitCap);

// ?(x) for any rational, with ?(x)=0 for x<=0 and ?(x)=1 for x>=1.
Dyadic question_mark_ext(const Rational& x, unsigned long bit_cap = kExactBitCap);

// F(x) = ?(x/(x+1)) for x >= 0.
Dyadic extended_F(const Rational& x, unsigned long bit_cap = kExactBitCap);

// Delta(x) = 1 - F(x) for x >= 0, extended to all rationals by
// Delta(x+1) = Delta(x)/2.
Dyadic delta(const Rational& x, unsigned long bit_cap = kExactBitCap);

// Phi(x) = 2^floor(x) * Delta(x); periodic with period 1.
Dyadic phi(const Rational& x, unsigned long bit_cap = kExactBitCap);

// ?(x) rounded to prec (works for arbitrarily large quotient sums).
BigReal question_mark_real(const Rational& x, mpfr_prec_t prec);

// Hot kernel: writes ?(p/q) (p/q need not be reduced, 0 <= p <= q) rounded to
// out's precision. Error <= 0.51 ulp: dyadic terms below the precision window
// are dropped by a rule that depends only on (p, q, precision), so results are
// reproducible regardless of call order or threading.
void question_mark_u64(std::uint64_t p, std::uint64_t q, mpfr_ptr out);

} // namespace minkq
