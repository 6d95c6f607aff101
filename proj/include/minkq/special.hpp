#pragma once

#include "minkq/bigreal.hpp"
#include "minkq/precision.hpp"

namespace minkq {

// zeta(2n) from the closed form (2pi)^(2n) |B_2n| / (2 (2n)!).
BigReal zeta_even(unsigned n, const PrecisionContext& ctx);

// zeta(2n) - 1 without cancellation: closed form for small n, the direct
// series sum_{k>=2} k^(-2n) once that converges in a handful of terms.
BigReal zeta_even_minus_one(unsigned n, const PrecisionContext& ctx);

// integral_a^inf sin(2*pi*y)/y dy  ( = pi/2 - Si(2*pi*a) ).
// Power series below Si argument 40, asymptotic expansion with the
// first-omitted-term remainder bound above.
BigReal sine_integral_tail(const BigReal& a, const PrecisionContext& ctx);
BigReal sine_integral_tail_int(unsigned long a, const PrecisionContext& ctx);

// sum_{n>=1} 2^(-n) (log n)^r for odd r >= 1.
BigReal twopow_log_series(unsigned r, const PrecisionContext& ctx);

// Li_s(1/2) = sum_{K>=1} 2^(-K) K^(-s).
BigReal polylog_half(unsigned s, const PrecisionContext& ctx);

// sum_{n>N} n^(-s), s >= 2, N >= 8, via Euler-Maclaurin with a rigorous
// first-omitted-term error bound.
BigReal hurwitz_tail(unsigned s, unsigned long N, const PrecisionContext& ctx);

} // namespace minkq
