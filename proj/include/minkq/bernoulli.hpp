#pragma once

#include <gmpxx.h>

#include "minkq/errors.hpp"

namespace minkq {

inline constexpr unsigned kBernoulliCap = 700;

// Exact Bernoulli number B_k (B_1 = -1/2). Cached process-wide; safe for
// concurrent readers after first use of an index.
const mpq_class& bernoulli(unsigned k);

// Exact factorial cache, same locking discipline.
const mpz_class& factorial(unsigned k);

} // namespace minkq
