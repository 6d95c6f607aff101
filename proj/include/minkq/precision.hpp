#pragma once

#include "minkq/errors.hpp"

namespace minkq {

// Working precision for the high-precision modules. `bits` is the precision of
// reported values; `guard_bits` extra bits are carried through intermediate sums.
struct PrecisionContext {
    long bits = 256;
    long guard_bits = 64;

    long work() const { return bits + guard_bits; }

    void validate() const {
        if (bits < 64)
            throw domain_error("PrecisionContext: bits must be >= 64");
        if (guard_bits < 0)
            throw domain_error("PrecisionContext: guard_bits must be >= 0");
    }

    static PrecisionContext with_bits(long b, long guard = 64) {
        PrecisionContext ctx{b, guard};
        ctx.validate();
        return ctx;
    }
};

} // namespace minkq
