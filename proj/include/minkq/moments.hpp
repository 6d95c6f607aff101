#pragma once

#include <cstdint>
#include <functional>

#include "minkq/transfer_operator.hpp"

namespace minkq {

// m_L = integral x^L d?(x), L = 0..lmax, with per-entry error bounds.
struct MomentTable {
    PrecisionContext ctx;
    long lmax = 0;
    std::vector<BigReal> m;

    const BigReal& at(long L) const {
        if (L < 0 || L > lmax)
            throw range_error("MomentTable: moment index " + std::to_string(L) +
                              " outside table (lmax " + std::to_string(lmax) + ")");
        return m[static_cast<size_t>(L)];
    }
};

inline constexpr long kDefaultMomentLmax = 260;

// GAUSS-operator quadrature; degree 0 picks the smallest degree whose
// Chebyshev tail of x^lmax is below working precision. Moments up to lmax=degree
// carry no aliasing at all (x^L is a polynomial the rule integrates directly).
MomentTable moments(long lmax, const PrecisionContext& ctx, long degree = 0);

struct LogIntegrals {
    BigReal log1p_quad;    // integral log(1+x) d?, operator quadrature
    BigReal log1p_series;  // -sum m_n/(n 2^n) + log 2
    BigReal logx_cylinder; // integral log x d? via -sum_a 2^-a integral log(a+t) d?
    BigReal logx_series;   // -2 * log1p_series
};
LogIntegrals log_integrals(const MomentTable& mt, const PrecisionContext& ctx);

enum class StieltjesRule { LEFT, MIDPOINT };

// Riemann-Stieltjes sum over the depth-m Farey partition (2^(m+1) intervals of
// ?-mass exactly 2^-(m+1)). MIDPOINT evaluates at the interval mediants,
// LEFT at the left endpoints. f(p, q, out) writes f(p/q) at out's precision;
// lipschitz_bound is a bound on sup|f'| used for the reported error.
BigReal stieltjes_sum(const std::function<void(std::uint64_t, std::uint64_t, mpfr_ptr)>& f,
                      unsigned depth, StieltjesRule rule, double lipschitz_bound,
                      const PrecisionContext& ctx, unsigned depth_cap = 30);

} // namespace minkq
