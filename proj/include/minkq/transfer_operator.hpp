#pragma once

#include "minkq/chebyshev.hpp"
#include "minkq/precision.hpp"

namespace minkq {

// Averaging operators whose iterates of a continuous function converge to its
// integral against the Minkowski measure:
//   FAREY: (Tf)(x) = f(x/(x+1))/2 + f(1/(x+1))/2
//   GAUSS: (Tf)(t) = sum_{a>=1} 2^-a f(1/(a+t)), truncated at branch_cap
enum class OperatorKind { FAREY, GAUSS };

struct TransferOperatorSpec {
    OperatorKind kind = OperatorKind::GAUSS;
    long branch_cap = 0; // GAUSS only; 0 = ctx.bits
    long degree = 64;
    long max_iters = 0;  // 0 = auto
    double tol = 0;      // stopping spread; 0 = auto (set just above 2^-bits)

    long resolved_branch_cap(const PrecisionContext& ctx) const {
        if (kind == OperatorKind::FAREY) return 2;
        return branch_cap > 0 ? branch_cap : ctx.bits;
    }
    long resolved_max_iters(const PrecisionContext& ctx) const {
        if (max_iters > 0) return max_iters;
        return kind == OperatorKind::GAUSS ? 4 * ctx.work() + 200 : 20000;
    }
    double resolved_tol(const PrecisionContext& ctx) const {
        if (tol > 0) return tol;
        return BigReal::exp2_clamped(4.0 - double(ctx.bits));
    }
    void validate(const PrecisionContext& ctx) const;
};

// Stationary quadrature functional of the collocated operator: weights w_i at
// the Chebyshev nodes with sum w = 1 and  sum_i w_i f(x_i) = integral f d?
// up to  rho * sup|f| + 2^(1-A) * sup|f| + (Chebyshev tail of f beyond D).
struct QuadratureRule {
    OperatorKind kind;
    long degree = 0;
    long branch_cap = 0;
    mpfr_prec_t prec = 0;
    std::vector<BigReal> nodes;
    std::vector<BigReal> weights;
    double rho = 0;    // residual of the stationary functional, l1
    long iters = 0;

    // error coefficient multiplying sup|f| (alias tail not included)
    double err_scale() const {
        return 8.0 * rho + BigReal::exp2_clamped(1.0 - double(branch_cap));
    }
    BigReal dot(const std::vector<BigReal>& fvals) const;
};

// Cached; GAUSS rules converge geometrically, FAREY rules converge slowly and
// carry an honestly large rho.
const QuadratureRule& quadrature_rule(const TransferOperatorSpec& spec,
                                      const PrecisionContext& ctx);

// One application of the collocated operator in coefficient space.
ChebyshevFn apply_operator(const TransferOperatorSpec& spec, const ChebyshevFn& f,
                           const PrecisionContext& ctx);

// Iterate-to-constant quadrature: T^s f flattens to the constant integral f d?.
// err = final sup-inf spread + branch truncation + coefficient tail of f.
BigReal integrate(const TransferOperatorSpec& spec, const ChebyshevFn& f,
                  const PrecisionContext& ctx);

// Convenience: sample f, adapt the degree until the trailing coefficient mass
// drops below tol/4 (doubling from spec.degree), then integrate.
BigReal integrate_function(const TransferOperatorSpec& spec,
                           const std::function<BigReal(const BigReal&)>& f,
                           const PrecisionContext& ctx);

namespace detail {
// Collocation matrices for one (kind, degree, branch_cap, prec):
// B: coefficient -> image nodal values, P: nodal values -> coefficients.
struct OperatorMatrices {
    long degree;
    std::vector<BigReal> B; // (D+1)^2 row-major
    std::vector<BigReal> P;
};
const OperatorMatrices& operator_matrices(OperatorKind kind, long degree,
                                          long branch_cap, mpfr_prec_t prec);
// y = M x for a (D+1)^2 row-major matrix
void matvec(const std::vector<BigReal>& M, const std::vector<BigReal>& x,
            std::vector<BigReal>& y, mpfr_prec_t prec);
// y = M^T x
void matvec_t(const std::vector<BigReal>& M, const std::vector<BigReal>& x,
              std::vector<BigReal>& y, mpfr_prec_t prec);
} // namespace detail

} // namespace minkq
