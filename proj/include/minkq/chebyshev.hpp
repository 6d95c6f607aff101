#pragma once

#include <functional>
#include <vector>

#include "minkq/bigreal.hpp"
#include "minkq/precision.hpp"

namespace minkq {

// Shifted Chebyshev basis T*_j(x) = cos(j arccos(2x-1)) on [0,1] with
// Lobatto collocation nodes x_i = (1 + cos(i pi / D))/2, i = 0..D (descending).
const std::vector<BigReal>& chebyshev_nodes(long degree, mpfr_prec_t prec);

// Function on [0,1] stored by Chebyshev coefficients c_0..c_D.
class ChebyshevFn {
  public:
    ChebyshevFn(std::vector<BigReal> coeffs, mpfr_prec_t prec)
        : prec_(prec), coeffs_(std::move(coeffs)) {}

    static ChebyshevFn from_values(const std::vector<BigReal>& at_nodes,
                                   mpfr_prec_t prec);
    static ChebyshevFn from_function(const std::function<BigReal(const BigReal&)>& f,
                                     long degree, mpfr_prec_t prec);

    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    mpfr_prec_t prec() const { return prec_; }
    const std::vector<BigReal>& coeffs() const { return coeffs_; }

    BigReal eval(const BigReal& x) const; // Clenshaw
    std::vector<BigReal> values_at_nodes() const;

    // sum |c_j| over the trailing max(8, D/8) coefficients
    double tail_mass() const;
    double sup_estimate() const; // sum |c_j|, a cheap upper bound for sup|f|

  private:
    mpfr_prec_t prec_;
    std::vector<BigReal> coeffs_;
};

} // namespace minkq
