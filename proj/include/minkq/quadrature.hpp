#pragma once

#include <functional>
#include <vector>

#include "minkq/bigreal.hpp"
#include "minkq/precision.hpp"

namespace minkq {

// Gauss-Legendre nodes/weights on [-1,1], Newton on P_n at the given
// precision. Cached per (n, prec).
struct GaussLegendre {
    std::vector<BigReal> nodes;
    std::vector<BigReal> weights;
};

const GaussLegendre& gauss_legendre(unsigned n, mpfr_prec_t prec);

// integral_a^b f, single panel.
BigReal gl_panel(const std::function<BigReal(const BigReal&)>& f, const BigReal& a,
                 const BigReal& b, unsigned n, mpfr_prec_t prec);

// Double-precision rule for throwaway oscillatory panels.
struct GaussLegendreD {
    std::vector<double> nodes;
    std::vector<double> weights;
};
const GaussLegendreD& gauss_legendre_d(unsigned n);

} // namespace minkq
