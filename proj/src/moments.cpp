#include "minkq/moments.hpp"

#include <cmath>

#include "minkq/farey.hpp"
#include "minkq/parallel.hpp"

namespace minkq {

namespace {

// Chebyshev coefficients of x^L on [0,1] are 2^(1-2L) binom(2L, L-j); the
// interpolation (aliasing) error at degree D is bounded by twice the tail.
double power_alias_bound(long L, long D) {
    if (L <= D) return 0.0;
    double log2e = 1.4426950408889634;
    double tail = 0;
    for (long j = D + 1; j <= L; ++j) {
        double lg = (1.0 - 2.0 * L) / log2e + std::lgamma(2.0 * L + 1) -
                    std::lgamma(double(L - j) + 1) - std::lgamma(double(L + j) + 1);
        double term = std::exp(lg);
        tail += term;
        if (term < 1e-200) break;
    }
    return 2.0 * tail;
}

long auto_degree(long lmax, const PrecisionContext& ctx) {
    double need = std::sqrt(double(lmax) * (double(ctx.work()) + 16.0) * 0.6931472);
    long d = 128;
    while (d < static_cast<long>(need) && d < 4096) d *= 2;
    return d;
}

} // namespace

MomentTable moments(long lmax, const PrecisionContext& ctx, long degree) {
    ctx.validate();
    if (lmax < 1) throw domain_error("moments: lmax must be >= 1");
    if (lmax > 4096) throw resource_error("moments: lmax cap is 4096");
    TransferOperatorSpec spec;
    spec.degree = degree > 0 ? degree : auto_degree(lmax, ctx);
    const auto& rule = quadrature_rule(spec, ctx);
    const mpfr_prec_t prec = ctx.work();
    const size_t n = rule.nodes.size();

    MomentTable table;
    table.ctx = ctx;
    table.lmax = lmax;
    table.m.reserve(lmax + 1);

    std::vector<BigReal> pw(n, BigReal(prec)); // x_i^L column
    for (size_t i = 0; i < n; ++i) mpfr_set_si(pw[i].raw(), 1, MPFR_RNDN);
    const double unit = BigReal::exp2_clamped(3.0 - double(prec));
    for (long L = 0; L <= lmax; ++L) {
        if (L > 0)
            for (size_t i = 0; i < n; ++i)
                mpfr_mul(pw[i].raw(), pw[i].raw(), rule.nodes[i].raw(), MPFR_RNDN);
        for (size_t i = 0; i < n; ++i)
            pw[i].set_err(BigReal::clamp_err(double(L + 2) * unit));
        BigReal mL = rule.dot(pw);
        mL.widen_err(power_alias_bound(L, rule.degree));
        table.m.push_back(std::move(mL));
    }

    // anchors: m_0 = 1 and m_1 = 1/2 are exact; widen every err if violated
    double a0 = (table.m[0] - BigReal::from_long(1, prec)).abs().to_double();
    double a1 = (table.m[1] - BigReal::from_long(1, prec).mul_2exp(-1)).abs().to_double();
    double anchor = std::max(a0, a1);
    if (anchor > table.m[0].err())
        for (auto& v : table.m) v.widen_err(4.0 * anchor);
    return table;
}

LogIntegrals log_integrals(const MomentTable& mt, const PrecisionContext& ctx) {
    const mpfr_prec_t prec = ctx.work();
    TransferOperatorSpec spec;
    spec.degree = 128;
    const auto& rule = quadrature_rule(spec, ctx);
    const size_t n = rule.nodes.size();

    LogIntegrals out{BigReal(prec), BigReal(prec), BigReal(prec), BigReal(prec)};

    // quadrature route for log(1+x)
    std::vector<BigReal> vals;
    vals.reserve(n);
    for (const auto& x : rule.nodes) vals.push_back(x.log1p());
    out.log1p_quad = rule.dot(vals);

    // series route: -sum m_n/(n 2^n) + log 2, tail bounded by m_lmax 2^-lmax
    BigReal s(prec);
    for (long k = 1; k <= mt.lmax; ++k) s += mt.at(k).div_long(k).mul_2exp(-k);
    out.log1p_series = BigReal::log2(prec) - s;
    out.log1p_series.widen_err(2.0 * mt.at(mt.lmax).mag() *
                               BigReal::exp2_clamped(-double(mt.lmax)));

    // cylinder route: integral log x d? = -sum_a 2^-a integral log(a+t) d?(t)
    const long A = ctx.work();
    BigReal acc(prec);
    std::vector<BigReal> lv(n, BigReal(prec));
    BigReal tmp(prec);
    for (long a = 1; a <= A; ++a) {
        for (size_t i = 0; i < n; ++i) {
            mpfr_add_si(tmp.raw(), rule.nodes[i].raw(), a, MPFR_RNDN);
            mpfr_log(lv[i].raw(), tmp.raw(), MPFR_RNDN);
            lv[i].set_err(4.0 * lv[i].ulp());
        }
        acc += rule.dot(lv).mul_2exp(-a);
    }
    out.logx_cylinder = -acc;
    out.logx_cylinder.widen_err(2.0 * std::log(double(A) + 2.0) *
                                BigReal::exp2_clamped(-double(A)));

    out.logx_series = -out.log1p_series.mul_2exp(1);
    return out;
}

BigReal stieltjes_sum(const std::function<void(std::uint64_t, std::uint64_t, mpfr_ptr)>& f,
                      unsigned depth, StieltjesRule rule, double lipschitz_bound,
                      const PrecisionContext& ctx, unsigned depth_cap) {
    ctx.validate();
    if (depth > depth_cap || depth + 1 > kStreamDepthCap)
        throw resource_error("stieltjes_sum: depth " + std::to_string(depth) +
                             " exceeds the cap " + std::to_string(depth_cap));
    const mpfr_prec_t prec = ctx.work();
    BigReal total(prec);

    if (rule == StieltjesRule::MIDPOINT) {
        // mediants of the depth-m partition = generation m+1, split by subtree
        const unsigned gen = depth + 1;
        const unsigned js = std::min(gen, 10u);
        auto subs = farey_subtrees(js);
        std::vector<BigReal> partial(subs.size(), BigReal(prec));
        parallel_chunks(subs.size(), 1, [&](size_t c, size_t, size_t) {
            BigReal fx(prec);
            BigReal acc(prec);
            FareyStream st(subs[c].first, subs[c].second, gen - js);
            while (auto fr = st.next()) {
                f(fr->p, fr->q, fx.raw());
                mpfr_add(acc.raw(), acc.raw(), fx.raw(), MPFR_RNDN);
            }
            partial[c] = std::move(acc);
        });
        pairwise_reduce_inplace(partial, [](BigReal& a, const BigReal& b) {
            mpfr_add(a.raw(), a.raw(), b.raw(), MPFR_RNDN);
        });
        total = std::move(partial[0]);
    } else {
        BigReal fx(prec);
        FareyPartitionStream st(depth);
        while (auto fr = st.next()) {
            f(fr->p, fr->q, fx.raw());
            mpfr_add(total.raw(), total.raw(), fx.raw(), MPFR_RNDN);
        }
    }
    BigReal out = total.mul_2exp(-static_cast<long>(depth) - 1);
    const double count = std::ldexp(1.0, static_cast<int>(depth) + 1);
    out.set_err(BigReal::add_err(lipschitz_bound / count, 4.0 * count * out.ulp()));
    return out;
}

} // namespace minkq
