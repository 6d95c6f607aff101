#include "minkq/transfer_operator.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "minkq/parallel.hpp"

namespace minkq {

void TransferOperatorSpec::validate(const PrecisionContext& ctx) const {
    ctx.validate();
    if (degree < 4) throw domain_error("TransferOperatorSpec: degree must be >= 4");
    if (degree > 4096) throw resource_error("TransferOperatorSpec: degree cap is 4096");
    if (kind == OperatorKind::GAUSS && resolved_branch_cap(ctx) < 1)
        throw domain_error("TransferOperatorSpec: branch_cap must be >= 1");
    if (tol > 0 && tol <= BigReal::exp2_clamped(-double(ctx.bits)))
        throw domain_error("TransferOperatorSpec: tol must exceed 2^-bits");
}

namespace detail {

namespace {

std::mutex g_mat_mu;
std::map<std::tuple<int, long, long, mpfr_prec_t>, OperatorMatrices> g_mat_cache;

OperatorMatrices build_matrices(OperatorKind kind, long D, long A, mpfr_prec_t prec) {
    OperatorMatrices m;
    m.degree = D;
    const long n = D + 1;
    const auto& nodes = chebyshev_nodes(D, prec);

    // B[i][j] = sum_a w_a T*_j(phi_a(x_i)); Chebyshev recurrence in j per (i,a)
    m.B.assign(static_cast<size_t>(n) * n, BigReal(prec));
    parallel_chunks(n, 8, [&](size_t, size_t lo, size_t hi) {
        BigReal u(prec), t(prec), t2(prec), Tprev(prec), Tcur(prec), Tnext(prec),
            w(prec);
        for (size_t i = lo; i < hi; ++i) {
            BigReal* row = &m.B[i * n];
            const long nbranch = (kind == OperatorKind::GAUSS) ? A : 2;
            for (long a = 1; a <= nbranch; ++a) {
                if (kind == OperatorKind::GAUSS) {
                    // u = 1/(a + x_i), weight 2^-a
                    mpfr_add_si(u.raw(), nodes[i].raw(), a, MPFR_RNDN);
                    mpfr_si_div(u.raw(), 1, u.raw(), MPFR_RNDN);
                    mpfr_set_si_2exp(w.raw(), 1, -a, MPFR_RNDN);
                } else {
                    // branches x/(x+1) and 1/(x+1), weight 1/2 each
                    mpfr_add_si(u.raw(), nodes[i].raw(), 1, MPFR_RNDN);
                    if (a == 1)
                        mpfr_div(u.raw(), nodes[i].raw(), u.raw(), MPFR_RNDN);
                    else
                        mpfr_si_div(u.raw(), 1, u.raw(), MPFR_RNDN);
                    mpfr_set_d(w.raw(), 0.5, MPFR_RNDN);
                }
                // t = 2u - 1; T*_j(u) = T_j(t), three-term recurrence in j
                mpfr_mul_2si(t.raw(), u.raw(), 1, MPFR_RNDN);
                mpfr_sub_si(t.raw(), t.raw(), 1, MPFR_RNDN);
                mpfr_mul_2si(t2.raw(), t.raw(), 1, MPFR_RNDN);
                mpfr_set_si(Tprev.raw(), 1, MPFR_RNDN);
                mpfr_set(Tcur.raw(), t.raw(), MPFR_RNDN);
                mpfr_fma(row[0].raw(), w.raw(), Tprev.raw(), row[0].raw(), MPFR_RNDN);
                for (long j = 1; j <= D; ++j) {
                    mpfr_fma(row[j].raw(), w.raw(), Tcur.raw(), row[j].raw(), MPFR_RNDN);
                    mpfr_fms(Tnext.raw(), t2.raw(), Tcur.raw(), Tprev.raw(), MPFR_RNDN);
                    mpfr_swap(Tprev.raw(), Tcur.raw());
                    mpfr_swap(Tcur.raw(), Tnext.raw());
                }
            }
            double rerr = double(nbranch + D) * 4.0;
            for (long j = 0; j <= D; ++j)
                row[j].set_err(BigReal::clamp_err(rerr * row[j].ulp()));
        }
    });

    // P[j][i]: nodal values -> coefficients (type-I DCT with halved ends)
    m.P.assign(static_cast<size_t>(n) * n, BigReal(prec));
    BigReal pi = BigReal::pi(prec);
    std::vector<BigReal> costab;
    costab.reserve(2 * D);
    for (long r = 0; r < 2 * D; ++r) costab.push_back(pi.mul_long(r).div_long(D).cos());
    for (long j = 0; j <= D; ++j) {
        BigReal* row = &m.P[static_cast<size_t>(j) * n];
        for (long i = 0; i <= D; ++i) {
            BigReal e = costab[(i * j) % (2 * D)].mul_2exp(1).div_long(D);
            if (i == 0 || i == D) e = e.mul_2exp(-1);
            if (j == 0 || j == D) e = e.mul_2exp(-1);
            row[i] = std::move(e);
        }
    }
    return m;
}

} // namespace

const OperatorMatrices& operator_matrices(OperatorKind kind, long D, long A,
                                          mpfr_prec_t prec) {
    std::scoped_lock lock(g_mat_mu);
    auto key = std::make_tuple(static_cast<int>(kind), D, A, prec);
    auto it = g_mat_cache.find(key);
    if (it == g_mat_cache.end())
        it = g_mat_cache.emplace(key, build_matrices(kind, D, A, prec)).first;
    return it->second;
}

void matvec(const std::vector<BigReal>& M, const std::vector<BigReal>& x,
            std::vector<BigReal>& y, mpfr_prec_t prec) {
    const size_t n = x.size();
    y.assign(n, BigReal(prec));
    parallel_chunks(n, 16, [&](size_t, size_t lo, size_t hi) {
        for (size_t i = lo; i < hi; ++i) {
            mpfr_ptr acc = y[i].raw();
            const BigReal* row = &M[i * n];
            for (size_t j = 0; j < n; ++j)
                mpfr_fma(acc, row[j].raw(), x[j].raw(), acc, MPFR_RNDN);
            y[i].set_err(BigReal::clamp_err(2.0 * double(n) * y[i].ulp()));
        }
    });
}

void matvec_t(const std::vector<BigReal>& M, const std::vector<BigReal>& x,
              std::vector<BigReal>& y, mpfr_prec_t prec) {
    const size_t n = x.size();
    y.assign(n, BigReal(prec));
    parallel_chunks(n, 16, [&](size_t, size_t lo, size_t hi) {
        for (size_t i = lo; i < hi; ++i) {
            mpfr_ptr acc = y[i].raw();
            for (size_t j = 0; j < n; ++j)
                mpfr_fma(acc, M[j * n + i].raw(), x[j].raw(), acc, MPFR_RNDN);
            y[i].set_err(BigReal::clamp_err(2.0 * double(n) * y[i].ulp()));
        }
    });
}

} // namespace detail

namespace {

std::mutex g_rule_mu;
std::map<std::tuple<int, long, long, mpfr_prec_t>, QuadratureRule> g_rule_cache;

QuadratureRule build_rule(const TransferOperatorSpec& spec, const PrecisionContext& ctx) {
    const mpfr_prec_t prec = ctx.work();
    const long D = spec.degree;
    const long A = spec.resolved_branch_cap(ctx);
    const auto& M = detail::operator_matrices(spec.kind, D, A, prec);
    const size_t n = static_cast<size_t>(D) + 1;

    QuadratureRule rule;
    rule.kind = spec.kind;
    rule.degree = D;
    rule.branch_cap = A;
    rule.prec = prec;
    rule.nodes = chebyshev_nodes(D, prec);

    // left Perron vector of N = B P via  w <- P^T (B^T w), normalized sum = 1
    std::vector<BigReal> w(n, BigReal(prec)), tmp(n, BigReal(prec)), nw;
    for (auto& wi : w) mpfr_set_d(wi.raw(), 1.0 / double(n), MPFR_RNDN);
    const long iters_cap = spec.resolved_max_iters(ctx);
    double delta = 1e300;
    long it = 0;
    const double floor_ = BigReal::exp2_clamped(-double(prec) + 10);
    for (; it < iters_cap; ++it) {
        detail::matvec_t(M.B, w, tmp, prec);
        detail::matvec_t(M.P, tmp, nw, prec);
        // normalize and measure movement
        BigReal sum(prec);
        for (auto& x : nw) mpfr_add(sum.raw(), sum.raw(), x.raw(), MPFR_RNDN);
        BigReal dl1(prec);
        BigReal d(prec);
        for (size_t i = 0; i < n; ++i) {
            mpfr_div(nw[i].raw(), nw[i].raw(), sum.raw(), MPFR_RNDN);
            mpfr_sub(d.raw(), nw[i].raw(), w[i].raw(), MPFR_RNDN);
            mpfr_abs(d.raw(), d.raw(), MPFR_RNDN);
            mpfr_add(dl1.raw(), dl1.raw(), d.raw(), MPFR_RNDN);
        }
        std::swap(w, nw);
        double dnow = dl1.to_double();
        if (dnow < floor_) {
            delta = dnow;
            ++it;
            break;
        }
        // FAREY converges slowly; stop when progress stalls near the floor
        if (dnow >= delta && delta < 1e-6 && spec.kind == OperatorKind::FAREY) break;
        delta = dnow;
    }
    rule.iters = it;

    // residual of the stationary equation, reported as rho
    detail::matvec_t(M.B, w, tmp, prec);
    std::vector<BigReal> r;
    detail::matvec_t(M.P, tmp, r, prec);
    BigReal sum(prec);
    for (auto& x : r) mpfr_add(sum.raw(), sum.raw(), x.raw(), MPFR_RNDN);
    double rho = 0;
    BigReal d(prec);
    for (size_t i = 0; i < n; ++i) {
        mpfr_div(r[i].raw(), r[i].raw(), sum.raw(), MPFR_RNDN);
        mpfr_sub(d.raw(), r[i].raw(), w[i].raw(), MPFR_RNDN);
        rho += std::fabs(d.to_double());
    }
    rule.rho = std::max(rho, BigReal::exp2_clamped(-double(prec) + 8));
    for (auto& wi : w) wi.set_err(wi.ulp() * 4);
    rule.weights = std::move(w);
    return rule;
}

} // namespace

const QuadratureRule& quadrature_rule(const TransferOperatorSpec& spec,
                                      const PrecisionContext& ctx) {
    spec.validate(ctx);
    std::scoped_lock lock(g_rule_mu);
    auto key = std::make_tuple(static_cast<int>(spec.kind), spec.degree,
                               spec.resolved_branch_cap(ctx), ctx.work());
    auto it = g_rule_cache.find(key);
    if (it == g_rule_cache.end())
        it = g_rule_cache.emplace(key, build_rule(spec, ctx)).first;
    return it->second;
}

BigReal QuadratureRule::dot(const std::vector<BigReal>& fvals) const {
    if (fvals.size() != weights.size())
        throw domain_error("QuadratureRule: nodal value count mismatch");
    BigReal acc(prec);
    double ferr = 0, fsup = 0;
    for (size_t i = 0; i < fvals.size(); ++i) {
        mpfr_fma(acc.raw(), weights[i].raw(), fvals[i].raw(), acc.raw(), MPFR_RNDN);
        ferr = std::max(ferr, fvals[i].err());
        fsup = std::max(fsup, fvals[i].mag());
    }
    acc.set_err(BigReal::add_err(err_scale() * fsup + 2.0 * ferr,
                                 2.0 * double(fvals.size()) * acc.ulp()));
    return acc;
}

ChebyshevFn apply_operator(const TransferOperatorSpec& spec, const ChebyshevFn& f,
                           const PrecisionContext& ctx) {
    spec.validate(ctx);
    const mpfr_prec_t prec = ctx.work();
    if (f.degree() != spec.degree)
        throw domain_error("apply_operator: function degree must match spec degree");
    const auto& M = detail::operator_matrices(spec.kind, spec.degree,
                                              spec.resolved_branch_cap(ctx), prec);
    std::vector<BigReal> img, c;
    detail::matvec(M.B, f.coeffs(), img, prec);
    detail::matvec(M.P, img, c, prec);
    ChebyshevFn out(std::move(c), prec);
    if (out.tail_mass() > spec.resolved_tol(ctx))
        throw resolution_error(
            "apply_operator: trailing coefficient mass " +
            std::to_string(out.tail_mass()) +
            " exceeds tol; increase the collocation degree");
    return out;
}

BigReal integrate(const TransferOperatorSpec& spec, const ChebyshevFn& f,
                  const PrecisionContext& ctx) {
    spec.validate(ctx);
    const mpfr_prec_t prec = ctx.work();
    const long A = spec.resolved_branch_cap(ctx);
    const auto& M = detail::operator_matrices(spec.kind, spec.degree, A, prec);
    const double tol = spec.resolved_tol(ctx);
    const long iters_cap = spec.resolved_max_iters(ctx);

    std::vector<BigReal> v = f.values_at_nodes();
    const double fsup = f.sup_estimate();
    const double alias = f.tail_mass();
    std::vector<BigReal> c, nv;
    double spread = 1e300;
    long it = 0;
    for (; it < iters_cap; ++it) {
        detail::matvec(M.P, v, c, prec);
        detail::matvec(M.B, c, nv, prec);
        std::swap(v, nv);
        BigReal mn = v[0], mx = v[0];
        for (const auto& x : v) {
            if (x.cmp(mn) < 0) mn = x;
            if (x.cmp(mx) > 0) mx = x;
        }
        spread = (mx - mn).to_double();
        if (spread < tol) {
            BigReal mid = (mx + mn).mul_2exp(-1);
            double trunc = BigReal::exp2_clamped(1.0 - double(A)) * fsup;
            mid.set_err(BigReal::add_err(spread + trunc + 2.0 * alias,
                                         8.0 * double(it + 2) * mid.ulp()));
            return mid;
        }
    }
    throw convergence_error("integrate: spread " + std::to_string(spread) +
                            " after " + std::to_string(it) +
                            " iterations (tol " + std::to_string(tol) + ")");
}

BigReal integrate_function(const TransferOperatorSpec& spec,
                           const std::function<BigReal(const BigReal&)>& f,
                           const PrecisionContext& ctx) {
    TransferOperatorSpec s = spec;
    s.validate(ctx);
    const double tol = s.resolved_tol(ctx);
    for (;;) {
        ChebyshevFn cf = ChebyshevFn::from_function(f, s.degree, ctx.work());
        if (cf.tail_mass() < 0.25 * tol || s.degree >= 4096)
            return integrate(s, cf, ctx);
        s.degree *= 2;
    }
}

} // namespace minkq
