#include "minkq/chebyshev.hpp"

#include <map>
#include <mutex>

#include "minkq/errors.hpp"

namespace minkq {

namespace {
std::mutex g_node_mu;
std::map<std::pair<long, mpfr_prec_t>, std::vector<BigReal>> g_node_cache;
} // namespace

const std::vector<BigReal>& chebyshev_nodes(long degree, mpfr_prec_t prec) {
    if (degree < 4) throw domain_error("chebyshev_nodes: degree must be >= 4");
    std::scoped_lock lock(g_node_mu);
    auto key = std::make_pair(degree, prec);
    auto it = g_node_cache.find(key);
    if (it != g_node_cache.end()) return it->second;
    std::vector<BigReal> nodes;
    nodes.reserve(degree + 1);
    BigReal pi = BigReal::pi(prec);
    for (long i = 0; i <= degree; ++i) {
        BigReal t = pi.mul_long(i).div_long(degree);
        BigReal x = (t.cos() + BigReal::from_long(1, prec)).mul_2exp(-1);
        x.set_err(2.0 * x.ulp());
        nodes.push_back(std::move(x));
    }
    return g_node_cache.emplace(key, std::move(nodes)).first->second;
}

ChebyshevFn ChebyshevFn::from_values(const std::vector<BigReal>& v, mpfr_prec_t prec) {
    const long D = static_cast<long>(v.size()) - 1;
    if (D < 4) throw domain_error("ChebyshevFn: need at least 5 nodal values");
    // c_j = (2/D) sum'' v_i cos(i j pi / D), first/last halved; c_0, c_D halved
    BigReal pi = BigReal::pi(prec);
    std::vector<BigReal> costab;
    costab.reserve(2 * D);
    for (long r = 0; r < 2 * D; ++r) {
        BigReal t = pi.mul_long(r).div_long(D).cos();
        costab.push_back(std::move(t));
    }
    double verr = 0;
    for (const auto& vi : v) verr += vi.err();
    std::vector<BigReal> c;
    c.reserve(D + 1);
    for (long j = 0; j <= D; ++j) {
        BigReal acc = v[0].mul_2exp(-1);
        if (j % 2 == 0)
            acc += v[D].mul_2exp(-1);
        else
            acc -= v[D].mul_2exp(-1);
        for (long i = 1; i < D; ++i) {
            long r = (i * j) % (2 * D); // cos has period 2D in the index product
            mpfr_fma(acc.raw(), costab[r].raw(), v[i].raw(), acc.raw(), MPFR_RNDN);
        }
        acc.set_err(BigReal::add_err(verr, 2.0 * double(D) * acc.ulp()));
        acc = acc.mul_2exp(1).div_long(D);
        if (j == 0 || j == D) acc = acc.mul_2exp(-1);
        c.push_back(std::move(acc));
    }
    return ChebyshevFn(std::move(c), prec);
}

ChebyshevFn ChebyshevFn::from_function(const std::function<BigReal(const BigReal&)>& f,
                                       long degree, mpfr_prec_t prec) {
    const auto& nodes = chebyshev_nodes(degree, prec);
    std::vector<BigReal> v;
    v.reserve(nodes.size());
    for (const auto& x : nodes) v.push_back(f(x));
    return from_values(v, prec);
}

BigReal ChebyshevFn::eval(const BigReal& x) const {
    const long D = degree();
    BigReal t = x.mul_2exp(1) - BigReal::from_long(1, prec_);
    BigReal t2 = t.mul_2exp(1);
    BigReal b1(prec_), b2(prec_);
    for (long j = D; j >= 1; --j) {
        BigReal b = coeffs_[j] + t2 * b1 - b2;
        b2 = std::move(b1);
        b1 = std::move(b);
    }
    return coeffs_[0] + t * b1 - b2;
}

std::vector<BigReal> ChebyshevFn::values_at_nodes() const {
    const auto& nodes = chebyshev_nodes(degree(), prec_);
    std::vector<BigReal> v;
    v.reserve(nodes.size());
    for (const auto& x : nodes) v.push_back(eval(x));
    return v;
}

double ChebyshevFn::tail_mass() const {
    const long D = degree();
    long k = std::max<long>(8, D / 8);
    double s = 0;
    for (long j = std::max<long>(0, D + 1 - k); j <= D; ++j)
        s += coeffs_[j].abs().to_double();
    return s;
}

double ChebyshevFn::sup_estimate() const {
    double s = 0;
    for (const auto& c : coeffs_) s += c.abs().to_double();
    return s;
}

} // namespace minkq
