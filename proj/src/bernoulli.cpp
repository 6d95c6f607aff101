#include "minkq/bernoulli.hpp"

#include <deque>
#include <mutex>

namespace minkq {

namespace {

// deque keeps references stable while the cache grows under the lock
struct BernoulliCache {
    std::mutex mu;
    std::deque<mpq_class> b;
};

BernoulliCache& bcache() {
    static BernoulliCache c;
    return c;
}

void extend_bernoulli(std::deque<mpq_class>& b, unsigned k) {
    if (b.empty()) {
        b.emplace_back(1);            // B_0
        b.emplace_back(mpq_class(-1, 2)); // B_1
    }
    while (b.size() <= k) {
        unsigned n = static_cast<unsigned>(b.size());
        if (n % 2 == 1) {
            b.emplace_back(0);
            continue;
        }
        // sum_{j=0}^{n} C(n+1, j) B_j = 0  =>  B_n = -1/C(n+1,n) * sum_{j<n} ...
        mpq_class s(0);
        mpz_class c;
        for (unsigned j = 0; j < n; ++j) {
            if (j >= 3 && j % 2 == 1) continue; // odd Bernoulli vanish
            mpz_bin_uiui(c.get_mpz_t(), n + 1, j);
            s += mpq_class(c) * b[j];
        }
        mpq_class bn = -s / mpq_class(n + 1);
        bn.canonicalize();
        b.push_back(bn);
    }
}

} // namespace

const mpq_class& bernoulli(unsigned k) {
    if (k > kBernoulliCap)
        throw range_error("bernoulli: index " + std::to_string(k) +
                          " exceeds cache cap " + std::to_string(kBernoulliCap));
    auto& c = bcache();
    std::scoped_lock lock(c.mu);
    if (k >= c.b.size()) extend_bernoulli(c.b, k);
    return c.b[k];
}

const mpz_class& factorial(unsigned k) {
    static std::mutex mu;
    static std::deque<mpz_class> f;
    std::scoped_lock lock(mu);
    if (f.empty()) f.emplace_back(1);
    while (f.size() <= k) f.push_back(f.back() * static_cast<unsigned long>(f.size()));
    return f[k];
}

} // namespace minkq
