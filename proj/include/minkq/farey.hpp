#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "minkq/rational.hpp"

namespace minkq {

// Small fraction used inside tree walks. Denominators of generation m are
// bounded by Fibonacci(m+2), so uint64 covers every reachable depth.
struct Frac64 {
    std::uint64_t p = 0;
    std::uint64_t q = 1;
    double to_double() const { return double(p) / double(q); }
    Rational to_rational() const {
        return Rational(mpz_class(static_cast<unsigned long>(p)),
                        mpz_class(static_cast<unsigned long>(q)));
    }
};

inline Frac64 mediant(const Frac64& a, const Frac64& b) {
    return Frac64{a.p + b.p, a.q + b.q};
}

inline constexpr unsigned kDefaultDepthCap = 30;
inline constexpr unsigned kStreamDepthCap = 46; // uint64-safe Fibonacci bound

// Generation m of the Farey tree rooted at 1/2: 2^m members, ascending.
struct FareyGeneration {
    unsigned depth = 0;
    std::vector<Rational> members;
};

FareyGeneration farey_generation(unsigned m, unsigned depth_cap = kDefaultDepthCap);

// In-order stream over the generation-at-depth `depth` members of the subtree
// spanned by the open interval (lo, hi); depth counts levels below that
// interval's mediant, so depth 0 yields just the mediant. Single consumer;
// independent streams over disjoint subtrees may run in parallel.
class FareyStream {
  public:
    FareyStream(Frac64 lo, Frac64 hi, unsigned depth);
    // Whole-tree stream for generation m (lo=0/1, hi=1/1).
    explicit FareyStream(unsigned m);

    std::optional<Frac64> next();

  private:
    struct Node {
        Frac64 lo, hi;
        unsigned level; // remaining levels to descend
    };
    std::vector<Node> stack_;
};

// The 2^j subtree intervals at depth j, in ascending order. Each interval
// (lo, hi) spans the members of generations > j lying between lo and hi.
std::vector<std::pair<Frac64, Frac64>> farey_subtrees(unsigned j);

// In-order stream over ALL tree members of depth <= m together with the left
// endpoint 0/1: the 2^(m+1) left endpoints of the depth-m Farey partition,
// ascending. Used by left-rule Stieltjes sums.
class FareyPartitionStream {
  public:
    FareyPartitionStream(Frac64 lo, Frac64 hi, unsigned levels, bool emit_lo);
    explicit FareyPartitionStream(unsigned m);
    std::optional<Frac64> next();

  private:
    struct Node {
        Frac64 lo, hi;
        unsigned levels;
        bool expanded;
    };
    std::optional<Frac64> first_;
    std::vector<Node> stack_;
};

} // namespace minkq
