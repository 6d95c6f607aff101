#include "minkq/farey.hpp"

#include "minkq/errors.hpp"

namespace minkq {

FareyGeneration farey_generation(unsigned m, unsigned depth_cap) {
    if (m > depth_cap || m > kStreamDepthCap)
        throw resource_error("farey_generation: depth " + std::to_string(m) +
                             " exceeds the configured cap " +
                             std::to_string(std::min(depth_cap, kStreamDepthCap)));
    FareyGeneration gen;
    gen.depth = m;
    gen.members.reserve(size_t(1) << m);
    FareyStream st(m);
    while (auto f = st.next()) gen.members.push_back(f->to_rational());
    return gen;
}

FareyStream::FareyStream(Frac64 lo, Frac64 hi, unsigned depth) {
    stack_.push_back({lo, hi, depth});
}

FareyStream::FareyStream(unsigned m) : FareyStream(Frac64{0, 1}, Frac64{1, 1}, m) {}

std::optional<Frac64> FareyStream::next() {
    while (!stack_.empty()) {
        Node n = stack_.back();
        stack_.pop_back();
        Frac64 med = mediant(n.lo, n.hi);
        if (n.level == 0) return med;
        stack_.push_back({med, n.hi, n.level - 1});
        stack_.push_back({n.lo, med, n.level - 1});
    }
    return std::nullopt;
}

std::vector<std::pair<Frac64, Frac64>> farey_subtrees(unsigned j) {
    std::vector<std::pair<Frac64, Frac64>> cur{{Frac64{0, 1}, Frac64{1, 1}}};
    for (unsigned level = 0; level < j; ++level) {
        std::vector<std::pair<Frac64, Frac64>> nxt;
        nxt.reserve(cur.size() * 2);
        for (const auto& [lo, hi] : cur) {
            Frac64 med = mediant(lo, hi);
            nxt.emplace_back(lo, med);
            nxt.emplace_back(med, hi);
        }
        cur = std::move(nxt);
    }
    return cur;
}

FareyPartitionStream::FareyPartitionStream(Frac64 lo, Frac64 hi, unsigned levels,
                                           bool emit_lo) {
    if (emit_lo) first_ = lo;
    stack_.push_back({lo, hi, levels, false});
}

FareyPartitionStream::FareyPartitionStream(unsigned m)
    : FareyPartitionStream(Frac64{0, 1}, Frac64{1, 1}, m + 1, true) {}

std::optional<Frac64> FareyPartitionStream::next() {
    if (first_) {
        Frac64 v = *first_;
        first_.reset();
        return v;
    }
    while (!stack_.empty()) {
        Node n = stack_.back();
        stack_.pop_back();
        if (n.levels == 0) continue;
        Frac64 med = mediant(n.lo, n.hi);
        if (!n.expanded) {
            stack_.push_back({n.lo, n.hi, n.levels, true});
            stack_.push_back({n.lo, med, n.levels - 1, false});
        } else {
            stack_.push_back({med, n.hi, n.levels - 1, false});
            return med;
        }
    }
    return std::nullopt;
}

} // namespace minkq
