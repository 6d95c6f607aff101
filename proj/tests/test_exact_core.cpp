#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "minkq/continued_fraction.hpp"
#include "minkq/farey.hpp"
#include "minkq/question_mark.hpp"

using namespace minkq;

namespace {
Rational R(long p, long q) { return Rational(p, q); }

Dyadic dy(long num, unsigned long exp) { return Dyadic(mpz_class(num), exp); }
} // namespace

TEST_CASE("cf_expand on the worked examples") {
    auto cf = cf_expand(R(1, 2));
    CHECK(cf.a0 == 0);
    REQUIRE(cf.quotients.size() == 1);
    CHECK(cf.quotients[0] == 2);

    cf = cf_expand(R(2, 5));
    REQUIRE(cf.quotients.size() == 2);
    CHECK(cf.quotients[0] == 2);
    CHECK(cf.quotients[1] == 2);

    cf = cf_expand(R(0, 1));
    CHECK(cf.a0 == 0);
    CHECK(cf.quotients.empty());

    cf = cf_expand(R(1, 1));
    CHECK(cf.a0 == 1);
    CHECK(cf.quotients.empty());

    CHECK_THROWS_AS(cf_expand(R(3, 2)), domain_error);
    CHECK_THROWS_AS(cf_expand(R(-1, 2)), domain_error);
}

TEST_CASE("cf round trip and the dual representation") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 500; ++it) {
        long q = 2 + static_cast<long>(rng() % 99999);
        long p = static_cast<long>(rng() % static_cast<unsigned long>(q + 1));
        Rational x = R(p, q);
        auto cf = cf_expand(x);
        CHECK(cf.is_canonical());
        CHECK(cf.value() == x);
        auto alt = cf.alternate();
        CHECK(alt.value() == x);
        if (!x.is_zero()) {
            CHECK(!(alt.quotients == cf.quotients && alt.a0 == cf.a0));
            // both representations give the same ? value
            CHECK(question_mark(cf.value()) == question_mark(alt.value()));
        }
    }
}

TEST_CASE("question mark at rationals") {
    CHECK(question_mark(R(0, 1)) == dy(0, 0));
    CHECK(question_mark(R(1, 1)) == dy(1, 0));
    CHECK(question_mark(R(1, 2)) == dy(1, 1));
    CHECK(question_mark(R(1, 3)) == dy(1, 2));
    CHECK(question_mark(R(2, 5)) == dy(3, 3));
    // ?(1/n) = 2^(1-n)
    CHECK(question_mark(R(1, 4)) == dy(1, 3));
    CHECK(question_mark(R(1, 6)) == dy(1, 5));
}

TEST_CASE("symmetry and contraction functional equations hold exactly") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 400; ++it) {
        long q = 2 + static_cast<long>(rng() % 999999);
        long p = static_cast<long>(rng() % static_cast<unsigned long>(q + 1));
        Rational x = R(p, q);
        Dyadic qx = question_mark(x);
        Dyadic q1mx = question_mark(R(q - p, q));
        CHECK(dyadic_add(qx, q1mx) == dyadic_one());
        Rational y = x / (x + R(1, 1));
        CHECK(question_mark(y) == dyadic_mul_2exp(qx, -1));
    }
}

TEST_CASE("extended F") {
    CHECK(extended_F(R(1, 1)) == dy(1, 1));
    CHECK(extended_F(R(2, 1)) == dy(3, 2));   // 2F(2) = F(1) + 1
    CHECK(extended_F(R(1, 2)) == dy(1, 2));   // F(x) + F(1/x) = 1
    CHECK(extended_F(R(0, 1)) == dy(0, 0));
    CHECK_THROWS_AS(extended_F(R(-1, 2)), domain_error);

    std::mt19937_64 rng(13);
    for (int it = 0; it < 200; ++it) {
        long q = 1 + static_cast<long>(rng() % 9999);
        long p = 1 + static_cast<long>(rng() % 9999);
        Dyadic a = extended_F(R(p, q));
        Dyadic b = extended_F(R(q, p));
        CHECK(dyadic_add(a, b) == dyadic_one());
    }
}

TEST_CASE("phi: periodicity and reflection") {
    CHECK(phi(R(0, 1)) == dy(1, 0));
    CHECK(phi(R(1, 2)) == dy(3, 2));  // Delta(1/2) = 1 - ?(1/3) = 3/4
    CHECK(phi(R(3, 2)) == dy(3, 2));  // periodicity
    CHECK(phi(R(-1, 2)) == dy(3, 2)); // PHI(-1/2) = Delta(1/2)

    std::mt19937_64 rng(17);
    for (int it = 0; it < 200; ++it) {
        long q = 2 + static_cast<long>(rng() % 999);
        long p = static_cast<long>(rng() % 5000) - 2500;
        Rational x = R(p, q);
        Dyadic s = dyadic_add(phi(x), phi(-x));
        if (x.den() == 1)
            CHECK(s == dy(2, 0));
        else
            CHECK(s == dy(3, 1));
        CHECK(phi(x + R(1, 1)) == phi(x));
    }
    // delta halving
    CHECK(delta(R(5, 2)) == dyadic_mul_2exp(delta(R(1, 2)), -2));
    CHECK(delta(R(-1, 2)) == dyadic_mul_2exp(delta(R(1, 2)), 1));
}

TEST_CASE("farey generations") {
    auto g0 = farey_generation(0);
    REQUIRE(g0.members.size() == 1);
    CHECK(g0.members[0] == R(1, 2));

    auto g1 = farey_generation(1);
    REQUIRE(g1.members.size() == 2);
    CHECK(g1.members[0] == R(1, 3));
    CHECK(g1.members[1] == R(2, 3));

    auto g2 = farey_generation(2);
    REQUIRE(g2.members.size() == 4);
    CHECK(g2.members[0] == R(1, 4));
    CHECK(g2.members[1] == R(2, 5));
    CHECK(g2.members[2] == R(3, 5));
    CHECK(g2.members[3] == R(3, 4));

    CHECK_THROWS_AS(farey_generation(31), resource_error);
    CHECK_THROWS_AS(farey_generation(8, 6), resource_error);
}

TEST_CASE("? maps generation m onto the odd multiples of 2^-(m+1)") {
    for (unsigned m = 0; m <= 12; ++m) {
        auto gen = farey_generation(m);
        REQUIRE(gen.members.size() == (size_t(1) << m));
        Dyadic prev;
        bool first = true;
        for (size_t j = 0; j < gen.members.size(); ++j) {
            Dyadic v = question_mark(gen.members[j]);
            CHECK(v == dy(2 * static_cast<long>(j) + 1, m + 1));
            if (!first) CHECK(gen.members[j - 1] < gen.members[j]); // sorted
            prev = v;
            first = false;
        }
    }
}

TEST_CASE("streaming iterator matches materialized generations and subtrees") {
    unsigned m = 10;
    auto gen = farey_generation(m);
    FareyStream st(m);
    size_t i = 0;
    while (auto f = st.next()) {
        REQUIRE(i < gen.members.size());
        CHECK(f->to_rational() == gen.members[i]);
        ++i;
    }
    CHECK(i == gen.members.size());

    // 2^j disjoint subtrees reproduce the full generation in order
    unsigned j = 3;
    auto subs = farey_subtrees(j);
    REQUIRE(subs.size() == (size_t(1) << j));
    i = 0;
    for (auto& [lo, hi] : subs) {
        FareyStream sub(lo, hi, m - j);
        while (auto f = sub.next()) {
            CHECK(f->to_rational() == gen.members[i]);
            ++i;
        }
    }
    CHECK(i == gen.members.size());
}

TEST_CASE("partition stream yields the 2^(m+1) left endpoints ascending") {
    unsigned m = 6;
    FareyPartitionStream ps(m);
    std::vector<Rational> pts;
    while (auto f = ps.next()) pts.push_back(f->to_rational());
    REQUIRE(pts.size() == (size_t(1) << (m + 1)));
    CHECK(pts[0] == R(0, 1));
    for (size_t i = 1; i < pts.size(); ++i) {
        CHECK(pts[i - 1] < pts[i]);
        // consecutive ? gaps are exactly 2^-(m+1)
        Dyadic gap = dyadic_sub(question_mark(pts[i]), question_mark(pts[i - 1]));
        CHECK(gap == dy(1, m + 1));
    }
}

TEST_CASE("? is strictly increasing on sorted rationals") {
    std::mt19937_64 rng(23);
    std::vector<Rational> xs;
    for (int it = 0; it < 200; ++it) {
        long q = 2 + static_cast<long>(rng() % 99999);
        long p = 1 + static_cast<long>(rng() % static_cast<unsigned long>(q - 1));
        xs.push_back(R(p, q));
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    for (size_t i = 1; i < xs.size(); ++i) {
        Dyadic gap = dyadic_sub(question_mark(xs[i]), question_mark(xs[i - 1]));
        CHECK(gap.num > 0);
    }
}

TEST_CASE("Lipschitz order alpha bounds generation gaps with one fitted C") {
    // alpha = log 2 / (2 log golden); fit C over generations up to 12, then
    // check it holds through generation 16. A wrong exponent drifts the ratio
    // across depths and breaks this.
    const double alpha = 0.7202100452062301;
    auto max_ratio = [&](unsigned m) {
        double best = 0;
        FareyStream st(m);
        auto prev = st.next();
        double gap_q = std::pow(0.5, double(m)); // ? gap between consecutive members
        while (auto cur = st.next()) {
            double dx = cur->to_double() - prev->to_double();
            best = std::max(best, gap_q / std::pow(dx, alpha));
            prev = cur;
        }
        return best;
    };
    double fitted = 0;
    for (unsigned m = 6; m <= 12; ++m) fitted = std::max(fitted, max_ratio(m));
    double C = fitted * 1.0000001;
    for (unsigned m = 13; m <= 16; ++m) CHECK(max_ratio(m) <= C);
}

TEST_CASE("rounded evaluator agrees with the exact dyadic") {
    std::mt19937_64 rng(29);
    for (int it = 0; it < 100; ++it) {
        unsigned long q = 2 + rng() % 999983;
        unsigned long p = rng() % (q + 1);
        Rational x(static_cast<long>(p), static_cast<long>(q));
        BigReal a = question_mark_real(x, 192);
        BigReal b(192);
        question_mark_u64(p, q, b.raw());
        Dyadic ex = question_mark_ext(x);
        BigReal c = ex.to_bigreal(192);
        CHECK(mpfr_cmp(a.raw(), b.raw()) == 0);
        BigReal diff = a - c;
        CHECK(diff.abs().to_double() <= std::max(a.ulp(), c.ulp()) * 4);
    }
}
