#include <doctest.h>

#include <algorithm>
#include <set>

#include "ratschur/weights.hpp"

using namespace ratschur;

namespace {

// Independent membership oracle: brute-force over the bounding box, checking
// the partial-sum conditions over every nonempty proper subset of indices.
bool box_member(const Weight& lam, int n, int r, int s) {
    int total = 0;
    for (int v : lam) total += v;
    if (total != r - s) return false;
    for (int mask = 1; mask + 1 < (1 << n); ++mask) {
        int p = 0;
        for (int i = 0; i < n; ++i)
            if (mask & (1 << i)) p += lam[static_cast<size_t>(i)];
        if (p < -s || p > r) return false;
    }
    return true;
}

std::vector<Weight> box_enum(int n, int r, int s) {
    std::vector<Weight> out;
    Weight cur(static_cast<size_t>(n));
    auto rec = [&](auto&& self, int i) -> void {
        if (i == n) {
            if (box_member(cur, n, r, s)) out.push_back(cur);
            return;
        }
        for (int v = -s; v <= r; ++v) {
            cur[static_cast<size_t>(i)] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    std::sort(out.rbegin(), out.rend());
    return out;
}

}  // namespace

TEST_CASE("weight enumeration matches the partial-sum box oracle") {
    for (int n = 2; n <= 4; ++n)
        for (int r = 0; r <= 6; ++r)
            for (int s = 0; s + r <= 6; ++s) {
                CAPTURE(n);
                CAPTURE(r);
                CAPTURE(s);
                CHECK(enum_weights(n, r, s) == box_enum(n, r, s));
            }
}

TEST_CASE("membership test agrees with the subset brute force") {
    const int n = 4, r = 2, s = 3;
    Weight cur(4);
    for (int a = -4; a <= 3; ++a)
        for (int b = -4; b <= 3; ++b)
            for (int c = -4; c <= 3; ++c)
                for (int d = -4; d <= 3; ++d) {
                    cur = {a, b, c, d};
                    CAPTURE(cur);
                    CHECK(member_by_partial_sums(cur, n, r, s) == box_member(cur, n, r, s));
                }
}

TEST_CASE("dominant weights of (3;1,1) and (3;2,1)") {
    CHECK(enum_dominant(3, 0, 0) == std::vector<Weight>{{0, 0, 0}});
    CHECK(enum_dominant(3, 1, 1) == std::vector<Weight>{{1, 0, -1}, {0, 0, 0}});
    CHECK(enum_dominant(3, 2, 1) ==
          std::vector<Weight>{{2, 0, -1}, {1, 1, -1}, {1, 0, 0}});
    CHECK(enum_dominant(3, 1, 2) ==
          std::vector<Weight>{{1, 0, -2}, {1, -1, -1}, {0, 0, -1}});
}

TEST_CASE("dominance order and dominant_below") {
    CHECK(dominance_leq({1, 1, 1}, {3, 0, 0}));
    CHECK(dominance_leq({2, 1, 0}, {3, 0, 0}));
    CHECK_FALSE(dominance_leq({3, 0, 0}, {2, 1, 0}));
    CHECK_FALSE(dominance_leq({2, 0, 0}, {3, 0, 0}));  // different totals
    auto below = dominant_below({3, 0, 0});
    CHECK(below == std::vector<Weight>{{3, 0, 0}, {2, 1, 0}, {1, 1, 1}});
    // downward closure with negative entries
    for (const auto& lam : dominant_below({2, 0, -1})) CHECK(dominance_leq(lam, {2, 0, -1}));
}

TEST_CASE("Lambda+(n;r,s) is saturated") {
    for (int n = 2; n <= 4; ++n)
        for (int r = 0; r <= 3; ++r)
            for (int s = 0; s + r <= 4; ++s) {
                CAPTURE(n);
                CAPTURE(r);
                CAPTURE(s);
                CHECK(is_saturated(enum_dominant(n, r, s), n, r, s));
            }
}

TEST_CASE("bipartition bijection round-trip") {
    for (int n = 2; n <= 4; ++n)
        for (int r = 0; r <= 3; ++r)
            for (int s = 0; s + r <= 4; ++s)
                for (const auto& lam : enum_dominant(n, r, s)) {
                    auto p = to_bipartition(lam);
                    CHECK(from_bipartition(p, n) == lam);
                    int plus_total = 0, minus_total = 0;
                    for (int v : p.plus) plus_total += v;
                    for (int v : p.minus) minus_total += v;
                    CHECK(plus_total - minus_total == r - s);
                }
    CHECK(bipartition_str(to_bipartition({2, 1, 0, -3})) == "plus=2,1|minus=3");
    auto p = parse_bipartition("plus=2,1|minus=3");
    CHECK(p.plus == std::vector<int>{2, 1});
    CHECK(p.minus == std::vector<int>{3});
    CHECK_THROWS(from_bipartition(parse_bipartition("plus=1,2|minus="), 3));
}

TEST_CASE("weight sets grow with the bidegree") {
    // E^{r,s} embeds in E^{r+1,s+1}; the weight sets must be nested
    for (int n = 2; n <= 3; ++n)
        for (int r = 0; r <= 2; ++r)
            for (int s = 0; s <= 2; ++s) {
                auto small = enum_weights(n, r, s);
                auto big = enum_weights(n, r + 1, s + 1);
                std::set<Weight> bigset(big.begin(), big.end());
                for (const auto& w : small) CHECK(bigset.count(w) == 1);
            }
}

TEST_CASE("weight sets are permutation stable") {
    for (const auto& w : enum_weights(3, 2, 2)) {
        Weight p = w;
        std::sort(p.begin(), p.end());
        do {
            CHECK(member_by_partial_sums(p, 3, 2, 2));
        } while (std::next_permutation(p.begin(), p.end()));
    }
}

TEST_CASE("shift by s*omega is a dominance isomorphism onto partitions") {
    const int n = 3, r = 2, s = 1;
    auto rational = enum_dominant(n, r, s);
    for (const auto& lam : rational) {
        Weight mu = shift(lam, s);
        CHECK(is_dominant(mu));
        for (int v : mu) {
            CHECK(v >= 0);
            CHECK(v <= r + s);
        }
    }
    for (const auto& lam : rational)
        for (const auto& nu : rational)
            CHECK(dominance_leq(lam, nu) == dominance_leq(shift(lam, s), shift(nu, s)));
}

TEST_CASE("weight serialization") {
    CHECK(weight_str({2, 0, -1}) == "2,0,-1");
    CHECK(parse_weight("2,0,-1") == Weight{2, 0, -1});
    CHECK_THROWS(parse_weight(""));
}
