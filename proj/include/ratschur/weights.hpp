#pragma once

#include <string>
#include <vector>

#include "ratschur/rational.hpp"

namespace ratschur {

/// An integer weight (lambda_1, ..., lambda_n) for the diagonal torus of GL_n.
using Weight = std::vector<int>;

struct BipartitionPair {
    std::vector<int> plus;   // weakly decreasing positive parts
    std::vector<int> minus;  // weakly decreasing positive parts

    bool operator==(const BipartitionPair&) const = default;
};

bool is_dominant(const Weight& w);

/// All weights of mixed tensor space in bidegree (r, s): positive entries sum
/// to r-t and negative entries to t-s for some 0 <= t <= min(r, s).
/// Sorted descending lexicographically.
std::vector<Weight> enum_weights(int n, int r, int s);

/// Dominant members, descending lexicographic (a dominance-compatible total
/// order; the choice is a repo convention for stable output).
std::vector<Weight> enum_dominant(int n, int r, int s);

/// True iff the entries sum to r-s and every proper partial sum (over any
/// nonempty proper subset of indices) lies in [-s, r].
bool member_by_partial_sums(const Weight& lam, int n, int r, int s);

/// mu >= lam in dominance: equal totals and every prefix sum of mu dominates.
bool dominance_leq(const Weight& lam, const Weight& mu);

/// All dominant lambda with lambda <= mu in dominance (same total sum).
std::vector<Weight> dominant_below(const Weight& mu);

/// True iff pi is closed downward under dominance among dominant weights.
bool is_saturated(const std::vector<Weight>& pi, int n, int r, int s);

BipartitionPair to_bipartition(const Weight& lam);
Weight from_bipartition(const BipartitionPair& p, int n);

Weight shift(const Weight& lam, int s);

/// Integer partitions of m with at most max_parts parts, descending lex.
std::vector<std::vector<int>> partitions_of(int m, int max_parts);

std::string weight_str(const Weight& w);
Weight parse_weight(const std::string& s);
std::string bipartition_str(const BipartitionPair& p);
BipartitionPair parse_bipartition(const std::string& s);

}  // namespace ratschur
