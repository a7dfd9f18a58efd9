#include "ratschur/schur.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace ratschur {

int ordinary_degree(int n, int r, int s) {
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    if (r < 0 || s < 0) throw std::invalid_argument("r and s must be nonnegative");
    return r + (n - 1) * s;
}

std::string codeterminant_str(const Codeterminant& c) {
    return weight_str(c.lambda) + " | " + tableau_str(c.S) + " | " + tableau_str(c.T) + "\n" +
           c.mat.triplets();
}

std::vector<Codeterminant> codeterminants_for(const Weight& lambda, int n, int d) {
    if (static_cast<int>(lambda.size()) > n)
        throw std::invalid_argument("shape has more than n parts");
    int total = std::accumulate(lambda.begin(), lambda.end(), 0);
    if (total != d) throw std::invalid_argument("shape does not have degree d");

    const std::vector<int> ell = canonical_index(lambda);
    const auto tableaux = enum_ssyt(lambda, n);
    std::vector<SparseMat> left, right;
    left.reserve(tableaux.size());
    right.reserve(tableaux.size());
    for (const auto& t : tableaux) {
        left.push_back(xi_matrix(tableau_to_index(t), ell, n));
        right.push_back(xi_matrix(ell, tableau_to_index(t), n));
    }

    std::vector<Codeterminant> out;
    out.reserve(tableaux.size() * tableaux.size());
    for (size_t i = 0; i < tableaux.size(); ++i)
        for (size_t j = 0; j < tableaux.size(); ++j)
            out.push_back({lambda, tableaux[i], tableaux[j], left[i] * right[j]});
    return out;
}

void for_each_codeterminant(int n, int d,
                            const std::function<bool(const Weight&)>& shape_filter,
                            const std::function<void(const Codeterminant&)>& fn) {
    for (const auto& lambda : enum_dominant(n, d, 0)) {
        if (shape_filter && !shape_filter(lambda)) continue;
        for (const auto& c : codeterminants_for(lambda, n, d)) fn(c);
    }
}

std::vector<Codeterminant> build_ordinary_schur(int n, int d) {
    std::vector<Codeterminant> out;
    for_each_codeterminant(n, d, nullptr, [&](const Codeterminant& c) { out.push_back(c); });
    return out;
}

long long schur_dimension(int n, int d) {
    EchelonBasis ech;
    for_each_codeterminant(n, d, nullptr,
                           [&](const Codeterminant& c) { ech.insert(c.mat.flatten()); });
    return ech.rank();
}

static bool exceeds_cutoff(const Weight& lambda, int cutoff) {
    return !lambda.empty() && lambda.front() > cutoff;
}

static void check_cutoff(int n, int d, int cutoff) {
    // need r,s >= 0 with r+(n-1)s = d and r+s = cutoff
    bool ok = false;
    for (int s = 0; s <= cutoff; ++s) {
        int r = cutoff - s;
        if (r + (n - 1) * s == d) {
            ok = true;
            break;
        }
    }
    if (!ok) throw std::invalid_argument("cutoff incompatible with (n,d)");
}

int cell_ideal_dim(int n, int d, int cutoff) {
    check_cutoff(n, d, cutoff);
    EchelonBasis ech;
    for_each_codeterminant(
        n, d, [&](const Weight& lam) { return exceeds_cutoff(lam, cutoff); },
        [&](const Codeterminant& c) { ech.insert(c.mat.flatten()); });
    return ech.rank();
}

std::vector<WeylEntry> rational_weyl_data(int n, int r, int s) {
    std::vector<WeylEntry> out;
    for (const auto& lam : enum_dominant(n, r, s)) out.push_back({lam, weyl_dim(lam, n)});
    return out;
}

RationalSchurAlgebra build_rational_quotient(int n, int r, int s) {
    const int d = ordinary_degree(n, r, s);
    const int cutoff = r + s;
    EchelonBasis ech;
    for_each_codeterminant(
        n, d, [&](const Weight& lam) { return exceeds_cutoff(lam, cutoff); },
        [&](const Codeterminant& c) { ech.insert(c.mat.flatten()); });
    const long long kernel = ech.rank();
    for_each_codeterminant(
        n, d, [&](const Weight& lam) { return !exceeds_cutoff(lam, cutoff); },
        [&](const Codeterminant& c) { ech.insert(c.mat.flatten()); });

    RationalSchurAlgebra a;
    a.n = n;
    a.r = r;
    a.s = s;
    a.realization = "quotient";
    a.kernel_dim = kernel;
    a.dim = ech.rank() - kernel;
    a.weyl_data = rational_weyl_data(n, r, s);
    return a;
}

RationalSchurAlgebra build_rational_envelope(int n, int r, int s) {
    auto gens = mixed_generator_matrices(n, r, s);
    AlgebraSpan span = span_closure(gens.all(), /*with_identity=*/true);

    RationalSchurAlgebra a;
    a.n = n;
    a.r = r;
    a.s = s;
    a.realization = "envelope";
    a.dim = span.dim();
    a.weyl_data = rational_weyl_data(n, r, s);
    return a;
}

static Weight neg_reverse(const Weight& lam) {
    Weight out(lam.rbegin(), lam.rend());
    for (int& v : out) v = -v;
    return out;
}

bool opp_dimension_check(int n, int r, int s) {
    auto lhs = rational_weyl_data(n, r, s);
    auto rhs = rational_weyl_data(n, s, r);
    if (lhs.size() != rhs.size()) return false;

    Int dim_lhs = 0, dim_rhs = 0;
    std::map<Weight, Int> rhs_table;
    for (const auto& e : rhs) {
        dim_rhs += e.dim * e.dim;
        rhs_table[e.lambda] = e.dim;
    }
    for (const auto& e : lhs) {
        dim_lhs += e.dim * e.dim;
        auto it = rhs_table.find(neg_reverse(e.lambda));
        if (it == rhs_table.end() || it->second != e.dim) return false;
    }
    return dim_lhs == dim_rhs;
}

}  // namespace ratschur
