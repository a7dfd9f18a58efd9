#include "ratschur/tensor.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ratschur {

MixedSpace::MixedSpace(int n_, int r_, int s_) : n(n_), r(r_), s(s_) {
    if (n < 2 || r < 0 || s < 0) throw std::invalid_argument("bad mixed space parameters");
}

long long MixedSpace::dim() const {
    long long d = 1;
    for (int i = 0; i < slots(); ++i) d *= n;
    return d;
}

long long MixedSpace::encode(const std::vector<int>& tuple) const {
    if (static_cast<int>(tuple.size()) != slots())
        throw std::invalid_argument("tuple length mismatch");
    long long idx = 0;
    for (int v : tuple) {
        if (v < 1 || v > n) throw std::out_of_range("tuple entry out of range");
        idx = idx * n + (v - 1);
    }
    return idx;
}

std::vector<int> MixedSpace::decode(long long idx) const {
    if (idx < 0 || idx >= dim()) throw std::out_of_range("basis index out of range");
    std::vector<int> tuple(static_cast<size_t>(slots()));
    for (int t = slots() - 1; t >= 0; --t) {
        tuple[static_cast<size_t>(t)] = static_cast<int>(idx % n) + 1;
        idx /= n;
    }
    return tuple;
}

Weight MixedSpace::weight_of(long long idx) const {
    std::vector<int> tuple = decode(idx);
    Weight w(static_cast<size_t>(n), 0);
    for (int t = 0; t < slots(); ++t)
        w[static_cast<size_t>(tuple[static_cast<size_t>(t)]) - 1] += t < r ? 1 : -1;
    return w;
}

SparseMat gl_generator_matrix(const MixedSpace& space, int a, int b) {
    if (a < 1 || a > space.n || b < 1 || b > space.n)
        throw std::out_of_range("generator index out of range");
    const long long dim = space.dim();
    SparseMat m(static_cast<int>(dim), static_cast<int>(dim));
    for (long long idx = 0; idx < dim; ++idx) {
        std::vector<int> tuple = space.decode(idx);
        for (int t = 0; t < space.slots(); ++t) {
            int& slot = tuple[static_cast<size_t>(t)];
            const int old = slot;
            if (t < space.r) {
                if (old != b) continue;
                slot = a;
                m.add(static_cast<int>(space.encode(tuple)), static_cast<int>(idx), Rat(1));
            } else {
                if (old != a) continue;
                slot = b;
                m.add(static_cast<int>(space.encode(tuple)), static_cast<int>(idx), Rat(-1));
            }
            slot = old;
        }
    }
    return m;
}

std::vector<SparseMat> GlGenerators::all() const {
    std::vector<SparseMat> out;
    out.reserve(e.size() + f.size() + H.size());
    out.insert(out.end(), e.begin(), e.end());
    out.insert(out.end(), f.begin(), f.end());
    out.insert(out.end(), H.begin(), H.end());
    return out;
}

GlGenerators mixed_generator_matrices(int n, int r, int s) {
    MixedSpace space(n, r, s);
    GlGenerators g{space, {}, {}, {}};
    for (int i = 1; i < n; ++i) {
        g.e.push_back(gl_generator_matrix(space, i, i + 1));
        g.f.push_back(gl_generator_matrix(space, i + 1, i));
    }
    for (int i = 1; i <= n; ++i) g.H.push_back(gl_generator_matrix(space, i, i));
    return g;
}

SparseMat xi_matrix(const std::vector<int>& I, const std::vector<int>& J, int n) {
    if (I.size() != J.size()) throw std::invalid_argument("xi: multi-index length mismatch");
    const int d = static_cast<int>(I.size());
    MixedSpace space(n, d, 0);
    for (int v : I)
        if (v < 1 || v > n) throw std::out_of_range("xi: index out of range");
    for (int v : J)
        if (v < 1 || v > n) throw std::out_of_range("xi: index out of range");

    std::set<std::pair<std::vector<int>, std::vector<int>>> orbit;
    std::vector<int> perm(static_cast<size_t>(d));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<int> M(static_cast<size_t>(d)), L(static_cast<size_t>(d));
        for (int t = 0; t < d; ++t) {
            M[static_cast<size_t>(t)] = I[static_cast<size_t>(perm[static_cast<size_t>(t)])];
            L[static_cast<size_t>(t)] = J[static_cast<size_t>(perm[static_cast<size_t>(t)])];
        }
        orbit.emplace(std::move(M), std::move(L));
    } while (std::next_permutation(perm.begin(), perm.end()));

    SparseMat m(static_cast<int>(space.dim()), static_cast<int>(space.dim()));
    for (const auto& [M, L] : orbit)
        m.add(static_cast<int>(space.encode(M)), static_cast<int>(space.encode(L)), Rat(1));
    return m;
}

}  // namespace ratschur
