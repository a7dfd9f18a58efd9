#pragma once

#include <vector>

#include "ratschur/matrix.hpp"
#include "ratschur/weights.hpp"

namespace ratschur {

/// Basis bookkeeping for mixed tensor space E^{r,s} (dimension n^(r+s)).
/// A basis tensor is a tuple of r covariant slots followed by s contravariant
/// slots, each holding a value in 1..n. Tuples map to ordinals big-endian.
struct MixedSpace {
    int n, r, s;

    MixedSpace(int n_, int r_, int s_);

    int slots() const { return r + s; }
    long long dim() const;

    long long encode(const std::vector<int>& tuple) const;
    std::vector<int> decode(long long idx) const;

    /// Weight of a basis tensor: +1 per covariant occurrence, -1 per
    /// contravariant occurrence of each value.
    Weight weight_of(long long idx) const;
};

/// Matrix of the gl_n generator X_{ab} (1-based) acting on E^{r,s} by the
/// Leibniz rule: X_{ab} v_k = delta_{bk} v_a on covariant slots and
/// X_{ab} v'_k = -delta_{ak} v'_b on contravariant slots.
SparseMat gl_generator_matrix(const MixedSpace& space, int a, int b);

struct GlGenerators {
    MixedSpace space;
    std::vector<SparseMat> e;  // e_i = X_{i,i+1}, i = 1..n-1
    std::vector<SparseMat> f;  // f_i = X_{i+1,i}
    std::vector<SparseMat> H;  // H_i = X_{ii},    i = 1..n

    std::vector<SparseMat> all() const;
};

GlGenerators mixed_generator_matrices(int n, int r, int s);

/// Green's basis element xi_{I,J} of the Schur algebra S(n,d) realized on
/// E^{tensor d}: xi_{I,J} v_L = sum of v_M over (M,L) in the simultaneous
/// place-permutation orbit of (I,J). Depends only on the orbit of (I,J).
SparseMat xi_matrix(const std::vector<int>& I, const std::vector<int>& J, int n);

}  // namespace ratschur
