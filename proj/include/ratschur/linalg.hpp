#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ratschur/matrix.hpp"

namespace ratschur {

/// Incremental row-space accumulator over exact rationals.
///
/// Rows are kept in row-echelon form keyed by leading column, with leading
/// coefficient normalized to 1. Insertion order is deterministic, so two runs
/// over the same data produce identical internal state.
class EchelonBasis {
public:
    /// Residual of v after eliminating every column that has a pivot row.
    FlatVec reduce(FlatVec v) const;

    /// Inserts v if independent of the current row space. Returns true when
    /// the rank grew.
    bool insert(const FlatVec& v);

    int rank() const { return static_cast<int>(rows_.size()); }

    bool contains(const FlatVec& v) const { return reduce(v).empty(); }

    /// Fully back-substituted rows (canonical RREF of the row space),
    /// sorted by pivot column. Two equal row spaces give identical output.
    std::vector<FlatVec> canonical_rows() const;

private:
    std::map<long long, FlatVec> rows_;
};

/// Exact rank of the flattened row space of a set of equally-shaped matrices.
/// Fraction-free elimination on primitive integer rows, pivoting on the
/// shortest remaining row and its smallest-magnitude entry.
int rank(const std::vector<SparseMat>& mats);

/// Rank of a single matrix as a linear map (row rank).
int matrix_rank(const SparseMat& m);

/// A linearly independent set of matrices spanning a subspace of a full
/// matrix algebra, together with its echelon certificate.
struct AlgebraSpan {
    long long ambient_dim = 0;  // k*k for k x k matrices
    std::vector<SparseMat> basis;
    EchelonBasis echelon;
    bool closed = false;  // set only after product closure has been reached

    int dim() const { return static_cast<int>(basis.size()); }
};

/// Smallest subalgebra (unital if requested) containing the generators.
/// Worklist is breadth-first by word length in the generators; termination is
/// guaranteed because the ambient dimension bounds the rank. With an empty
/// generator set the matrix size cannot be inferred and must be supplied as
/// ambient_size (k for k x k matrices).
AlgebraSpan span_closure(const std::vector<SparseMat>& generators, bool with_identity,
                         int ambient_size = -1);

/// Basis of { X : Xg = gX for all generators g }, computed by intersecting
/// per-generator null spaces so peak work tracks the current solution size.
AlgebraSpan commutant(const std::vector<SparseMat>& generators);

/// Tracks inserted vectors with coordinates so spanned targets can be
/// expressed in terms of the originally inserted vectors.
class AugmentedSolver {
public:
    explicit AugmentedSolver(long long main_dim) : main_dim_(main_dim) {}

    void add(const FlatVec& v);

    /// Coordinates of target in the inserted vectors, or nullopt when the
    /// target is outside their span. Requires the inserted set to be
    /// linearly independent for the coordinates to be unique.
    std::optional<std::vector<Rat>> solve(const FlatVec& target) const;

    /// Basis of linear relations among the inserted vectors.
    std::vector<std::vector<Rat>> relations() const;

private:
    long long main_dim_;
    int count_ = 0;
    EchelonBasis ech_;
};

}  // namespace ratschur
