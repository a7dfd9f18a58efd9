#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ratschur/rational.hpp"

namespace ratschur {

/// One matrix row: (column, value) pairs sorted by column, no stored zeros.
using SparseRow = std::vector<std::pair<int, Rat>>;

/// Flattened (row-major) matrix as a vector over a large index range.
using FlatVec = std::vector<std::pair<long long, Rat>>;

/// Sparse matrix over exact rationals. Immutable in spirit: builders mutate,
/// algebraic operations return fresh values.
class SparseMat {
public:
    SparseMat() = default;
    SparseMat(int nrows, int ncols);

    static SparseMat identity(int k);
    static SparseMat unit(int nrows, int ncols, int i, int j);

    int nrows() const { return nrows_; }
    int ncols() const { return ncols_; }
    const SparseRow& row(int i) const { return rows_[i]; }

    void add(int i, int j, const Rat& v);
    void set(int i, int j, const Rat& v);
    Rat get(int i, int j) const;

    bool is_zero() const;
    long long nnz() const;

    SparseMat transpose() const;
    SparseMat scaled(const Rat& c) const;

    FlatVec flatten() const;

    /// Line-oriented exchange format: "row col num/den" per entry.
    std::string triplets() const;
    static SparseMat from_triplets(int nrows, int ncols, const std::string& text);

    friend SparseMat operator*(const SparseMat& a, const SparseMat& b);
    friend SparseMat operator+(const SparseMat& a, const SparseMat& b);
    friend SparseMat operator-(const SparseMat& a, const SparseMat& b);
    bool operator==(const SparseMat& o) const;
    bool operator!=(const SparseMat& o) const { return !(*this == o); }

private:
    int nrows_ = 0, ncols_ = 0;
    std::vector<SparseRow> rows_;

    void check_coords(int i, int j) const;
};

SparseMat commutator(const SparseMat& a, const SparseMat& b);

}  // namespace ratschur
