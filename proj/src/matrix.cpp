#include "ratschur/matrix.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace ratschur {

SparseMat::SparseMat(int nrows, int ncols) : nrows_(nrows), ncols_(ncols), rows_(nrows) {
    if (nrows < 0 || ncols < 0) throw std::invalid_argument("negative matrix dimension");
}

void SparseMat::check_coords(int i, int j) const {
    if (i < 0 || i >= nrows_ || j < 0 || j >= ncols_)
        throw std::out_of_range("matrix coordinate out of range");
}

SparseMat SparseMat::identity(int k) {
    SparseMat m(k, k);
    for (int i = 0; i < k; ++i) m.rows_[i].emplace_back(i, Rat(1));
    return m;
}

SparseMat SparseMat::unit(int nrows, int ncols, int i, int j) {
    SparseMat m(nrows, ncols);
    m.check_coords(i, j);
    m.rows_[i].emplace_back(j, Rat(1));
    return m;
}

void SparseMat::add(int i, int j, const Rat& v) {
    check_coords(i, j);
    if (v == 0) return;
    auto& row = rows_[i];
    auto it = std::lower_bound(row.begin(), row.end(), j,
                               [](const auto& e, int col) { return e.first < col; });
    if (it != row.end() && it->first == j) {
        it->second += v;
        if (it->second == 0) row.erase(it);
    } else {
        row.insert(it, {j, v});
    }
}

void SparseMat::set(int i, int j, const Rat& v) {
    check_coords(i, j);
    auto& row = rows_[i];
    auto it = std::lower_bound(row.begin(), row.end(), j,
                               [](const auto& e, int col) { return e.first < col; });
    if (it != row.end() && it->first == j) {
        if (v == 0)
            row.erase(it);
        else
            it->second = v;
    } else if (v != 0) {
        row.insert(it, {j, v});
    }
}

Rat SparseMat::get(int i, int j) const {
    check_coords(i, j);
    const auto& row = rows_[i];
    auto it = std::lower_bound(row.begin(), row.end(), j,
                               [](const auto& e, int col) { return e.first < col; });
    if (it != row.end() && it->first == j) return it->second;
    return Rat(0);
}

bool SparseMat::is_zero() const {
    for (const auto& row : rows_)
        if (!row.empty()) return false;
    return true;
}

long long SparseMat::nnz() const {
    long long total = 0;
    for (const auto& row : rows_) total += static_cast<long long>(row.size());
    return total;
}

SparseMat SparseMat::transpose() const {
    SparseMat out(ncols_, nrows_);
    for (int i = 0; i < nrows_; ++i)
        for (const auto& [j, v] : rows_[i]) out.rows_[j].emplace_back(i, v);
    return out;
}

SparseMat SparseMat::scaled(const Rat& c) const {
    SparseMat out(nrows_, ncols_);
    if (c == 0) return out;
    for (int i = 0; i < nrows_; ++i) {
        out.rows_[i].reserve(rows_[i].size());
        for (const auto& [j, v] : rows_[i]) out.rows_[i].emplace_back(j, v * c);
    }
    return out;
}

FlatVec SparseMat::flatten() const {
    FlatVec out;
    out.reserve(nnz());
    for (int i = 0; i < nrows_; ++i)
        for (const auto& [j, v] : rows_[i])
            out.emplace_back(static_cast<long long>(i) * ncols_ + j, v);
    return out;
}

SparseMat operator*(const SparseMat& a, const SparseMat& b) {
    if (a.ncols_ != b.nrows_) throw std::invalid_argument("matrix product shape mismatch");
    SparseMat out(a.nrows_, b.ncols_);
    std::map<int, Rat> acc;
    for (int i = 0; i < a.nrows_; ++i) {
        acc.clear();
        for (const auto& [k, av] : a.rows_[i])
            for (const auto& [j, bv] : b.rows_[k]) acc[j] += av * bv;
        auto& row = out.rows_[i];
        for (auto& [j, v] : acc)
            if (v != 0) row.emplace_back(j, std::move(v));
    }
    return out;
}

static SparseRow merge_rows(const SparseRow& a, const SparseRow& b, int sign) {
    SparseRow out;
    out.reserve(a.size() + b.size());
    size_t ia = 0, ib = 0;
    while (ia < a.size() || ib < b.size()) {
        if (ib == b.size() || (ia < a.size() && a[ia].first < b[ib].first)) {
            out.push_back(a[ia++]);
        } else if (ia == a.size() || b[ib].first < a[ia].first) {
            out.emplace_back(b[ib].first, sign > 0 ? b[ib].second : -b[ib].second);
            ++ib;
        } else {
            Rat v = sign > 0 ? Rat(a[ia].second + b[ib].second)
                             : Rat(a[ia].second - b[ib].second);
            if (v != 0) out.emplace_back(a[ia].first, std::move(v));
            ++ia;
            ++ib;
        }
    }
    return out;
}

SparseMat operator+(const SparseMat& a, const SparseMat& b) {
    if (a.nrows_ != b.nrows_ || a.ncols_ != b.ncols_)
        throw std::invalid_argument("matrix sum shape mismatch");
    SparseMat out(a.nrows_, a.ncols_);
    for (int i = 0; i < a.nrows_; ++i) out.rows_[i] = merge_rows(a.rows_[i], b.rows_[i], +1);
    return out;
}

SparseMat operator-(const SparseMat& a, const SparseMat& b) {
    if (a.nrows_ != b.nrows_ || a.ncols_ != b.ncols_)
        throw std::invalid_argument("matrix difference shape mismatch");
    SparseMat out(a.nrows_, a.ncols_);
    for (int i = 0; i < a.nrows_; ++i) out.rows_[i] = merge_rows(a.rows_[i], b.rows_[i], -1);
    return out;
}

bool SparseMat::operator==(const SparseMat& o) const {
    return nrows_ == o.nrows_ && ncols_ == o.ncols_ && rows_ == o.rows_;
}

std::string SparseMat::triplets() const {
    std::ostringstream os;
    for (int i = 0; i < nrows_; ++i)
        for (const auto& [j, v] : rows_[i]) os << i << ' ' << j << ' ' << rat_str(v) << '\n';
    return os.str();
}

SparseMat SparseMat::from_triplets(int nrows, int ncols, const std::string& text) {
    SparseMat m(nrows, ncols);
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        int i, j;
        std::string val;
        if (!(ls >> i >> j >> val)) throw std::invalid_argument("bad triplet line: " + line);
        m.add(i, j, parse_rat(val));
    }
    return m;
}

SparseMat commutator(const SparseMat& a, const SparseMat& b) {
    return a * b - b * a;
}

}  // namespace ratschur
