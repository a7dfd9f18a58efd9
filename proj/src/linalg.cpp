#include "ratschur/linalg.hpp"

#include <algorithm>
#include <deque>

namespace ratschur {

namespace {

// Eliminates v against rows keyed by leading column. Entries are consumed in
// ascending column order; elimination only introduces columns to the right of
// the one being cleared, so the residual comes out sorted.
FlatVec eliminate(const std::map<long long, FlatVec>& rows, const FlatVec& v) {
    std::map<long long, Rat> work(v.begin(), v.end());
    FlatVec residual;
    while (!work.empty()) {
        auto it = work.begin();
        long long col = it->first;
        Rat coeff = std::move(it->second);
        work.erase(it);
        if (coeff == 0) continue;
        auto p = rows.find(col);
        if (p == rows.end()) {
            residual.emplace_back(col, std::move(coeff));
            continue;
        }
        const FlatVec& pivot_row = p->second;  // leading coefficient is 1
        for (size_t t = 1; t < pivot_row.size(); ++t) {
            Rat& slot = work[pivot_row[t].first];
            slot -= coeff * pivot_row[t].second;
            if (slot == 0) work.erase(pivot_row[t].first);
        }
    }
    return residual;
}

}  // namespace

FlatVec EchelonBasis::reduce(FlatVec v) const {
    return eliminate(rows_, v);
}

bool EchelonBasis::insert(const FlatVec& v) {
    FlatVec r = eliminate(rows_, v);
    if (r.empty()) return false;
    const Rat lead = r.front().second;
    if (lead != 1)
        for (auto& [c, val] : r) val /= lead;
    long long pivot = r.front().first;
    rows_.emplace(pivot, std::move(r));
    return true;
}

std::vector<FlatVec> EchelonBasis::canonical_rows() const {
    std::map<long long, FlatVec> canon;
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
        FlatVec head{it->second.front()};
        FlatVec tail(it->second.begin() + 1, it->second.end());
        FlatVec reduced = eliminate(canon, tail);
        head.insert(head.end(), reduced.begin(), reduced.end());
        canon.emplace(it->first, std::move(head));
    }
    std::vector<FlatVec> out;
    out.reserve(canon.size());
    for (auto& [pivot, row] : canon) out.push_back(std::move(row));
    return out;
}

namespace {

using IntRow = std::vector<std::pair<long long, Int>>;

IntRow to_primitive(const FlatVec& v) {
    Int lcm_den = 1;
    for (const auto& [c, val] : v)
        lcm_den = boost::multiprecision::lcm(lcm_den, denominator(val));
    IntRow row;
    row.reserve(v.size());
    Int content = 0;
    for (const auto& [c, val] : v) {
        Int scaled = numerator(val) * (lcm_den / denominator(val));
        content = boost::multiprecision::gcd(content, scaled);
        row.emplace_back(c, std::move(scaled));
    }
    if (content > 1)
        for (auto& [c, val] : row) val /= content;
    return row;
}

// p*a - q*b, then divided by content.
IntRow cross_eliminate(const IntRow& a, const Int& p, const IntRow& b, const Int& q) {
    IntRow out;
    out.reserve(a.size() + b.size());
    size_t ia = 0, ib = 0;
    Int content = 0;
    while (ia < a.size() || ib < b.size()) {
        Int v;
        long long col;
        if (ib == b.size() || (ia < a.size() && a[ia].first < b[ib].first)) {
            col = a[ia].first;
            v = p * a[ia].second;
            ++ia;
        } else if (ia == a.size() || b[ib].first < a[ia].first) {
            col = b[ib].first;
            v = -q * b[ib].second;
            ++ib;
        } else {
            col = a[ia].first;
            v = p * a[ia].second - q * b[ib].second;
            ++ia;
            ++ib;
        }
        if (v != 0) {
            content = boost::multiprecision::gcd(content, v);
            out.emplace_back(col, std::move(v));
        }
    }
    if (content > 1)
        for (auto& [c, val] : out) val /= content;
    return out;
}

const Int* find_col(const IntRow& row, long long col) {
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const auto& e, long long c) { return e.first < c; });
    if (it != row.end() && it->first == col) return &it->second;
    return nullptr;
}

}  // namespace

int rank(const std::vector<SparseMat>& mats) {
    if (mats.empty()) return 0;
    const int nr = mats[0].nrows(), nc = mats[0].ncols();
    std::vector<IntRow> active;
    for (const auto& m : mats) {
        if (m.nrows() != nr || m.ncols() != nc)
            throw std::invalid_argument("rank: matrices differ in shape");
        IntRow row = to_primitive(m.flatten());
        if (!row.empty()) active.push_back(std::move(row));
    }
    int result = 0;
    while (!active.empty()) {
        // shortest remaining row, then its smallest-magnitude entry
        size_t best = 0;
        for (size_t i = 1; i < active.size(); ++i)
            if (active[i].size() < active[best].size()) best = i;
        const IntRow pivot_row = std::move(active[best]);
        active.erase(active.begin() + static_cast<long>(best));
        long long pivot_col = pivot_row[0].first;
        Int pivot_val = pivot_row[0].second;
        for (const auto& [c, v] : pivot_row) {
            if (abs(v) < abs(pivot_val)) {
                pivot_col = c;
                pivot_val = v;
            }
        }
        ++result;
        std::vector<IntRow> next;
        next.reserve(active.size());
        for (auto& row : active) {
            const Int* entry = find_col(row, pivot_col);
            if (!entry) {
                next.push_back(std::move(row));
                continue;
            }
            IntRow reduced = cross_eliminate(row, pivot_val, pivot_row, *entry);
            if (!reduced.empty()) next.push_back(std::move(reduced));
        }
        active = std::move(next);
    }
    return result;
}

int matrix_rank(const SparseMat& m) {
    EchelonBasis ech;
    for (int i = 0; i < m.nrows(); ++i) {
        FlatVec v;
        for (const auto& [j, val] : m.row(i)) v.emplace_back(j, val);
        ech.insert(v);
    }
    return ech.rank();
}

AlgebraSpan span_closure(const std::vector<SparseMat>& generators, bool with_identity,
                         int ambient_size) {
    int k = ambient_size;
    for (const auto& g : generators) {
        if (g.nrows() != g.ncols()) throw std::invalid_argument("span_closure: non-square input");
        if (k == -1)
            k = g.nrows();
        else if (g.nrows() != k)
            throw std::invalid_argument("span_closure: size mismatch");
    }
    if (k == -1) {
        if (!with_identity) return {};
        throw std::invalid_argument("span_closure: empty generator set without ambient size");
    }

    AlgebraSpan span;
    span.ambient_dim = static_cast<long long>(k) * k;
    std::deque<int> worklist;
    auto try_add = [&](const SparseMat& m) {
        if (span.echelon.insert(m.flatten())) {
            span.basis.push_back(m);
            worklist.push_back(static_cast<int>(span.basis.size()) - 1);
        }
    };
    if (with_identity) try_add(SparseMat::identity(k));
    for (const auto& g : generators) try_add(g);
    while (!worklist.empty()) {
        int i = worklist.front();
        worklist.pop_front();
        for (const auto& g : generators) try_add(span.basis[i] * g);
    }
    span.closed = true;
    return span;
}

AlgebraSpan commutant(const std::vector<SparseMat>& generators) {
    if (generators.empty()) throw std::invalid_argument("commutant: empty generator set");
    const int k = generators[0].nrows();
    for (const auto& g : generators)
        if (g.nrows() != k || g.ncols() != k)
            throw std::invalid_argument("commutant: non-square input or size mismatch");
    const long long ambient = static_cast<long long>(k) * k;

    std::vector<SparseMat> basis;
    basis.reserve(ambient);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) basis.push_back(SparseMat::unit(k, k, i, j));

    for (const auto& g : generators) {
        AugmentedSolver solver(ambient);
        for (const auto& b : basis) solver.add(commutator(b, g).flatten());
        std::vector<SparseMat> next;
        for (const auto& coords : solver.relations()) {
            SparseMat m(k, k);
            for (size_t j = 0; j < coords.size(); ++j) {
                if (coords[j] == 0) continue;
                for (int bi = 0; bi < k; ++bi)
                    for (const auto& [bj, bv] : basis[j].row(bi)) m.add(bi, bj, coords[j] * bv);
            }
            next.push_back(std::move(m));
        }
        basis = std::move(next);
    }

    AlgebraSpan out;
    out.ambient_dim = ambient;
    for (const auto& m : basis) out.echelon.insert(m.flatten());
    out.basis = std::move(basis);
    return out;
}

void AugmentedSolver::add(const FlatVec& v) {
    FlatVec aug = v;
    aug.emplace_back(main_dim_ + count_, Rat(1));
    ech_.insert(aug);
    ++count_;
}

std::optional<std::vector<Rat>> AugmentedSolver::solve(const FlatVec& target) const {
    FlatVec residual = ech_.reduce(target);
    std::vector<Rat> coords(count_, Rat(0));
    for (const auto& [c, v] : residual) {
        if (c < main_dim_) return std::nullopt;
        coords[static_cast<size_t>(c - main_dim_)] = -v;
    }
    return coords;
}

std::vector<std::vector<Rat>> AugmentedSolver::relations() const {
    std::vector<std::vector<Rat>> out;
    for (const auto& row : ech_.canonical_rows()) {
        if (row.front().first < main_dim_) continue;
        std::vector<Rat> coords(count_, Rat(0));
        for (const auto& [c, v] : row) coords[static_cast<size_t>(c - main_dim_)] = v;
        out.push_back(std::move(coords));
    }
    return out;
}

}  // namespace ratschur
