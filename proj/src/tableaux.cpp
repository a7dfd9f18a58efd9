#include "ratschur/tableaux.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ratschur {

static void check_shape(const std::vector<int>& shape, int n) {
    int nonzero = 0;
    for (size_t i = 0; i < shape.size(); ++i) {
        if (shape[i] < 0) throw std::invalid_argument("negative part in shape");
        if (i > 0 && shape[i - 1] < shape[i])
            throw std::invalid_argument("shape not weakly decreasing");
        if (shape[i] > 0) ++nonzero;
    }
    if (nonzero > n) throw std::invalid_argument("shape has more than n parts");
}

bool is_row_semistandard(const Tableau& t, int n) {
    if (t.rows.size() != t.shape.size()) {
        // trailing zero rows may be omitted
        size_t k = t.rows.size();
        for (size_t i = k; i < t.shape.size(); ++i)
            if (t.shape[i] != 0) return false;
    }
    for (size_t i = 0; i < t.rows.size(); ++i) {
        if (static_cast<int>(t.rows[i].size()) != t.shape[i]) return false;
        for (size_t j = 0; j < t.rows[i].size(); ++j) {
            int v = t.rows[i][j];
            if (v < 1 || v > n) return false;
            if (j > 0 && t.rows[i][j - 1] > v) return false;
            if (i > 0 && static_cast<int>(t.rows[i - 1].size()) > static_cast<int>(j) &&
                t.rows[i - 1][j] >= v)
                return false;
        }
    }
    return true;
}

std::vector<Tableau> enum_ssyt(const std::vector<int>& shape, int n) {
    check_shape(shape, n);
    std::vector<int> parts;
    for (int p : shape)
        if (p > 0) parts.push_back(p);

    std::vector<Tableau> out;
    Tableau cur;
    cur.shape = shape;
    cur.rows.assign(parts.size(), {});
    auto rec = [&](auto&& self, size_t row, int col) -> void {
        if (row == parts.size()) {
            Tableau t = cur;
            t.rows.resize(shape.size());  // pad empty rows for zero parts
            out.push_back(std::move(t));
            return;
        }
        if (col == parts[row]) {
            self(self, row + 1, 0);
            return;
        }
        int lo = 1;
        if (col > 0) lo = std::max(lo, cur.rows[row][static_cast<size_t>(col) - 1]);
        if (row > 0 && col < static_cast<int>(cur.rows[row - 1].size()))
            lo = std::max(lo, cur.rows[row - 1][static_cast<size_t>(col)] + 1);
        for (int v = lo; v <= n; ++v) {
            cur.rows[row].push_back(v);
            self(self, row, col + 1);
            cur.rows[row].pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

std::vector<int> tableau_to_index(const Tableau& t) {
    std::vector<int> out;
    for (const auto& row : t.rows) out.insert(out.end(), row.begin(), row.end());
    return out;
}

std::vector<int> canonical_index(const std::vector<int>& shape) {
    std::vector<int> out;
    for (size_t i = 0; i < shape.size(); ++i)
        out.insert(out.end(), static_cast<size_t>(std::max(shape[i], 0)), static_cast<int>(i) + 1);
    return out;
}

Int weyl_dim(const Weight& lam, int n) {
    if (static_cast<int>(lam.size()) > n) throw std::invalid_argument("weight longer than n");
    if (!is_dominant(lam)) throw std::invalid_argument("weyl_dim: weight not dominant");
    Weight full = lam;
    full.resize(static_cast<size_t>(n), 0);
    if (!is_dominant(full)) throw std::invalid_argument("weyl_dim: weight not dominant");
    int lift = full.back() < 0 ? -full.back() : 0;
    std::vector<int> shape;
    for (int v : full) shape.push_back(v + lift);
    return Int(enum_ssyt(shape, n).size());
}

std::string tableau_str(const Tableau& t) {
    std::ostringstream os;
    bool first_row = true;
    for (const auto& row : t.rows) {
        if (row.empty()) continue;
        if (!first_row) os << '/';
        first_row = false;
        for (size_t j = 0; j < row.size(); ++j) {
            if (j) os << ',';
            os << row[j];
        }
    }
    return os.str();
}

Tableau parse_tableau(const std::string& s) {
    Tableau t;
    std::istringstream is(s);
    std::string row_text;
    while (std::getline(is, row_text, '/')) {
        std::vector<int> row;
        std::istringstream rs(row_text);
        std::string tok;
        while (std::getline(rs, tok, ',')) row.push_back(std::stoi(tok));
        t.rows.push_back(std::move(row));
    }
    for (const auto& row : t.rows) t.shape.push_back(static_cast<int>(row.size()));
    return t;
}

}  // namespace ratschur
