#pragma once

#include <string>
#include <vector>

#include "ratschur/weights.hpp"

namespace ratschur {

/// Row semistandard filling of a partition shape with entries in 1..n:
/// weakly increasing along rows, strictly increasing down columns.
struct Tableau {
    std::vector<int> shape;                 // weakly decreasing, trailing zeros allowed
    std::vector<std::vector<int>> rows;     // rows[i].size() == shape[i]

    bool operator==(const Tableau&) const = default;
};

bool is_row_semistandard(const Tableau& t, int n);

/// Complete enumeration, lexicographic in the row-reading word.
std::vector<Tableau> enum_ssyt(const std::vector<int>& shape, int n);

/// Multi-index obtained by reading rows left to right, top to bottom.
std::vector<int> tableau_to_index(const Tableau& t);

/// Row reading of the tableau whose i-th row is filled with i.
std::vector<int> canonical_index(const std::vector<int>& shape);

/// Dimension of the Weyl module of highest weight lam (any dominant weight in
/// Z^n), as a count of row semistandard tableaux after shifting entries
/// nonnegative. Shift-invariant.
Int weyl_dim(const Weight& lam, int n);

std::string tableau_str(const Tableau& t);
Tableau parse_tableau(const std::string& s);

}  // namespace ratschur
