#pragma once

#include <map>
#include <string>
#include <vector>

#include "ratschur/poly.hpp"
#include "ratschur/schur.hpp"
#include "ratschur/tensor.hpp"

namespace ratschur {

/// Walled Brauer diagram on 2(r+s) vertices. Columns 0..r-1 carry the
/// positive labels 1..r (left of the wall), columns r..r+s-1 the negative
/// labels -1..-s. Vertex numbering: top row columns are vertices 0..m-1,
/// bottom row columns are m..2m-1, with m = r+s.
struct WalledDiagram {
    int r = 0, s = 0;
    std::vector<int> match;  // fixed-point-free involution on 0..2m-1

    int m() const { return r + s; }

    static WalledDiagram identity(int r, int s);
    /// c_{i,-j}: horizontal edges joining columns (i-1, r+j-1) on both rows.
    static WalledDiagram contraction(int r, int s, int i, int j);
    /// t_pi for a side-preserving column permutation: top column c joined to
    /// bottom column pi[c]. Throws if pi moves a column across the wall.
    static WalledDiagram permutation(int r, int s, const std::vector<int>& pi);
    /// Adjacent transposition of columns c and c+1 (same side of the wall).
    static WalledDiagram transposition(int r, int s, int c);

    bool is_valid() const;

    auto operator<=>(const WalledDiagram&) const = default;
};

/// Diagram label of a column: 1..r left of the wall, -1..-s right of it.
int column_label(const WalledDiagram& d, int col);

/// All (r+s)! walled diagrams, via the bijection with S_{r+s} that swaps the
/// top and bottom vertices of every column right of the wall in a permutation
/// diagram. Deterministic order (lex in the underlying permutation).
std::vector<WalledDiagram> enum_diagrams(int r, int s);

/// Stacks d1 on top of d2 and traces paths; returns the composite and the
/// number of interior loops removed.
std::pair<WalledDiagram, int> compose(const WalledDiagram& d1, const WalledDiagram& d2);

/// Reflection top <-> bottom; an anti-involution of the diagram algebra.
WalledDiagram flip(const WalledDiagram& d);

/// Element of the walled Brauer algebra over Q[x].
struct DiagramElement {
    int r = 0, s = 0;
    std::map<WalledDiagram, Poly> terms;  // no zero polynomials stored

    static DiagramElement of(const WalledDiagram& d);
    void add_term(const WalledDiagram& d, const Poly& c);

    bool operator==(const DiagramElement&) const = default;
};

/// Bilinear extension of d1 * d2 = x^{loops} (d1 compose d2).
DiagramElement multiply(const DiagramElement& a, const DiagramElement& b);

/// Matrix of the right action of the place-permutation diagram t_pi on
/// E^{r,s} in the left-multiplication column convention: values flow from
/// top column c to bottom column pi[c].
SparseMat right_perm_matrix(const MixedSpace& space, const std::vector<int>& pi);

/// Matrix of the contraction c_{i,-j} on E^{r,s}: a delta on the paired
/// slots followed by insertion of sum_k v_k (x) v'_k, specialized at x = n.
SparseMat contraction_matrix(const MixedSpace& space, int i, int j);

/// Left-multiplication matrix tau(D) of an arbitrary diagram on E^{r,s}.
/// Defined as the right-action matrix of flip(D), which makes D -> tau(D) an
/// algebra homomorphism at x = n; computed by factoring flip(D) as
/// t_pi . (chain of contractions) . t_rho, a loop-free generator word.
SparseMat action_matrix(const WalledDiagram& d, int n);

/// Same operator computed from a different generator word: the two column
/// permutations are expanded into adjacent transpositions and the matrices of
/// the elementary generators are multiplied one by one.
SparseMat action_matrix_elementary(const WalledDiagram& d, int n);

/// tau of the standard generators: adjacent transpositions on each side of
/// the wall plus the contraction c_{r,-1}.
std::vector<SparseMat> brauer_generator_matrices(int n, int r, int s);

/// Exact commutators of every hyperalgebra generator with every Brauer
/// generator vanish.
bool commuting_actions_check(int n, int r, int s);

struct SwdReport {
    int n = 0, r = 0, s = 0;
    long long d1 = 0;  // dim of the algebra generated by the diagram action
    long long d2 = 0;  // dim of the commutant of the diagram action
    long long d3 = 0;  // dim of the commutant of the hyperalgebra generators
    long long d4 = 0;  // dim of the hyperalgebra envelope
    bool hypothesis = false;  // n >= r+s
    bool centralizer_match = false;  // d2 == d4 and d3 == d1
};

SwdReport double_centralizer_check(int n, int r, int s);

/// S(n;r,s) realized as the commutant of the walled Brauer action.
RationalSchurAlgebra build_rational_centralizer(int n, int r, int s);

/// Edge list "t1-b1, t-1-b-1, ..." with edges sorted by smallest vertex.
std::string diagram_str(const WalledDiagram& d);
WalledDiagram parse_diagram(int r, int s, const std::string& text);

}  // namespace ratschur
