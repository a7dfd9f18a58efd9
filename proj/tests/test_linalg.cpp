#include <doctest.h>

#include "ratschur/linalg.hpp"

using namespace ratschur;

namespace {

SparseMat from_rows(const std::vector<std::vector<int>>& rows) {
    SparseMat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j)
            m.add(static_cast<int>(i), static_cast<int>(j), Rat(rows[i][j]));
    return m;
}

}  // namespace

TEST_CASE("sparse matrix arithmetic basics") {
    SparseMat a = from_rows({{1, 2}, {3, 4}});
    SparseMat b = from_rows({{0, 1}, {1, 0}});
    CHECK(a * b == from_rows({{2, 1}, {4, 3}}));
    CHECK(a + b == from_rows({{1, 3}, {4, 4}}));
    CHECK((a - a).is_zero());
    CHECK(a.transpose() == from_rows({{1, 3}, {2, 4}}));
    CHECK(commutator(a, SparseMat::identity(2)).is_zero());
    CHECK(a.scaled(Rat(1, 2)).get(1, 0) == Rat(3, 2));
    CHECK_THROWS(a * SparseMat(3, 3));
}

TEST_CASE("triplet round trip keeps exact fractions") {
    SparseMat a(2, 3);
    a.add(0, 2, Rat(-7, 3));
    a.add(1, 0, Rat(5));
    CHECK(SparseMat::from_triplets(2, 3, a.triplets()) == a);
}

TEST_CASE("rank on hand-checkable examples") {
    CHECK(matrix_rank(from_rows({{1, 2}, {2, 4}})) == 1);
    CHECK(matrix_rank(from_rows({{1, 0}, {0, 1}})) == 2);
    // rank of a set of matrices is the rank of their flattened span
    SparseMat e01 = SparseMat::unit(2, 2, 0, 1);
    SparseMat e10 = SparseMat::unit(2, 2, 1, 0);
    CHECK(rank({e01, e10, e01 + e10}) == 2);
    CHECK(rank({e01, e10}) == 2);
    CHECK(rank({e01, e01.scaled(Rat(-5, 3))}) == 1);
    // fraction-heavy input: entries 1/(i+j+1), the 4x4 Hilbert matrix
    SparseMat h(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) h.add(i, j, Rat(1, i + j + 1));
    CHECK(matrix_rank(h) == 4);
    SparseMat h_singular = h;
    for (int j = 0; j < 4; ++j) h_singular.set(3, j, h.get(0, j) - h.get(1, j));
    CHECK(matrix_rank(h_singular) == 3);
}

TEST_CASE("rank agrees with the echelon accumulator on both insertion orders") {
    std::vector<SparseMat> mats;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            SparseMat m = SparseMat::unit(3, 3, i, j);
            m.add((i + 1) % 3, j, Rat(i - j, 7));
            mats.push_back(m);
        }
    EchelonBasis fwd, rev;
    for (const auto& m : mats) fwd.insert(m.flatten());
    for (auto it = mats.rbegin(); it != mats.rend(); ++it) rev.insert(it->flatten());
    CHECK(fwd.rank() == rev.rank());
    CHECK(fwd.rank() == rank(mats));
    CHECK(fwd.canonical_rows() == rev.canonical_rows());
}

TEST_CASE("span_closure of matrix unit generators") {
    // e01, e10 generate all of M_2
    auto span = span_closure({SparseMat::unit(2, 2, 0, 1), SparseMat::unit(2, 2, 1, 0)}, false);
    CHECK(span.dim() == 4);
    CHECK(span.closed);
    // a single nilpotent spans only itself (non-unital closure)
    CHECK(span_closure({SparseMat::unit(3, 3, 0, 2)}, false).dim() == 1);
    CHECK(span_closure({SparseMat::unit(3, 3, 0, 2)}, true).dim() == 2);
    CHECK(span_closure({}, false).dim() == 0);  // no generators, no identity: zero algebra
    CHECK_THROWS(span_closure({}, true));       // ambient size unknown
    auto scalars = span_closure({}, true, 4);   // unital closure of nothing: the scalars
    CHECK(scalars.dim() == 1);
    CHECK(scalars.basis[0] == SparseMat::identity(4));
    CHECK_THROWS(span_closure({SparseMat(2, 3)}, false));
}

TEST_CASE("commutant examples") {
    // commutant of all of M_2 is the scalars
    std::vector<SparseMat> units;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) units.push_back(SparseMat::unit(2, 2, i, j));
    CHECK(commutant(units).dim() == 1);
    // commutant of a diagonal with distinct eigenvalues: all diagonals
    SparseMat d(3, 3);
    d.add(0, 0, Rat(1));
    d.add(1, 1, Rat(2));
    d.add(2, 2, Rat(5));
    auto c = commutant({d});
    CHECK(c.dim() == 3);
    for (const auto& b : c.basis) CHECK(commutator(b, d).is_zero());
    // commutant of scalars is everything
    CHECK(commutant({SparseMat::identity(3)}).dim() == 9);
    CHECK_THROWS(commutant({}));
}

TEST_CASE("rank is invariant under input scaling and permutation") {
    std::vector<SparseMat> mats;
    for (int i = 0; i < 3; ++i) {
        SparseMat m(2, 3);
        m.add(i % 2, i, Rat(i + 1, 5));
        m.add(0, 2, Rat(1));
        mats.push_back(m);
    }
    int base = rank(mats);
    std::vector<SparseMat> scaled = {mats[2].scaled(Rat(-7, 11)), mats[0].scaled(Rat(9)),
                                     mats[1]};
    CHECK(rank(scaled) == base);
}

TEST_CASE("span_closure output is product closed") {
    SparseMat nilp = SparseMat::unit(3, 3, 0, 1) + SparseMat::unit(3, 3, 1, 2);
    auto span = span_closure({nilp}, true);
    CHECK(span.dim() == 3);  // I, N, N^2
    for (const auto& a : span.basis)
        for (const auto& b : span.basis) CHECK(span.echelon.contains((a * b).flatten()));
}

TEST_CASE("commutant of a set equals commutant of the algebra it generates") {
    SparseMat g(3, 3);
    g.add(0, 1, Rat(1));
    g.add(1, 0, Rat(1));
    g.add(2, 2, Rat(4));
    auto direct = commutant({g});
    auto via_algebra = commutant(span_closure({g}, true).basis);
    CHECK(direct.dim() == via_algebra.dim());
    CHECK(direct.echelon.canonical_rows() == via_algebra.echelon.canonical_rows());
    // identity always commutes
    CHECK(direct.echelon.contains(SparseMat::identity(3).flatten()));
    for (const auto& b : direct.basis) CHECK(commutator(b, g).is_zero());
}

TEST_CASE("augmented solver coordinates and relations") {
    AugmentedSolver solver(4);
    SparseMat a = from_rows({{1, 0}, {0, 0}});
    SparseMat b = from_rows({{0, 1}, {1, 0}});
    solver.add(a.flatten());
    solver.add(b.flatten());
    auto coords = solver.solve((a + b.scaled(Rat(3))).flatten());
    REQUIRE(coords.has_value());
    CHECK((*coords)[0] == 1);
    CHECK((*coords)[1] == 3);
    CHECK_FALSE(solver.solve(from_rows({{0, 0}, {0, 1}}).flatten()).has_value());
    CHECK(solver.relations().empty());
    solver.add((a - b).flatten());
    auto rels = solver.relations();
    REQUIRE(rels.size() == 1);
    // the relation is a multiple of (1, -1, -1)
    CHECK(rels[0][0] * Rat(-1) == rels[0][2]);
    CHECK(rels[0][1] == rels[0][2]);
}
