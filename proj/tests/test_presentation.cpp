#include <doctest.h>

#include "ratschur/linalg.hpp"
#include "ratschur/presentation.hpp"
#include "ratschur/schur.hpp"

using namespace ratschur;

TEST_CASE("ordinary relations hold") {
    for (auto [n, d] : {std::pair{2, 2}, {3, 3}, {3, 4}}) {
        auto rep = check_ordinary_relations(n, d);
        CAPTURE(n);
        CAPTURE(d);
        CHECK(rep.all_hold());
        CHECK(rep.checks.size() == 7);
        for (const auto& c : rep.checks) {
            CAPTURE(c.id);
            CHECK(c.failing.empty());
        }
    }
}

TEST_CASE("rational relations hold") {
    for (auto [n, r, s] : {std::tuple{2, 1, 1}, {3, 1, 1}, {3, 2, 1}}) {
        auto rep = check_rational_relations(n, r, s);
        CAPTURE(n);
        CAPTURE(r);
        CAPTURE(s);
        CHECK(rep.all_hold());
        CHECK(rep.checks.back().id == "g'");
    }
}

TEST_CASE("e1 f1 - f1 e1 = H1 - H2 in any bidegree") {
    for (auto [n, r, s] : {std::tuple{2, 2, 0}, {3, 1, 1}, {3, 2, 1}, {4, 1, 1}}) {
        auto g = mixed_generator_matrices(n, r, s);
        CHECK(commutator(g.e[0], g.f[0]) == g.H[0] - g.H[1]);
    }
}

TEST_CASE("H1 annihilating polynomial at (2,2) matches eigenvalues {0,1,2}") {
    auto g = mixed_generator_matrices(2, 2, 0);
    SparseMat id = SparseMat::identity(4);
    SparseMat p = g.H[0] * (g.H[0] - id) * (g.H[0] - id.scaled(Rat(2)));
    CHECK(p.is_zero());
    // degree-2 truncations do not annihilate
    CHECK_FALSE((g.H[0] * (g.H[0] - id)).is_zero());
}

TEST_CASE("(g') is minimal at (3,1,1): dropping any factor breaks it") {
    auto g = mixed_generator_matrices(3, 1, 1);
    SparseMat id = SparseMat::identity(9);
    for (int skip = -1; skip <= 1; ++skip) {
        SparseMat prod = id;
        for (int q = -1; q <= 1; ++q) {
            if (q == skip) continue;
            prod = prod * (g.H[0] - id.scaled(Rat(q)));
        }
        CAPTURE(skip);
        CHECK_FALSE(prod.is_zero());
    }
}

TEST_CASE("weight projectors 1_mu sum to the identity on tensor space") {
    const int n = 3, d = 3;
    auto g = mixed_generator_matrices(n, d, 0);
    SparseMat total(27, 27);
    std::vector<int> mu(3);
    for (mu[0] = 0; mu[0] <= d; ++mu[0])
        for (mu[1] = 0; mu[0] + mu[1] <= d; ++mu[1]) {
            mu[2] = d - mu[0] - mu[1];
            SparseMat p = weight_projector(g, mu);
            CHECK(p * p == p);
            total = total + p;
        }
    CHECK(total == SparseMat::identity(27));
}

TEST_CASE("matrix binomial on a small diagonal") {
    SparseMat h(2, 2);
    h.add(0, 0, Rat(3));
    h.add(1, 1, Rat(1));
    SparseMat b = matrix_binomial(h, 2);  // binom(3,2)=3, binom(1,2)=0
    CHECK(b.get(0, 0) == 3);
    CHECK(b.get(1, 1) == 0);
}

TEST_CASE("semisimple dimension audits") {
    CHECK(semisimple_dimension_audit(3, 1, 1));  // 65 = 8^2 + 1^2
    CHECK(semisimple_dimension_audit(3, 1, 2));  // 270 = 15^2 + 6^2 + 3^2
    CHECK(semisimple_dimension_audit(2, 1, 1));
    CHECK(semisimple_dimension_audit(3, 2, 2));  // 994
    Int total = 0;
    for (const auto& e : rational_weyl_data(3, 1, 2)) total += e.dim * e.dim;
    CHECK(total == 270);
}

TEST_CASE("relation reports carry witness counts") {
    auto rep = check_ordinary_relations(3, 3);
    for (const auto& c : rep.checks) CHECK(c.witnesses > 0);
}
