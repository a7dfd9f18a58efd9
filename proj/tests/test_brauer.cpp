#include <doctest.h>

#include <random>
#include <set>

#include "ratschur/brauer.hpp"

using namespace ratschur;

TEST_CASE("diagram enumeration counts (r+s)!") {
    long long fact = 1;
    for (int m = 0; m <= 5; ++m) {
        if (m > 0) fact *= m;
        for (int r = 0; r <= m; ++r) {
            auto diags = enum_diagrams(r, m - r);
            CHECK(static_cast<long long>(diags.size()) == fact);
            std::set<WalledDiagram> distinct(diags.begin(), diags.end());
            CHECK(distinct.size() == diags.size());
            for (const auto& d : diags) CHECK(d.is_valid());
        }
    }
}

TEST_CASE("composition basics") {
    auto id = WalledDiagram::identity(2, 1);
    for (const auto& d : enum_diagrams(2, 1)) {
        CHECK(compose(id, d) == std::pair{d, 0});
        CHECK(compose(d, id) == std::pair{d, 0});
    }
    // hand oracle: c . c closes one loop and reproduces c
    auto c = WalledDiagram::contraction(1, 1, 1, 1);
    CHECK(compose(c, c) == std::pair{c, 1});
    // permutation diagrams compose without loops
    auto t = WalledDiagram::transposition(2, 1, 0);
    CHECK(compose(t, t) == std::pair{WalledDiagram::identity(2, 1), 0});
    CHECK_THROWS(compose(c, WalledDiagram::identity(2, 0)));
}

TEST_CASE("composition preserves wall constraints") {
    for (int r = 0; r <= 3; ++r)
        for (int s = 0; r + s <= 3; ++s) {
            auto diags = enum_diagrams(r, s);
            for (const auto& a : diags)
                for (const auto& b : diags) CHECK(compose(a, b).first.is_valid());
        }
}

TEST_CASE("element multiplication: c.c = x.c and associativity") {
    auto c = DiagramElement::of(WalledDiagram::contraction(1, 1, 1, 1));
    auto cc = multiply(c, c);
    REQUIRE(cc.terms.size() == 1);
    CHECK(cc.terms.begin()->second == Poly::monomial(1));

    for (int r = 0; r <= 3; ++r)
        for (int s = 0; r + s <= 3; ++s) {
            auto diags = enum_diagrams(r, s);
            for (const auto& a : diags)
                for (const auto& b : diags)
                    for (const auto& d : diags) {
                        auto ea = DiagramElement::of(a), eb = DiagramElement::of(b),
                             ed = DiagramElement::of(d);
                        CHECK(multiply(multiply(ea, eb), ed) == multiply(ea, multiply(eb, ed)));
                    }
        }
}

TEST_CASE("associativity on random triples at r+s = 4") {
    std::mt19937 rng(1729);
    auto diags = enum_diagrams(2, 2);
    std::uniform_int_distribution<size_t> pick(0, diags.size() - 1);
    for (int trial = 0; trial < 40; ++trial) {
        auto ea = DiagramElement::of(diags[pick(rng)]);
        auto eb = DiagramElement::of(diags[pick(rng)]);
        auto ed = DiagramElement::of(diags[pick(rng)]);
        CHECK(multiply(multiply(ea, eb), ed) == multiply(ea, multiply(eb, ed)));
    }
}

TEST_CASE("loop counts never exceed min(r,s)") {
    for (int r = 0; r <= 2; ++r)
        for (int s = 0; r + s <= 4; ++s) {
            auto diags = enum_diagrams(r, s);
            for (const auto& a : diags)
                for (const auto& b : diags) CHECK(compose(a, b).second <= std::min(r, s));
        }
}

TEST_CASE("t_sigma . c . t_tau is always loop free") {
    for (auto [r, s] : {std::pair{1, 1}, {2, 1}}) {
        auto c = DiagramElement::of(WalledDiagram::contraction(r, s, r, 1));
        for (const auto& a : enum_diagrams(r, 0))
            for (const auto& b : enum_diagrams(0, s)) {
                // build side-preserving permutation diagrams from the factors
                std::vector<int> pi(static_cast<size_t>(r + s)), rho(static_cast<size_t>(r + s));
                for (int i = 0; i < r + s; ++i) pi[static_cast<size_t>(i)] = rho[static_cast<size_t>(i)] = i;
                for (int i = 0; i < r; ++i) pi[static_cast<size_t>(i)] = a.match[static_cast<size_t>(i)] - r;
                for (int j = 0; j < s; ++j) rho[static_cast<size_t>(r + j)] = r + b.match[static_cast<size_t>(j)] - s;
                auto prod = multiply(
                    multiply(DiagramElement::of(WalledDiagram::permutation(r, s, pi)), c),
                    DiagramElement::of(WalledDiagram::permutation(r, s, rho)));
                REQUIRE(prod.terms.size() == 1);
                CHECK(prod.terms.begin()->second == Poly(Rat(1)));
            }
    }
}

TEST_CASE("contraction action on E^{1,1} at n=3") {
    auto mat = action_matrix(WalledDiagram::contraction(1, 1, 1, 1), 3);
    // M(v_i x v'_j) = delta_ij sum_k v_k x v'_k
    MixedSpace space(3, 1, 1);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            long long col = space.encode({i, j});
            for (int k = 1; k <= 3; ++k)
                CHECK(mat.get(static_cast<int>(space.encode({k, k})), static_cast<int>(col)) ==
                      (i == j ? 1 : 0));
        }
    CHECK(matrix_rank(mat) == 1);
    CHECK(mat * mat == mat.scaled(Rat(3)));
}

TEST_CASE("identity diagram acts as the identity matrix") {
    CHECK(action_matrix(WalledDiagram::identity(2, 1), 3) == SparseMat::identity(27));
    CHECK(action_matrix(WalledDiagram::identity(0, 0), 2) == SparseMat::identity(1));
}

TEST_CASE("two generator factorizations give the same action") {
    for (int r = 0; r <= 3; ++r)
        for (int s = 0; r + s <= 3; ++s)
            for (const auto& d : enum_diagrams(r, s)) {
                CHECK(action_matrix(d, 2) == action_matrix_elementary(d, 2));
                CHECK(action_matrix(d, 3) == action_matrix_elementary(d, 3));
            }
}

TEST_CASE("action is multiplicative on 50 seeded random pairs at (2,1), n=3") {
    std::mt19937 rng(1729);
    auto diags = enum_diagrams(2, 1);
    std::uniform_int_distribution<size_t> pick(0, diags.size() - 1);
    for (int trial = 0; trial < 50; ++trial) {
        const auto& a = diags[pick(rng)];
        const auto& b = diags[pick(rng)];
        auto [d, loops] = compose(a, b);
        Rat scale = 1;
        for (int q = 0; q < loops; ++q) scale *= 3;
        CHECK(action_matrix(a, 3) * action_matrix(b, 3) == action_matrix(d, 3).scaled(scale));
    }
}

TEST_CASE("Brauer and hyperalgebra actions commute") {
    CHECK(commuting_actions_check(2, 1, 1));
    CHECK(commuting_actions_check(3, 1, 1));
    CHECK(commuting_actions_check(3, 2, 1));
    CHECK(commuting_actions_check(2, 2, 1));
}

TEST_CASE("double centralizer at (3,1,1)") {
    auto rep = double_centralizer_check(3, 1, 1);
    CHECK(rep.hypothesis);
    CHECK(rep.d1 == 2);
    CHECK(rep.d2 == 65);
    CHECK(rep.d3 == 2);
    CHECK(rep.d4 == 65);
    CHECK(rep.centralizer_match);
}

TEST_CASE("double centralizer at (3,2,1) and the centralizer realization") {
    auto rep = double_centralizer_check(3, 2, 1);
    CHECK(rep.hypothesis);
    CHECK(rep.d1 == 6);
    CHECK(rep.d2 == 270);
    CHECK(rep.d3 == 6);
    CHECK(rep.d4 == 270);
    CHECK(rep.centralizer_match);
    CHECK(build_rational_centralizer(3, 2, 1).dim == 270);
    CHECK(build_rational_centralizer(2, 1, 0).dim == 4);  // trivial Brauer algebra
}

TEST_CASE("action faithful of rank (r+s)! when n >= r+s") {
    for (auto [n, r, s] : {std::tuple{2, 1, 1}, {3, 1, 1}, {3, 2, 1}}) {
        std::vector<SparseMat> mats;
        for (const auto& d : enum_diagrams(r, s)) mats.push_back(action_matrix(d, n));
        long long fact = 1;
        for (int q = 2; q <= r + s; ++q) fact *= q;
        CHECK(rank(mats) == fact);
    }
}

TEST_CASE("diagram serialization round trip") {
    auto c = WalledDiagram::contraction(2, 1, 2, 1);
    CHECK(diagram_str(c) == "t1-b1, t2-t-1, b2-b-1");
    CHECK(parse_diagram(2, 1, diagram_str(c)) == c);
    for (const auto& d : enum_diagrams(2, 2)) CHECK(parse_diagram(2, 2, diagram_str(d)) == d);
    CHECK_THROWS(parse_diagram(1, 1, "t1-b1"));            // incomplete matching
    CHECK_THROWS(parse_diagram(1, 1, "t1-t-1, b1-t-1"));   // repeated vertex
    CHECK_THROWS(parse_diagram(1, 1, "t1-b-1, t-1-b1"));   // vertical across the wall
    CHECK_THROWS(parse_diagram(1, 1, "t2-b2, t-1-b-1"));   // label out of range
}

TEST_CASE("flip is an anti-involution") {
    auto diags = enum_diagrams(2, 1);
    for (const auto& a : diags) {
        CHECK(flip(flip(a)) == a);
        for (const auto& b : diags) {
            auto [ab, l1] = compose(a, b);
            auto [ba, l2] = compose(flip(b), flip(a));
            CHECK(flip(ab) == ba);
            CHECK(l1 == l2);
        }
    }
}
