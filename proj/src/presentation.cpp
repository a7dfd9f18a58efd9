#include "ratschur/presentation.hpp"

#include <cstdlib>
#include <sstream>

#include "ratschur/linalg.hpp"
#include "ratschur/schur.hpp"
#include "ratschur/tableaux.hpp"

namespace ratschur {

bool RelationReport::all_hold() const {
    for (const auto& c : checks)
        if (!c.holds()) return false;
    return true;
}

namespace {

std::string pair_label(int i, int j) {
    std::ostringstream os;
    os << "i=" << i << ",j=" << j;
    return os.str();
}

void witness(RelationCheck& c, const SparseMat& m, const std::string& label) {
    ++c.witnesses;
    if (!m.is_zero()) c.failing.push_back(label);
}

/// Relations (a)-(g'): shared between the ordinary and rational checks.
/// H eigenvalues lie in [lo, hi]; (f) requires sum H_i = trace_target.
RelationReport check_relations(const GlGenerators& g, int lo, int hi, int trace_target,
                               const char* last_id) {
    const int n = g.space.n;
    const int k = static_cast<int>(g.space.dim());
    const SparseMat id = SparseMat::identity(k);

    RelationReport rep;
    rep.n = n;
    rep.r = g.space.r;
    rep.s = g.space.s;

    RelationCheck a{"a"};
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            witness(a, commutator(g.H[i], g.H[j]), pair_label(i + 1, j + 1));

    RelationCheck b{"b"};
    for (int i = 0; i < n - 1; ++i)
        for (int j = 0; j < n - 1; ++j) {
            SparseMat lhs = commutator(g.e[i], g.f[j]);
            if (i == j) lhs = lhs - (g.H[i] - g.H[i + 1]);
            witness(b, lhs, pair_label(i + 1, j + 1));
        }

    RelationCheck c{"c"};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n - 1; ++j) {
            const int pairing = (i == j ? 1 : 0) - (i == j + 1 ? 1 : 0);  // (eps_i, alpha_j)
            witness(c, commutator(g.H[i], g.e[j]) - g.e[j].scaled(Rat(pairing)),
                    pair_label(i + 1, j + 1) + ",e");
            witness(c, commutator(g.H[i], g.f[j]) - g.f[j].scaled(Rat(-pairing)),
                    pair_label(i + 1, j + 1) + ",f");
        }

    RelationCheck d{"d"};
    auto serre = [](const SparseMat& x, const SparseMat& y) {
        return x * x * y - (x * y * x).scaled(Rat(2)) + y * x * x;
    };
    for (int i = 0; i < n - 1; ++i)
        for (int j = 0; j < n - 1; ++j) {
            if (std::abs(i - j) != 1) continue;
            witness(d, serre(g.e[i], g.e[j]), pair_label(i + 1, j + 1) + ",e");
            witness(d, serre(g.f[i], g.f[j]), pair_label(i + 1, j + 1) + ",f");
        }

    RelationCheck e{"e"};
    for (int i = 0; i < n - 1; ++i)
        for (int j = i; j < n - 1; ++j) {
            if (std::abs(i - j) == 1) continue;
            witness(e, commutator(g.e[i], g.e[j]), pair_label(i + 1, j + 1) + ",e");
            witness(e, commutator(g.f[i], g.f[j]), pair_label(i + 1, j + 1) + ",f");
        }

    RelationCheck f{"f"};
    SparseMat total(k, k);
    for (const auto& h : g.H) total = total + h;
    witness(f, total - id.scaled(Rat(trace_target)), "sum");

    RelationCheck last{last_id};
    for (int i = 0; i < n; ++i) {
        SparseMat prod = id;
        for (int q = lo; q <= hi; ++q) prod = prod * (g.H[i] - id.scaled(Rat(q)));
        witness(last, prod, pair_label(i + 1, i + 1));
    }

    rep.checks = {a, b, c, d, e, f, last};
    return rep;
}

}  // namespace

RelationReport check_ordinary_relations(int n, int d) {
    return check_relations(mixed_generator_matrices(n, d, 0), 0, d, d, "g");
}

RelationReport check_rational_relations(int n, int r, int s) {
    return check_relations(mixed_generator_matrices(n, r, s), -s, r, r - s, "g'");
}

bool semisimple_dimension_audit(int n, int r, int s) {
    Int expected = 0;
    for (const auto& e : rational_weyl_data(n, r, s)) expected += e.dim * e.dim;
    return Int(build_rational_envelope(n, r, s).dim) == expected;
}

SparseMat matrix_binomial(const SparseMat& h, int k) {
    SparseMat out = SparseMat::identity(h.nrows());
    Rat denom(1);
    for (int q = 0; q < k; ++q) {
        out = out * (h - SparseMat::identity(h.nrows()).scaled(Rat(q)));
        denom *= q + 1;
    }
    return out.scaled(1 / denom);
}

SparseMat weight_projector(const GlGenerators& gens, const Weight& mu) {
    if (static_cast<int>(mu.size()) != gens.space.n)
        throw std::invalid_argument("weight length does not match n");
    SparseMat out = SparseMat::identity(static_cast<int>(gens.space.dim()));
    for (size_t i = 0; i < mu.size(); ++i) out = out * matrix_binomial(gens.H[i], mu[i]);
    return out;
}

}  // namespace ratschur
