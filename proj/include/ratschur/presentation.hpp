#pragma once

#include <string>
#include <vector>

#include "ratschur/tensor.hpp"

namespace ratschur {

/// Outcome of checking one family of defining relations: each witness is one
/// instantiation (a generator index tuple); failing lists the non-zero ones.
struct RelationCheck {
    std::string id;  // "a".."g" or "g'"
    int witnesses = 0;
    std::vector<std::string> failing;

    bool holds() const { return failing.empty(); }
};

struct RelationReport {
    int n = 0;
    int r = 0, s = 0;  // for the ordinary algebra s = 0 and r = d
    std::vector<RelationCheck> checks;

    bool all_hold() const;
};

/// Defining relations of S(n,d) evaluated on E^{tensor d}: (a) Cartan
/// commutativity, (b) [e_i,f_j] = delta_ij (H_j - H_{j+1}), (c) H-e and H-f
/// commutators, (d) Serre relations, (e) distant commutation,
/// (f) sum H_i = d, (g) prod_{q=0}^{d} (H_i - q) = 0.
RelationReport check_ordinary_relations(int n, int d);

/// Relations of S(n;r,s) on E^{r,s} with H'_i the natural H_i action
/// (eigenvalues in [-s, r]): (a)-(f) as above with sum H'_i = r-s, and
/// (g') prod_{q=-s}^{r} (H'_i - q) = 0.
RelationReport check_rational_relations(int n, int r, int s);

/// dim envelope(n;r,s) equals the sum of squared Weyl dimensions over
/// Lambda^+(n;r,s).
bool semisimple_dimension_audit(int n, int r, int s);

/// binom(H, k) = H(H-1)...(H-k+1)/k! as an exact matrix polynomial.
SparseMat matrix_binomial(const SparseMat& h, int k);

/// 1_mu = prod_i binom(H_i, mu_i) on E^{tensor d}.
SparseMat weight_projector(const GlGenerators& gens, const Weight& mu);

}  // namespace ratschur
