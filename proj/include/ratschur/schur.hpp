#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ratschur/linalg.hpp"
#include "ratschur/tableaux.hpp"
#include "ratschur/tensor.hpp"
#include "ratschur/weights.hpp"

namespace ratschur {

/// Cellular basis element C^lambda_{S,T} = xi_{I(S),l(lambda)} xi_{l(lambda),J(T)}
/// of the Schur algebra S(n,d) realized on E^{tensor d}.
struct Codeterminant {
    Weight lambda;  // partition of d, at most n parts (padded with zeros)
    Tableau S, T;   // semistandard of shape lambda
    SparseMat mat;
};

/// Degree of the ordinary Schur algebra that surjects onto S(n;r,s).
int ordinary_degree(int n, int r, int s);

/// Basis dump format: header line "lambda | S | T" followed by the sparse
/// matrix triplets.
std::string codeterminant_str(const Codeterminant& c);

/// All codeterminants of shape lambda, in (S,T) enumeration order.
std::vector<Codeterminant> codeterminants_for(const Weight& lambda, int n, int d);

/// All codeterminants for lambda running over Lambda^+(n,d), descending lex.
std::vector<Codeterminant> build_ordinary_schur(int n, int d);

/// Streams codeterminants per shape into the callback; avoids holding the
/// whole basis when only ranks are needed. Shapes in descending lex order,
/// optionally filtered.
void for_each_codeterminant(int n, int d,
                            const std::function<bool(const Weight&)>& shape_filter,
                            const std::function<void(const Codeterminant&)>& fn);

/// Rank of the span of all codeterminants = dim S(n,d).
long long schur_dimension(int n, int d);

/// Rank of the span of codeterminants whose shape has a part exceeding the
/// cutoff r+s; the cell ideal defining the rational quotient.
/// Requires d = r+(n-1)s, r+s = cutoff for some r,s >= 0.
int cell_ideal_dim(int n, int d, int cutoff);

struct WeylEntry {
    Weight lambda;  // in Lambda^+(n;r,s)
    Int dim;

    bool operator==(const WeylEntry&) const = default;
};

struct RationalSchurAlgebra {
    int n = 0, r = 0, s = 0;
    std::string realization;  // "quotient" | "envelope" | "centralizer"
    long long dim = 0;
    std::vector<WeylEntry> weyl_data;  // descending lex in lambda
    long long kernel_dim = -1;         // quotient route only
};

/// Weyl data for Lambda^+(n;r,s): each dominant weight with its Weyl module
/// dimension, descending lex.
std::vector<WeylEntry> rational_weyl_data(int n, int r, int s);

/// Cell-ideal quotient of S(n, r+(n-1)s): dim = rank of all codeterminants
/// minus rank of the excluded ones.
RationalSchurAlgebra build_rational_quotient(int n, int r, int s);

/// Envelope of the hyperalgebra generators acting on E^{r,s}.
RationalSchurAlgebra build_rational_envelope(int n, int r, int s);

/// dim S(n;r,s) = dim S(n;s,r) and Weyl tables correspond under
/// lambda -> -reverse(lambda).
bool opp_dimension_check(int n, int r, int s);

}  // namespace ratschur
