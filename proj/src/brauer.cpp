#include "ratschur/brauer.hpp"

#include <algorithm>
#include <numeric>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace ratschur {

namespace {

void check_rs(int r, int s) {
    if (r < 0 || s < 0) throw std::invalid_argument("r and s must be nonnegative");
}

WalledDiagram blank(int r, int s) {
    check_rs(r, s);
    WalledDiagram d;
    d.r = r;
    d.s = s;
    d.match.assign(static_cast<size_t>(2 * (r + s)), -1);
    return d;
}

void link(WalledDiagram& d, int u, int v) {
    d.match[static_cast<size_t>(u)] = v;
    d.match[static_cast<size_t>(v)] = u;
}

}  // namespace

int column_label(const WalledDiagram& d, int col) {
    return col < d.r ? col + 1 : -(col - d.r + 1);
}

WalledDiagram WalledDiagram::identity(int r, int s) {
    WalledDiagram d = blank(r, s);
    for (int c = 0; c < d.m(); ++c) link(d, c, d.m() + c);
    return d;
}

WalledDiagram WalledDiagram::contraction(int r, int s, int i, int j) {
    if (i < 1 || i > r || j < 1 || j > s)
        throw std::invalid_argument("contraction labels out of range");
    WalledDiagram d = identity(r, s);
    const int m = d.m();
    const int a = i - 1, b = r + j - 1;
    link(d, a, b);
    link(d, m + a, m + b);
    return d;
}

WalledDiagram WalledDiagram::permutation(int r, int s, const std::vector<int>& pi) {
    WalledDiagram d = blank(r, s);
    const int m = d.m();
    if (static_cast<int>(pi.size()) != m) throw std::invalid_argument("permutation length mismatch");
    for (int c = 0; c < m; ++c) {
        if (pi[static_cast<size_t>(c)] < 0 || pi[static_cast<size_t>(c)] >= m ||
            (c < r) != (pi[static_cast<size_t>(c)] < r))
            throw std::invalid_argument("permutation crosses the wall");
        link(d, c, m + pi[static_cast<size_t>(c)]);
    }
    if (!d.is_valid()) throw std::invalid_argument("not a permutation");
    return d;
}

WalledDiagram WalledDiagram::transposition(int r, int s, int c) {
    const int m = r + s;
    if (c < 0 || c + 1 >= m || (c < r) != (c + 1 < r))
        throw std::invalid_argument("transposition must stay on one side of the wall");
    std::vector<int> pi(static_cast<size_t>(m));
    std::iota(pi.begin(), pi.end(), 0);
    std::swap(pi[static_cast<size_t>(c)], pi[static_cast<size_t>(c) + 1]);
    return permutation(r, s, pi);
}

bool WalledDiagram::is_valid() const {
    const int m2 = 2 * m();
    if (static_cast<int>(match.size()) != m2) return false;
    for (int v = 0; v < m2; ++v) {
        int w = match[static_cast<size_t>(v)];
        if (w < 0 || w >= m2 || w == v || match[static_cast<size_t>(w)] != v) return false;
        if (w < v) continue;
        const bool same_row = (v < m()) == (w < m());
        const bool vl = v % m() < r, wl = w % m() < r;
        if (same_row ? vl == wl : vl != wl) return false;  // horizontal must cross the wall
    }
    return true;
}

std::vector<WalledDiagram> enum_diagrams(int r, int s) {
    check_rs(r, s);
    const int m = r + s;
    // swap top/bottom on right-of-wall columns of a permutation diagram
    auto fold = [&](int v) {
        if (v % m < r) return v;
        return v < m ? v + m : v - m;
    };
    std::vector<int> pi(static_cast<size_t>(m));
    std::iota(pi.begin(), pi.end(), 0);
    std::vector<WalledDiagram> out;
    do {
        WalledDiagram d = blank(r, s);
        for (int c = 0; c < m; ++c) link(d, fold(c), fold(m + pi[static_cast<size_t>(c)]));
        out.push_back(std::move(d));
    } while (std::next_permutation(pi.begin(), pi.end()));
    return out;
}

std::pair<WalledDiagram, int> compose(const WalledDiagram& d1, const WalledDiagram& d2) {
    if (d1.r != d2.r || d1.s != d2.s) throw std::invalid_argument("compose: shape mismatch");
    const int m = d1.m();
    // combined node ids: d1 vertices 0..2m-1, d2 vertices 2m..4m-1;
    // d1 bottom column c is glued to d2 top column c.
    auto step = [&](int v) {
        return v < 2 * m ? d1.match[static_cast<size_t>(v)]
                         : 2 * m + d2.match[static_cast<size_t>(v) - 2 * static_cast<size_t>(m)];
    };
    auto iface = [&](int v) { return v < 2 * m ? v + m : v - m; };
    auto interior = [&](int v) { return v >= m && v < 3 * m; };

    WalledDiagram out = blank(d1.r, d1.s);
    std::vector<char> seen(static_cast<size_t>(4 * m), 0);
    auto exterior_col = [&](int v) { return v < m ? v : v - 2 * m; };  // result vertex
    for (int u : [&] {
             std::vector<int> starts;
             for (int c = 0; c < m; ++c) starts.push_back(c);
             for (int c = 0; c < m; ++c) starts.push_back(3 * m + c);
             return starts;
         }()) {
        if (out.match[static_cast<size_t>(exterior_col(u))] != -1) continue;
        int v = step(u);
        while (interior(v)) {
            seen[static_cast<size_t>(v)] = 1;
            v = iface(v);
            seen[static_cast<size_t>(v)] = 1;
            v = step(v);
        }
        link(out, exterior_col(u), exterior_col(v));
    }
    int loops = 0;
    for (int w = m; w < 3 * m; ++w) {
        if (seen[static_cast<size_t>(w)]) continue;
        ++loops;
        int v = w;
        do {
            seen[static_cast<size_t>(v)] = 1;
            v = iface(v);
            seen[static_cast<size_t>(v)] = 1;
            v = step(v);
        } while (v != w);
    }
    return {out, loops};
}

WalledDiagram flip(const WalledDiagram& d) {
    WalledDiagram out = blank(d.r, d.s);
    const int m = d.m();
    auto fl = [&](int v) { return v < m ? v + m : v - m; };
    for (int v = 0; v < 2 * m; ++v)
        out.match[static_cast<size_t>(v)] = fl(d.match[static_cast<size_t>(fl(v))]);
    return out;
}

DiagramElement DiagramElement::of(const WalledDiagram& d) {
    DiagramElement e;
    e.r = d.r;
    e.s = d.s;
    e.terms.emplace(d, Poly(Rat(1)));
    return e;
}

void DiagramElement::add_term(const WalledDiagram& d, const Poly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms.emplace(d, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

DiagramElement multiply(const DiagramElement& a, const DiagramElement& b) {
    if (a.r != b.r || a.s != b.s) throw std::invalid_argument("multiply: shape mismatch");
    DiagramElement out;
    out.r = a.r;
    out.s = a.s;
    for (const auto& [da, ca] : a.terms)
        for (const auto& [db, cb] : b.terms) {
            auto [d, loops] = compose(da, db);
            out.add_term(d, ca * cb * Poly::monomial(loops));
        }
    return out;
}

SparseMat right_perm_matrix(const MixedSpace& space, const std::vector<int>& pi) {
    const int m = space.slots();
    if (static_cast<int>(pi.size()) != m) throw std::invalid_argument("permutation length mismatch");
    const long long dim = space.dim();
    SparseMat mat(static_cast<int>(dim), static_cast<int>(dim));
    std::vector<int> b(static_cast<size_t>(m));
    for (long long idx = 0; idx < dim; ++idx) {
        std::vector<int> a = space.decode(idx);
        for (int c = 0; c < m; ++c) b[static_cast<size_t>(pi[static_cast<size_t>(c)])] = a[static_cast<size_t>(c)];
        mat.add(static_cast<int>(space.encode(b)), static_cast<int>(idx), Rat(1));
    }
    return mat;
}

SparseMat contraction_matrix(const MixedSpace& space, int i, int j) {
    if (i < 1 || i > space.r || j < 1 || j > space.s)
        throw std::invalid_argument("contraction labels out of range");
    const int p = i - 1, q = space.r + j - 1;
    const long long dim = space.dim();
    SparseMat mat(static_cast<int>(dim), static_cast<int>(dim));
    for (long long idx = 0; idx < dim; ++idx) {
        std::vector<int> a = space.decode(idx);
        if (a[static_cast<size_t>(p)] != a[static_cast<size_t>(q)]) continue;
        for (int k = 1; k <= space.n; ++k) {
            a[static_cast<size_t>(p)] = a[static_cast<size_t>(q)] = k;
            mat.add(static_cast<int>(space.encode(a)), static_cast<int>(idx), Rat(1));
        }
    }
    return mat;
}

namespace {

struct Factorization {
    std::vector<int> pi, rho;  // side-preserving column permutations
    int k = 0;                 // number of contractions c_{r,-1}, ..., c_{r-k+1,-k}
};

/// Loop-free generator word for a diagram: d = t_pi . (c-chain) . t_rho,
/// with t_pi drawn on top.
Factorization factor_diagram(const WalledDiagram& d) {
    const int r = d.r, m = d.m();
    Factorization f;
    f.pi.assign(static_cast<size_t>(m), -1);
    f.rho.assign(static_cast<size_t>(m), -1);
    // top horizontal pairs go to the chain's pair columns (r-a, r-1+a)
    for (int c = 0; c < r; ++c) {
        int w = d.match[static_cast<size_t>(c)];
        if (w >= m) continue;  // vertical
        ++f.k;
        f.pi[static_cast<size_t>(c)] = r - f.k;
        f.pi[static_cast<size_t>(w)] = r - 1 + f.k;
    }
    int nl = 0, nr = r + f.k;
    for (int c = 0; c < m; ++c)
        if (f.pi[static_cast<size_t>(c)] == -1) f.pi[static_cast<size_t>(c)] = c < r ? nl++ : nr++;
    // bottom horizontal pairs come out of the chain's pair columns
    int b = 0;
    for (int c = 0; c < r; ++c) {
        int w = d.match[static_cast<size_t>(m + c)];
        if (w < m) continue;  // c's partner is a top vertex: vertical edge
        ++b;
        f.rho[static_cast<size_t>(r - b)] = c;
        f.rho[static_cast<size_t>(r - 1 + b)] = w - m;
    }
    // vertical edges pass straight through the chain
    for (int c = 0; c < m; ++c) {
        int w = d.match[static_cast<size_t>(c)];
        if (w < m) continue;
        f.rho[static_cast<size_t>(f.pi[static_cast<size_t>(c)])] = w - m;
    }
    return f;
}

/// Positions of adjacent transpositions tau_{c_1}, ..., tau_{c_L} with
/// pi = tau_{c_L} o ... o tau_{c_1} (bubble sort of pi down to identity).
std::vector<int> adjacent_word(std::vector<int> pi) {
    std::vector<int> swaps;
    bool moved = true;
    while (moved) {
        moved = false;
        for (size_t c = 0; c + 1 < pi.size(); ++c)
            if (pi[c] > pi[c + 1]) {
                std::swap(pi[c], pi[c + 1]);
                swaps.push_back(static_cast<int>(c));
                moved = true;
            }
    }
    return swaps;
}

std::vector<int> adjacent_transposition(int m, int c) {
    std::vector<int> tau(static_cast<size_t>(m));
    std::iota(tau.begin(), tau.end(), 0);
    std::swap(tau[static_cast<size_t>(c)], tau[static_cast<size_t>(c) + 1]);
    return tau;
}

template <typename PermToMatrix>
SparseMat action_via_factorization(const WalledDiagram& d, int n, PermToMatrix&& apply_perm) {
    if (!d.is_valid()) throw std::invalid_argument("invalid diagram");
    MixedSpace space(n, d.r, d.s);
    const WalledDiagram f = flip(d);
    const Factorization fac = factor_diagram(f);
    // right action of t_pi . chain . t_rho is R(t_rho) R(chain) R(t_pi)
    SparseMat mat = apply_perm(space, fac.pi, SparseMat::identity(static_cast<int>(space.dim())));
    for (int a = 1; a <= fac.k; ++a) mat = contraction_matrix(space, d.r - a + 1, a) * mat;
    return apply_perm(space, fac.rho, mat);
}

}  // namespace

SparseMat action_matrix(const WalledDiagram& d, int n) {
    return action_via_factorization(
        d, n, [](const MixedSpace& space, const std::vector<int>& pi, const SparseMat& m) {
            return right_perm_matrix(space, pi) * m;
        });
}

SparseMat action_matrix_elementary(const WalledDiagram& d, int n) {
    return action_via_factorization(
        d, n, [](const MixedSpace& space, const std::vector<int>& pi, SparseMat m) {
            for (int c : adjacent_word(pi))
                m = right_perm_matrix(space, adjacent_transposition(space.slots(), c)) * m;
            return m;
        });
}

std::vector<SparseMat> brauer_generator_matrices(int n, int r, int s) {
    std::vector<SparseMat> out;
    const int m = r + s;
    for (int c = 0; c + 1 < m; ++c) {
        if ((c < r) != (c + 1 < r)) continue;
        out.push_back(action_matrix(WalledDiagram::transposition(r, s, c), n));
    }
    if (r >= 1 && s >= 1)
        out.push_back(action_matrix(WalledDiagram::contraction(r, s, r, 1), n));
    return out;
}

bool commuting_actions_check(int n, int r, int s) {
    const auto gl = mixed_generator_matrices(n, r, s).all();
    const auto br = brauer_generator_matrices(n, r, s);
    for (const auto& g : gl)
        for (const auto& b : br)
            if (!commutator(g, b).is_zero()) return false;
    return true;
}

SwdReport double_centralizer_check(int n, int r, int s) {
    SwdReport rep;
    rep.n = n;
    rep.r = r;
    rep.s = s;
    rep.hypothesis = n >= r + s;

    std::vector<SparseMat> diag_mats;
    for (const auto& d : enum_diagrams(r, s)) diag_mats.push_back(action_matrix(d, n));
    rep.d1 = span_closure(diag_mats, /*with_identity=*/true).dim();

    std::vector<SparseMat> br = brauer_generator_matrices(n, r, s);
    if (br.empty()) br.push_back(action_matrix(WalledDiagram::identity(r, s), n));
    rep.d2 = commutant(br).dim();

    const auto gl = mixed_generator_matrices(n, r, s);
    std::vector<SparseMat> gl_gens = gl.all();
    rep.d3 = commutant(gl_gens).dim();
    rep.d4 = span_closure(gl_gens, /*with_identity=*/true).dim();

    rep.centralizer_match = rep.d2 == rep.d4 && rep.d3 == rep.d1;
    return rep;
}

RationalSchurAlgebra build_rational_centralizer(int n, int r, int s) {
    std::vector<SparseMat> br = brauer_generator_matrices(n, r, s);
    if (br.empty()) br.push_back(action_matrix(WalledDiagram::identity(r, s), n));

    RationalSchurAlgebra a;
    a.n = n;
    a.r = r;
    a.s = s;
    a.realization = "centralizer";
    a.dim = commutant(br).dim();
    a.weyl_data = rational_weyl_data(n, r, s);
    return a;
}

std::string diagram_str(const WalledDiagram& d) {
    const int m = d.m();
    auto name = [&](int v) {
        std::ostringstream os;
        os << (v < m ? 't' : 'b') << column_label(d, v % m);
        return os.str();
    };
    std::ostringstream os;
    bool first = true;
    for (int v = 0; v < 2 * m; ++v) {
        int w = d.match[static_cast<size_t>(v)];
        if (w < v) continue;
        if (!first) os << ", ";
        first = false;
        os << name(v) << '-' << name(w);
    }
    return os.str();
}

WalledDiagram parse_diagram(int r, int s, const std::string& text) {
    WalledDiagram d = blank(r, s);
    const int m = d.m();
    auto vertex = [&](char row, int label) {
        int col;
        if (label > 0) {
            if (label > r) throw std::invalid_argument("diagram label out of range");
            col = label - 1;
        } else if (label < 0) {
            if (-label > s) throw std::invalid_argument("diagram label out of range");
            col = r - label - 1;
        } else {
            throw std::invalid_argument("diagram label may not be zero");
        }
        return row == 't' ? col : m + col;
    };
    static const std::regex edge_re(R"(^\s*([tb])(-?[0-9]+)-([tb])(-?[0-9]+)\s*$)");
    std::istringstream is(text);
    std::string part;
    while (std::getline(is, part, ',')) {
        std::smatch match;
        if (!std::regex_match(part, match, edge_re))
            throw std::invalid_argument("bad diagram edge: " + part);
        int u = vertex(match[1].str()[0], std::stoi(match[2].str()));
        int v = vertex(match[3].str()[0], std::stoi(match[4].str()));
        if (u == v || d.match[static_cast<size_t>(u)] != -1 || d.match[static_cast<size_t>(v)] != -1)
            throw std::invalid_argument("repeated vertex in diagram: " + text);
        link(d, u, v);
    }
    if (!d.is_valid()) throw std::invalid_argument("not a valid walled diagram: " + text);
    return d;
}

}  // namespace ratschur
