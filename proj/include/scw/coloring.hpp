#pragma once

// Colored polytopes, GL(3,Z2) orbits, and the local classifications.

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "canonical.hpp"
#include "color.hpp"
#include "locus.hpp"
#include "polytope.hpp"

namespace scw {

using Coloring = std::vector<Color>;

inline bool is_valid_coloring(const Polytope& p, const Coloring& c)
{
    if (static_cast<int>(c.size()) != p.facet_count()) return false;
    for (Color x : c)
        if (!is_color(x)) return false;
    for (auto& t : p.vertices())
        if (!is_basis(c[t[0]], c[t[1]], c[t[2]])) return false;
    return true;
}

struct Colored {
    Polytope p;
    Coloring col;

    Colored() = default;
    Colored(Polytope poly, Coloring c) : p(std::move(poly)), col(std::move(c))
    {
        if (!is_valid_coloring(p, col)) fail(Err::InvalidColoring, "coloring is not independent at every vertex");
    }

    int F() const { return p.facet_count(); }
    int V() const { return p.vertex_count(); }
    int E() const { return p.edge_count(); }
};

inline Colored act(const GL& s, const Colored& c)
{
    Coloring k = c.col;
    for (auto& x : k) x = s(x);
    return Colored(c.p, std::move(k));
}

inline Colored relabeled(const Colored& c, const std::vector<int>& perm)
{
    Coloring k(c.col.size());
    for (size_t f = 0; f < k.size(); ++f) k[perm[f]] = c.col[f];
    return Colored(c.p.relabeled(perm), std::move(k));
}

inline Colored canonical_colored(const Colored& c)
{
    Canonical k = canonical_form(c.p, &c.col, ColorMode::Exact);
    Coloring col(c.F());
    for (int f = 0; f < c.F(); ++f) col[k.relabel[f]] = c.col[f];
    return Colored(Polytope::make(c.F(), k.triples), std::move(col));
}

inline std::optional<std::vector<int>> colored_isomorphism(const Colored& a, const Colored& b)
{
    return isomorphism(a.p, &a.col, b.p, &b.col, true);
}

inline bool same_colored(const Colored& a, const Colored& b) { return colored_isomorphism(a, b).has_value(); }

// GL-class fingerprint: equal iff the colorings agree up to GL and relabeling
inline std::vector<int> gl_class_code(const Colored& c)
{
    return canonical_form(c.p, &c.col, ColorMode::GLNormal).code;
}

inline bool same_gl_class(const Colored& a, const Colored& b) { return gl_class_code(a) == gl_class_code(b); }

// sigma with act(sigma, a) isomorphic to b, if any
inline std::optional<GL> gl_witness(const Colored& a, const Colored& b)
{
    Canonical ka = canonical_form(a.p, &a.col, ColorMode::GLNormal);
    Canonical kb = canonical_form(b.p, &b.col, ColorMode::GLNormal);
    if (ka.code != kb.code) return std::nullopt;
    return kb.sigma.inverse() * ka.sigma;
}

// ---- enumeration ----

// All labeled colorings, by backtracking over facets in degree-descending order.
inline std::vector<Coloring> enumerate_raw(const Polytope& p, size_t limit = 0,
                                           const std::function<std::vector<Color>(int)>& order = {})
{
    const int F = p.facet_count();
    // greedy order: most already-placed neighbors first, then degree, then id
    std::vector<int> seq;
    std::vector<int> placed_nbrs(F, 0);
    std::vector<char> placed(F, 0);
    for (int step = 0; step < F; ++step) {
        int best = -1;
        for (int f = 0; f < F; ++f) {
            if (placed[f]) continue;
            if (best < 0 || placed_nbrs[f] > placed_nbrs[best] ||
                (placed_nbrs[f] == placed_nbrs[best] && p.degree(f) > p.degree(best)))
                best = f;
        }
        placed[best] = 1;
        seq.push_back(best);
        for (int n : p.cycle(best)) ++placed_nbrs[n];
    }
    std::vector<int> pos(F);
    for (int i = 0; i < F; ++i) pos[seq[i]] = i;
    // vertices that become fully colored at step i
    std::vector<std::vector<int>> closing(F);
    for (int v = 0; v < p.vertex_count(); ++v) {
        const Triple& t = p.vertex(v);
        closing[std::max({pos[t[0]], pos[t[1]], pos[t[2]]})].push_back(v);
    }
    std::vector<Coloring> out;
    Coloring c(F, 0);
    std::function<bool(int)> rec = [&](int i) -> bool {
        if (i == F) {
            out.push_back(c);
            return limit && out.size() >= limit;
        }
        int f = seq[i];
        std::vector<Color> cand;
        if (order) cand = order(f);
        else
            for (Color x = 1; x < 8; ++x) cand.push_back(x);
        for (Color x : cand) {
            c[f] = x;
            bool ok = true;
            for (int v : closing[i]) {
                const Triple& t = p.vertex(v);
                if (!is_basis(c[t[0]], c[t[1]], c[t[2]])) {
                    ok = false;
                    break;
                }
            }
            if (ok && rec(i + 1)) return true;
        }
        c[f] = 0;
        return false;
    };
    rec(0);
    return out;
}

// Orbit representatives of `cols` under GL x sym (sym: facet permutations
// old -> new, closed under composition; empty means trivial).
inline std::vector<Coloring> orbit_reps(const std::vector<Coloring>& cols, const std::vector<std::vector<int>>& sym)
{
    std::set<Coloring> seen;
    std::vector<Coloring> reps;
    std::vector<std::vector<int>> group = sym;
    if (group.empty() && !cols.empty()) {
        std::vector<int> id(cols[0].size());
        std::iota(id.begin(), id.end(), 0);
        group.push_back(id);
    }
    for (const Coloring& c : cols) {
        if (seen.count(c)) continue;
        reps.push_back(c);
        for (const auto& g : group)
            for (const GL& s : gl_group()) {
                Coloring d(c.size());
                for (size_t f = 0; f < c.size(); ++f) d[g[f]] = s(c[f]);
                seen.insert(std::move(d));
            }
    }
    return reps;
}

enum class Symmetry { Trivial, Full, Rotations, PrismSides };

// cyclic rotation of the side facets of prism(m), fixing top and bottom
inline std::vector<std::vector<int>> prism_side_rotations(int m)
{
    std::vector<std::vector<int>> g;
    for (int r = 0; r < m; ++r) {
        std::vector<int> perm(m + 2);
        perm[0] = 0;
        perm[1] = 1;
        for (int i = 0; i < m; ++i) perm[2 + i] = 2 + (i + r) % m;
        g.push_back(perm);
    }
    return g;
}

inline std::vector<std::vector<int>> symmetry_group(const Polytope& p, Symmetry s)
{
    switch (s) {
    case Symmetry::Trivial: return {};
    case Symmetry::Full: return automorphisms(p, false);
    case Symmetry::Rotations: return automorphisms(p, true);
    case Symmetry::PrismSides: return prism_side_rotations(p.facet_count() - 2);
    }
    return {};
}

inline std::vector<Coloring> enumerate_colorings(const Polytope& p, Symmetry s,
                                                 const std::function<bool(const Coloring&)>& keep = {})
{
    std::vector<Coloring> all = enumerate_raw(p);
    if (keep) all.erase(std::remove_if(all.begin(), all.end(), [&](const Coloring& c) { return !keep(c); }), all.end());
    return orbit_reps(all, symmetry_group(p, s));
}

// ---- local data ----

inline std::vector<Color> neighbor_colors(const Colored& c, int f)
{
    std::vector<Color> v;
    for (int n : c.p.cycle(f)) v.push_back(c.col[n]);
    return v;
}

// 2 or 3: rank of the colors around f
inline int facet_independence(const Colored& c, int f)
{
    return rank_of(neighbor_colors(c, f));
}

inline bool is_small(const Polytope& p, int f) { return p.degree(f) <= 5; }
inline bool is_big(const Polytope& p, int f) { return p.degree(f) >= 6; }

inline std::vector<Color> valid_recolors(const Colored& c, int f)
{
    std::vector<Color> out;
    const auto& n = c.p.cycle(f);
    const size_t k = n.size();
    for (Color x = 1; x < 8; ++x) {
        bool ok = true;
        for (size_t i = 0; i < k && ok; ++i) ok = is_basis(x, c.col[n[i]], c.col[n[(i + k - 1) % k]]);
        if (ok) out.push_back(x);
    }
    return out;
}

// Edge {A,B} with ends C=third(A,B), D=third(B,A); the type records D+C
// relative to the sides: 1 if D=C, 2 if D=C+A, 3 if D=C+B, 4 if D=C+A+B.
inline int classify_edge_tuple(Color A, Color B, Color C, Color D)
{
    if (!is_basis(A, B, C) || !is_basis(A, B, D)) fail(Err::InvalidColoring, "edge tuple is not locally valid");
    Color d = C ^ D;
    if (d == 0) return 1;
    if (d == A) return 2;
    if (d == B) return 3;
    return 4;
}

inline int classify_edge(const Colored& c, int A, int B)
{
    if (!c.p.adjacent(A, B)) fail(Err::InvalidLocus, "facets are not adjacent");
    return classify_edge_tuple(c.col[A], c.col[B], c.col[c.p.third(A, B)], c.col[c.p.third(B, A)]);
}

// colors b0..b4 of a V_eve boundary (b0 = containing facet); the vertex
// bases are {b0,b1,b2}, {b0,b2,b3}, {b0,b3,b4}
using EveTuple = std::array<Color, 5>;

inline bool eve_tuple_valid(const EveTuple& b)
{
    return is_basis(b[0], b[1], b[2]) && is_basis(b[0], b[2], b[3]) && is_basis(b[0], b[3], b[4]);
}

// a pentagon colored t fits inside the five boundary colors
inline bool eve_tuple_excisable(const EveTuple& b)
{
    for (Color t = 1; t < 8; ++t) {
        bool ok = true;
        for (int j = 0; j < 5 && ok; ++j) ok = is_basis(b[j], b[(j + 1) % 5], t);
        if (ok) return true;
    }
    return false;
}

struct EveType {
    int type = 0; // 1..16
    bool excisable = false;
};

inline EveType classify_eve_tuple(const EveTuple& b)
{
    if (!eve_tuple_valid(b)) fail(Err::InvalidColoring, "eve tuple is not locally valid");
    GL s = GL::mapping({b[0], b[2], b[3]}, {1, 2, 4});
    // after normalization b1 lies outside span{1,2} and b4 outside span{1,4}
    static const Color outs1[4] = {4, 5, 6, 7};
    static const Color outs4[4] = {2, 3, 6, 7};
    int i1 = 0, i4 = 0;
    for (int i = 0; i < 4; ++i) {
        if (s(b[1]) == outs1[i]) i1 = i;
        if (s(b[4]) == outs4[i]) i4 = i;
    }
    return {1 + 4 * i1 + i4, eve_tuple_excisable(b)};
}

inline EveTuple eve_tuple(const Colored& c, const Locus& eve)
{
    if (eve.kind != Locus::Eve) fail(Err::InvalidLocus, "expected an eve locus");
    Hole h = make_hole(c.p, eve);
    EveTuple b;
    for (int j = 0; j < 5; ++j) b[j] = c.col[h.boundary[j]];
    return b;
}

inline EveType classify_eve(const Colored& c, const Locus& eve)
{
    return classify_eve_tuple(eve_tuple(c, eve));
}

// ---- elementary catalog ----

enum class Elementary { Delta0, Prism1, Prism2, Prism3, Prism4, PrismSum, None };

inline const char* elementary_name(Elementary e)
{
    switch (e) {
    case Elementary::Delta0: return "delta_lambda0";
    case Elementary::Prism1: return "prism_lambda1";
    case Elementary::Prism2: return "prism_lambda2";
    case Elementary::Prism3: return "prism_lambda3";
    case Elementary::Prism4: return "prism_lambda4";
    case Elementary::PrismSum: return "prism_sum";
    case Elementary::None: return "none";
    }
    return "none";
}

inline std::optional<Elementary> elementary_from_name(const std::string& s)
{
    for (Elementary e : {Elementary::Delta0, Elementary::Prism1, Elementary::Prism2, Elementary::Prism3,
                         Elementary::Prism4, Elementary::PrismSum})
        if (s == elementary_name(e)) return e;
    return std::nullopt;
}

namespace detail {

// Twisted prism colorings: top 1, sides 2,4,6, bottom = top + one side color.
// Bottom 3 or 5 gives a Klein-bottle section at the 2|3 vertical edge, 7 a torus.
inline Colored twisted_prism(Color bottom) { return Colored(prism(3), {1, bottom, 2, 4, 6}); }

inline const std::pair<Colored, Colored>& klein_pair()
{
    static const std::pair<Colored, Colored> kp = [] {
        Colored a = twisted_prism(3), b = twisted_prism(5);
        auto ca = canonical_form(a.p, &a.col, ColorMode::Exact).code;
        auto cb = canonical_form(b.p, &b.col, ColorMode::Exact).code;
        return ca <= cb ? std::make_pair(a, b) : std::make_pair(b, a);
    }();
    return kp;
}

} // namespace detail

inline Colored catalog(Elementary e)
{
    switch (e) {
    case Elementary::Delta0: return Colored(simplex3(), {1, 2, 4, 7});
    case Elementary::Prism1: return Colored(prism(3), {1, 1, 2, 4, 6});
    case Elementary::Prism2: return detail::klein_pair().first;
    case Elementary::Prism3: return detail::klein_pair().second;
    case Elementary::Prism4: return detail::twisted_prism(7);
    case Elementary::PrismSum: return Colored(prism(3), {7, 7, 1, 2, 4});
    case Elementary::None: break;
    }
    fail(Err::InvalidArgument, "no catalog entry");
}

// the designated vertical edge of the catalog prisms
inline Locus catalog_vertical_edge() { return Locus::edge(2, 3); }

struct ElementaryMatch {
    Elementary type = Elementary::None;
    GL sigma;
};

inline ElementaryMatch elementary_type(const Colored& c)
{
    static const Elementary order[] = {Elementary::Delta0, Elementary::PrismSum, Elementary::Prism1,
                                       Elementary::Prism2, Elementary::Prism3, Elementary::Prism4};
    if (c.F() != 4 && c.F() != 5) return {};
    for (Elementary e : order) {
        Colored k = catalog(e);
        if (k.F() != c.F() || k.V() != c.V()) continue;
        if (auto s = gl_witness(k, c)) return {e, *s};
    }
    return {};
}

} // namespace scw
