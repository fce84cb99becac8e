#pragma once

// The six colored operations and their inverses.
//
// Everything that attaches a standard block goes through glue(): cut a hole
// in each side, identify the boundary facets pairwise and keep the rest. The
// direct rewrites (truncate, compress_facet, dehn, recolor) are local edits of
// the vertex list; tests check that both routes agree.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "coloring.hpp"
#include "locus.hpp"

namespace scw {

using Matching = std::vector<std::pair<int, int>>;

// The block consumed by an operation. Forward steps satisfy
// result = glue(input, locus, block, block_locus, matching); inverse steps
// (compressions) satisfy input = glue(result, ...).
struct Step {
    std::string op; // sharp_v | sharp_e | sharp_eve | sharp_color | natural
    bool inverse = false;
    Locus locus;
    Colored block;
    Locus block_locus;
    Matching matching; // (facet of the base, facet of the block)
};

struct Outcome {
    Colored result;
    bool still_3_connected = true;
    int dV = 0, dE = 0, dF = 0;
    Step step; // block consumed, when the operation has one
};

namespace detail {

struct UnionFind {
    std::vector<int> up;
    explicit UnionFind(int n) : up(n) { std::iota(up.begin(), up.end(), 0); }
    int find(int x) { return up[x] == x ? x : up[x] = find(up[x]); }
    void unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a != b) up[std::max(a, b)] = std::min(a, b);
    }
};

inline Outcome make_outcome(const Colored& in, Colored out)
{
    Outcome o;
    o.dV = out.V() - in.V();
    o.dE = out.E() - in.E();
    o.dF = out.F() - in.F();
    o.still_3_connected = out.p.three_connected();
    o.result = std::move(out);
    return o;
}

inline Polytope make_merged(int n, std::vector<Triple> tris)
{
    try {
        return Polytope::make(n, std::move(tris));
    } catch (const Error& e) {
        if (e.code() == Err::DuplicateEdgePair) fail(Err::MergedFacetDoubleEdge, "merged facets would share two edges");
        throw;
    }
}

// drop facet `gone` and shift larger ids down
inline std::vector<int> drop_map(int F, int gone)
{
    std::vector<int> m(F);
    for (int f = 0; f < F; ++f) m[f] = f < gone ? f : (f == gone ? -1 : f - 1);
    return m;
}

inline Colored rebuild(int F, const std::vector<Triple>& tris, const Coloring& col, const std::vector<int>& map)
{
    int n = 0;
    for (int x : map) n = std::max(n, x + 1);
    std::vector<Triple> t;
    t.reserve(tris.size());
    for (auto& v : tris) t.push_back({map[v[0]], map[v[1]], map[v[2]]});
    Coloring c(n, 0);
    for (int f = 0; f < F; ++f)
        if (map[f] >= 0) c[map[f]] = col[f];
    return Colored(make_merged(n, std::move(t)), std::move(c));
}

} // namespace detail

struct Glued {
    Colored c;
    std::vector<int> mapP, mapQ; // old facet -> glued facet, -1 if gone
};

// Glue P and Q along the holes of two loci. `pairs` lists boundary facet
// identifications (facet of P, facet of Q); the cyclic correspondence is
// recovered from them, and Q is mirrored if the orientations demand it.
inline Glued glue(const Colored& P, const Locus& lp, const Colored& Q, const Locus& lq, const Matching& pairs)
{
    Hole hp = make_hole(P.p, lp), hq = make_hole(Q.p, lq);
    const int k = static_cast<int>(hp.boundary.size());
    if (k != static_cast<int>(hq.boundary.size())) fail(Err::InvalidAttachment, "hole boundaries differ in length");
    std::set<std::pair<int, int>> want(pairs.begin(), pairs.end());
    int found_s = -1;
    bool mirror = false;
    for (int dir = 0; dir < 2 && found_s < 0; ++dir)
        for (int s = 0; s < k && found_s < 0; ++s) {
            std::set<std::pair<int, int>> used;
            bool ok = true;
            for (int i = 0; i < k && ok; ++i) {
                int j = dir == 0 ? ((s - i) % k + k) % k : (s + i) % k;
                std::pair<int, int> pr{hp.boundary[i], hq.boundary[j]};
                ok = want.count(pr) > 0;
                used.insert(pr);
            }
            if (ok && used == want) {
                found_s = s;
                mirror = dir == 1;
            }
        }
    if (found_s < 0) fail(Err::InvalidAttachment, "matching is not a cyclic correspondence of the hole boundaries");

    const int nP = P.F(), nQ = Q.F();
    detail::UnionFind uf(nP + nQ);
    for (int i = 0; i < k; ++i) {
        int j = !mirror ? ((found_s - i) % k + k) % k : (found_s + i) % k;
        int a = hp.boundary[i], b = hq.boundary[j];
        if (P.col[a] != Q.col[b]) fail(Err::ColorMismatch, "identified facets carry different colors");
        uf.unite(a, nP + b);
    }
    std::vector<char> dropP(P.V(), 0), dropQ(Q.V(), 0);
    for (int v : hp.tris) dropP[v] = 1;
    for (int v : hq.tris) dropQ[v] = 1;
    std::vector<Triple> tris;
    for (int v = 0; v < P.V(); ++v)
        if (!dropP[v]) {
            const Triple& t = P.p.vertex(v);
            tris.push_back({uf.find(t[0]), uf.find(t[1]), uf.find(t[2])});
        }
    for (int v = 0; v < Q.V(); ++v)
        if (!dropQ[v]) {
            const Triple& t = Q.p.vertex(v);
            Triple u{uf.find(nP + t[0]), uf.find(nP + t[1]), uf.find(nP + t[2])};
            if (mirror) std::swap(u[1], u[2]);
            tris.push_back(u);
        }
    std::vector<char> alive(nP + nQ, 0);
    for (auto& t : tris)
        for (int x : t) alive[x] = 1;
    std::vector<int> id(nP + nQ, -1);
    int n = 0;
    for (int x = 0; x < nP + nQ; ++x) {
        int r = uf.find(x);
        if (alive[r] && id[r] < 0) id[r] = n++;
    }
    Glued g;
    g.mapP.assign(nP, -1);
    g.mapQ.assign(nQ, -1);
    Coloring col(n, 0);
    for (int x = 0; x < nP + nQ; ++x) {
        int r = uf.find(x);
        if (id[r] < 0) continue;
        (x < nP ? g.mapP[x] : g.mapQ[x - nP]) = id[r];
        col[id[r]] = x < nP ? P.col[x] : Q.col[x - nP];
    }
    for (auto& t : tris)
        for (int& x : t) x = id[x];
    g.c = Colored(detail::make_merged(n, std::move(tris)), std::move(col));
    return g;
}

// ---- blocks ----

struct Block {
    Colored block;
    Locus locus;       // hole in the block matching the base hole
    Matching matching; // (base facet, block facet)
};

// The standard block for cutting the hole of `l` out of `base` and capping it
// with a facet colored t: the hole's dual triangles plus a cone. For a vertex
// this is a colored simplex, for an edge a 3-prism, for an eve the truncated
// prism, for a facet star the prism over that facet.
inline Block excision_block(const Colored& base, const Locus& l, Color t)
{
    Hole h = make_hole(base.p, l);
    std::map<int, int> loc;
    std::vector<int> order;
    for (int f : h.boundary)
        if (!loc.count(f)) {
            loc[f] = static_cast<int>(order.size());
            order.push_back(f);
        }
    for (int f : h.interior) {
        loc[f] = static_cast<int>(order.size());
        order.push_back(f);
    }
    const int top = static_cast<int>(order.size());
    std::vector<Triple> tris;
    for (int v : h.tris) {
        const Triple& x = base.p.vertex(v);
        tris.push_back({loc[x[0]], loc[x[2]], loc[x[1]]}); // mirrored: the block sees the hole from inside
    }
    const size_t k = h.boundary.size();
    for (size_t j = 0; j < k; ++j) tris.push_back({loc[h.boundary[j]], loc[h.boundary[(j + 1) % k]], top});
    Coloring col(top + 1);
    for (size_t i = 0; i < order.size(); ++i) col[i] = base.col[order[i]];
    col[top] = t;
    Block b;
    b.block = Colored(Polytope::make(top + 1, std::move(tris)), std::move(col));
    b.locus = l;
    for (int& x : b.locus.f) x = loc.at(x);
    for (int f : h.boundary) b.matching.emplace_back(f, loc[f]);
    std::sort(b.matching.begin(), b.matching.end());
    b.matching.erase(std::unique(b.matching.begin(), b.matching.end()), b.matching.end());
    return b;
}

inline const char* excision_op(Locus::Kind k)
{
    switch (k) {
    case Locus::Vertex: return "sharp_v";
    case Locus::Edge: return "sharp_e";
    case Locus::Eve: return "sharp_eve";
    case Locus::Facet: return "sharp_color";
    default: return "?";
    }
}

// the colored quarter ball with lunes (x,y,z) = (0,1,2)
inline Colored oslash_colored(Color x, Color y, Color z) { return Colored(oslash(), {x, y, z}); }

// ---- truncation (cutting a vertex, edge or eve; gluing delta, prism, truncated prism) ----

inline std::vector<Color> cap_colors(const Colored& c, const Hole& h)
{
    std::vector<Color> ok;
    const size_t k = h.boundary.size();
    for (Color t = 1; t < 8; ++t) {
        bool good = true;
        for (size_t j = 0; j < k && good; ++j) good = is_basis(c.col[h.boundary[j]], c.col[h.boundary[(j + 1) % k]], t);
        if (good) ok.push_back(t);
    }
    return ok;
}

// new_color 0 means auto (the smallest valid color)
inline Outcome truncate(const Colored& c, const Locus& l, Color new_color = 0)
{
    if (!c.p.is_simple()) fail(Err::NotSimplePolytope, "truncate needs a simple polytope");
    if (l.kind != Locus::Vertex && l.kind != Locus::Edge && l.kind != Locus::Eve)
        fail(Err::InvalidLocus, "truncate takes a vertex, edge or eve");
    Hole h = make_hole(c.p, l);
    if (l.kind == Locus::Eve && !classify_eve(c, l).excisable) fail(Err::NotExcisable, "eve coloring admits no pentagon");
    auto ok = cap_colors(c, h);
    if (ok.empty()) fail(Err::InvalidNewColor, "no color fits the new facet");
    if (new_color == 0) new_color = ok.front();
    if (std::find(ok.begin(), ok.end(), new_color) == ok.end())
        fail(Err::InvalidNewColor, "color " + std::to_string(new_color) + " breaks independence at the new facet");
    Polytope p = excise_raw(c.p, h);
    Coloring col = c.col;
    col.push_back(new_color);
    Outcome o = detail::make_outcome(c, Colored(std::move(p), std::move(col)));
    // undo: compress the new facet; record the block glued at the same locus
    Block b = excision_block(c, l, new_color);
    o.step = {excision_op(l.kind), false, l, b.block, b.locus, b.matching};
    return o;
}

// ---- recolor ----

inline Outcome recolor(const Colored& c, int f, Color x, bool strict_mode = false)
{
    if (f < 0 || f >= c.F()) fail(Err::InvalidLocus, "facet out of range");
    auto ok = valid_recolors(c, f);
    if (std::find(ok.begin(), ok.end(), x) == ok.end()) fail(Err::InvalidTarget, "target color breaks independence");
    if (strict_mode && (!is_small(c.p, f) || facet_independence(c, f) != 2))
        fail(Err::StrictModeViolation, "coloring change needs a small 2-independent facet");
    Coloring col = c.col;
    col[f] = x;
    Outcome o = detail::make_outcome(c, Colored(c.p, std::move(col)));
    Block b = excision_block(c, Locus::facet(f), x);
    o.step = {"sharp_color", false, Locus::facet(f), b.block, b.locus, b.matching};
    return o;
}

// ---- sharp_v ----

// sigma carrying the colors of vertex v2 of c2 onto those of v1 of c1 (sorted)
inline GL vertex_alignment(const Colored& c1, int v1, const Colored& c2, int v2)
{
    auto cols = [](const Colored& c, int v) {
        const Triple& t = c.p.vertex(v);
        std::array<Color, 3> a{c.col[t[0]], c.col[t[1]], c.col[t[2]]};
        std::sort(a.begin(), a.end());
        return a;
    };
    return GL::mapping(cols(c2, v2), cols(c1, v1));
}

inline Outcome sharp_v(const Colored& c1, const Locus& v1, const Colored& c2, const Locus& v2)
{
    if (v1.kind != Locus::Vertex || v2.kind != Locus::Vertex) fail(Err::InvalidLocus, "sharp_v takes vertices");
    Hole h1 = make_hole(c1.p, v1), h2 = make_hole(c2.p, v2);
    Matching m;
    for (int a : h1.boundary)
        for (int b : h2.boundary)
            if (c1.col[a] == c2.col[b]) m.emplace_back(a, b);
    if (m.size() != 3) fail(Err::ColorMismatch, "vertex colors differ");
    Glued g = glue(c1, v1, c2, v2, m);
    Outcome o;
    o.result = std::move(g.c);
    o.dV = o.result.V() - c1.V() - c2.V();
    o.dE = o.result.E() - c1.E() - c2.E();
    o.dF = o.result.F() - c1.F() - c2.F();
    o.still_3_connected = o.result.p.three_connected();
    return o;
}

// ---- sharp_triangle ----

// color-respecting correspondence of the neighbors of two triangles
inline std::optional<Matching> triangle_matching(const Colored& c1, int t1, const Colored& c2, int t2)
{
    Hole h1 = make_hole(c1.p, Locus::facet(t1)), h2 = make_hole(c2.p, Locus::facet(t2));
    for (int dir = 0; dir < 2; ++dir)
        for (int s = 0; s < 3; ++s) {
            Matching m;
            bool ok = true;
            for (int i = 0; i < 3 && ok; ++i) {
                int j = dir == 0 ? ((s - i) % 3 + 3) % 3 : (s + i) % 3;
                ok = c1.col[h1.boundary[i]] == c2.col[h2.boundary[j]];
                m.emplace_back(h1.boundary[i], h2.boundary[j]);
            }
            if (ok) return m;
        }
    return std::nullopt;
}

inline Outcome sharp_triangle(const Colored& c1, int t1, const Colored& c2, int t2,
                              std::optional<Matching> matching = std::nullopt)
{
    if (t1 < 0 || t1 >= c1.F() || t2 < 0 || t2 >= c2.F()) fail(Err::InvalidLocus, "facet out of range");
    if (c1.p.degree(t1) != 3 || c2.p.degree(t2) != 3) fail(Err::InvalidLocus, "sharp_triangle needs triangular facets");
    if (!matching) matching = triangle_matching(c1, t1, c2, t2);
    if (!matching) fail(Err::NoColorMatchingExists, "neighbor colors of the triangles differ");
    Glued g = glue(c1, Locus::facet(t1), c2, Locus::facet(t2), *matching);
    Outcome o;
    o.result = std::move(g.c);
    o.dV = o.result.V() - c1.V() - c2.V();
    o.dE = o.result.E() - c1.E() - c2.E();
    o.dF = o.result.F() - c1.F() - c2.F();
    o.still_3_connected = o.result.p.three_connected();
    return o;
}

// ---- Dehn surgery ----

inline Outcome dehn(const Colored& c, int A, int B)
{
    const Polytope& p = c.p;
    if (A < 0 || B < 0 || A >= c.F() || B >= c.F() || !p.adjacent(A, B)) fail(Err::InvalidLocus, "not an edge");
    int C = p.third(A, B), D = p.third(B, A);
    if (c.col[C] != c.col[D]) fail(Err::ColorMismatch, "end facets carry different colors");
    if (C == D || p.adjacent(C, D)) fail(Err::EndsAdjacent, "end facets touch");
    if (p.degree(A) < 5 || p.degree(B) < 5) fail(Err::SideTooSmall, "side facets need degree >= 5");
    for (int x : p.cycle(C))
        if (x != A && x != B && p.adjacent(x, D))
            fail(Err::MergedFacetDoubleEdge, "end facets share the neighbor " + std::to_string(x));
    int v1 = p.vertex_of(A, B), v2 = p.vertex_of(B, A);
    std::vector<Triple> tris;
    for (int v = 0; v < p.vertex_count(); ++v) {
        if (v == v1 || v == v2) continue;
        Triple t = p.vertex(v);
        for (int& x : t)
            if (x == D) x = C;
        tris.push_back(t);
    }
    auto map = detail::drop_map(c.F(), D);
    Colored out = detail::rebuild(c.F(), tris, c.col, map);
    Outcome o = detail::make_outcome(c, std::move(out));
    o.step.op = "natural";
    o.step.locus = Locus::edge(A, B);
    o.step.block = oslash_colored(c.col[A], c.col[B], c.col[C]);
    o.step.block_locus = Locus::edge(0, 1);
    o.step.matching = {{A, 0}, {B, 1}, {C, 2}, {D, 2}};
    return o;
}

// Split facet X into two copies across a new edge {A,B}; A,B neighbors of X.
// The copy keeping id X takes the arc from A forward to B; the other copy gets
// the new id F.
inline Outcome dehn_inverse(const Colored& c, int X, int A, int B)
{
    const Polytope& p = c.p;
    for (int x : {X, A, B})
        if (x < 0 || x >= c.F()) fail(Err::InvalidLocus, "facet out of range");
    if (!p.adjacent(X, A) || !p.adjacent(X, B) || A == B) fail(Err::InvalidLocus, "A and B must be distinct neighbors of X");
    if (p.adjacent(A, B)) fail(Err::MergedFacetDoubleEdge, "A and B are already adjacent");
    const auto& n = p.cycle(X);
    const int m = static_cast<int>(n.size());
    int i = static_cast<int>(std::find(n.begin(), n.end(), A) - n.begin());
    int j = static_cast<int>(std::find(n.begin(), n.end(), B) - n.begin());
    int arc = ((j - i) % m + m) % m;
    if (arc < 2 || m - arc < 2) fail(Err::SideTooSmall, "both copies of X need degree >= 3");
    const int D = c.F();
    std::vector<char> toD(p.vertex_count(), 0);
    for (int k = j + 1;; ++k) {
        int kk = k % m;
        toD[p.vertex_of(X, n[kk])] = 1;
        if (kk == i) break;
    }
    std::vector<Triple> tris;
    for (int v = 0; v < p.vertex_count(); ++v) {
        Triple t = p.vertex(v);
        if (toD[v])
            for (int& x : t)
                if (x == X) x = D;
        tris.push_back(t);
    }
    tris.push_back({X, A, B});
    tris.push_back({D, B, A});
    Coloring col = c.col;
    col.push_back(c.col[X]);
    Outcome o = detail::make_outcome(c, Colored(detail::make_merged(D + 1, std::move(tris)), std::move(col)));
    return o;
}

// replay a natural step: rebuild `before` from `after`
inline Colored undo_natural(const Colored& after, const Locus& l, const Colored& block)
{
    if (l.kind != Locus::FacetSplit || l.f.size() != 3) fail(Err::InvalidAttachment, "natural needs a facet_split locus");
    int X = l.f[0], A = l.f[1], B = l.f[2];
    for (int x : l.f)
        if (x < 0 || x >= after.F()) fail(Err::InvalidAttachment, "facet out of range");
    if (block.F() != 3 || block.V() != 2) fail(Err::InvalidAttachment, "natural consumes a quarter ball");
    std::multiset<Color> want{after.col[A], after.col[B], after.col[X]};
    std::multiset<Color> have(block.col.begin(), block.col.end());
    if (want != have) fail(Err::InvalidAttachment, "quarter ball colors do not match");
    return dehn_inverse(after, X, A, B).result;
}

// ---- compression ----

struct Plan {
    enum Kind { Triangle, Square, Pentagon } kind = Triangle;
    int n1 = -1; // square: first axis facet; pentagon: the facet receiving the V_eve
};

namespace detail {

inline bool would_degenerate(const Colored& c, int f)
{
    int d = c.p.degree(f);
    return (d == 3 && c.F() == 4) || (d == 4 && c.F() == 5) || (d == 5 && c.F() == 6);
}

} // namespace detail

// Collapse small facet f into a vertex, an edge (axis n1,n3) or a V_eve in n1.
inline Outcome compress_facet(const Colored& c, int f, const Plan& plan)
{
    const Polytope& p = c.p;
    if (f < 0 || f >= c.F()) fail(Err::InvalidLocus, "facet out of range");
    const int d = p.degree(f);
    const int want = plan.kind == Plan::Triangle ? 3 : plan.kind == Plan::Square ? 4 : 5;
    if (d != want) fail(Err::PlanInvalid, "plan does not fit the facet degree");
    if (detail::would_degenerate(c, f)) fail(Err::WouldDegenerateBlock, "refusing to compress a base block");
    Hole h = make_hole(p, Locus::facet(f));
    std::vector<int> b = h.boundary;
    if (plan.kind != Plan::Triangle) {
        auto it = std::find(b.begin(), b.end(), plan.n1);
        if (it == b.end()) fail(Err::PlanInvalid, "n1 is not a neighbor");
        std::rotate(b.begin(), it, b.end());
    }
    auto col = [&](int x) { return c.col[x]; };
    std::vector<Triple> add;
    Locus after;
    switch (plan.kind) {
    case Plan::Triangle:
        if (!is_basis(col(b[0]), col(b[1]), col(b[2]))) fail(Err::PlanInvalid, "neighbors are not a basis");
        add = {{b[0], b[1], b[2]}};
        after = Locus::vertex(b[0], b[1], b[2]);
        break;
    case Plan::Square: {
        int N1 = b[0], N2 = b[1], N3 = b[2], N4 = b[3];
        if (!is_basis(col(N2), col(N1), col(N3)) || !is_basis(col(N4), col(N1), col(N3)))
            fail(Err::PlanInvalid, "axis colors are not independent");
        if (p.adjacent(N1, N3)) fail(Err::PlanInvalid, "axis facets already adjacent");
        if (p.degree(N2) < 4 || p.degree(N4) < 4) fail(Err::PlanInvalid, "end facets too small");
        add = {{N1, N2, N3}, {N3, N4, N1}};
        after = Locus::edge(N1, N3);
        break;
    }
    case Plan::Pentagon: {
        int N1 = b[0], N2 = b[1], N3 = b[2], N4 = b[3], N5 = b[4];
        if (!is_basis(col(N1), col(N3), col(N4)) || !is_basis(col(N1), col(N2), col(N3)) ||
            !is_basis(col(N1), col(N4), col(N5)))
            fail(Err::PlanInvalid, "fan colors are not independent");
        if (p.degree(N1) < 4) fail(Err::PlanInvalid, "n1 too small");
        if (p.adjacent(N1, N3) || p.adjacent(N1, N4)) fail(Err::PlanInvalid, "n1 already touches the far side");
        if (p.degree(N2) < 4 || p.degree(N5) < 4) fail(Err::PlanInvalid, "flank facets too small");
        add = {{N1, N2, N3}, {N1, N3, N4}, {N1, N4, N5}};
        after = Locus::eve(N1, {N1, N3, N4});
        break;
    }
    }
    std::vector<char> drop(p.vertex_count(), 0);
    for (int v : h.tris) drop[v] = 1;
    std::vector<Triple> tris;
    for (int v = 0; v < p.vertex_count(); ++v)
        if (!drop[v]) tris.push_back(p.vertex(v));
    for (auto& t : add) tris.push_back(t);
    auto map = detail::drop_map(c.F(), f);
    Colored out;
    try {
        out = detail::rebuild(c.F(), tris, c.col, map);
    } catch (const Error& e) {
        fail(Err::PlanInvalid, std::string("compression result invalid: ") + e.what());
    }
    if (!out.p.is_simple()) fail(Err::PlanInvalid, "compression result is not a simple polytope");
    Outcome o = detail::make_outcome(c, std::move(out));
    for (int& x : after.f) x = map[x];
    Block blk = excision_block(o.result, after, c.col[f]);
    o.step = {excision_op(after.kind), true, after, blk.block, blk.locus, blk.matching};
    return o;
}

inline std::vector<Plan> direct_plans(const Colored& c, int f)
{
    Hole h = make_hole(c.p, Locus::facet(f));
    std::vector<Plan> out;
    switch (c.p.degree(f)) {
    case 3: out.push_back({Plan::Triangle, -1}); break;
    case 4:
        out.push_back({Plan::Square, h.boundary[0]});
        out.push_back({Plan::Square, h.boundary[1]});
        break;
    case 5:
        for (int x : h.boundary) out.push_back({Plan::Pentagon, x});
        break;
    default: break;
    }
    return out;
}

inline std::optional<Outcome> try_direct(const Colored& c, int f)
{
    for (const Plan& pl : direct_plans(c, f)) {
        try {
            return compress_facet(c, f, pl);
        } catch (const Error& e) {
            if (e.code() != Err::PlanInvalid && e.code() != Err::WouldDegenerateBlock) throw;
        }
    }
    return std::nullopt;
}

// Compress a 3-independent small facet, clearing the way with at most three
// auxiliary moves (compressing 3-independent triangular neighbors, recoloring
// 2-independent small neighbors). Returns the move sequence.
inline std::vector<Outcome> compress(const Colored& c, int f, int max_aux = 3)
{
    if (f < 0 || f >= c.F() || !is_small(c.p, f)) fail(Err::InvalidLocus, "compress needs a small facet");
    if (facet_independence(c, f) != 3) fail(Err::NotThreeIndependent, "facet is 2-independent");
    if (detail::would_degenerate(c, f)) fail(Err::WouldDegenerateBlock, "refusing to compress a base block");
    struct Node {
        Colored c;
        int f;
        std::vector<Outcome> moves;
    };
    std::vector<Node> layer{{c, f, {}}};
    for (int depth = 0; depth <= max_aux; ++depth) {
        for (Node& n : layer)
            if (auto o = try_direct(n.c, n.f)) {
                n.moves.push_back(std::move(*o));
                return n.moves;
            }
        if (depth == max_aux) break;
        std::vector<Node> next;
        for (Node& n : layer) {
            for (int g : n.c.p.cycle(n.f)) {
                if (!is_small(n.c.p, g)) continue;
                if (n.c.p.degree(g) == 3 && facet_independence(n.c, g) == 3 && !detail::would_degenerate(n.c, g)) {
                    try {
                        Outcome o = compress_facet(n.c, g, {Plan::Triangle, -1});
                        int nf = n.f > g ? n.f - 1 : n.f;
                        if (is_small(o.result.p, nf) && facet_independence(o.result, nf) == 3 &&
                            !detail::would_degenerate(o.result, nf)) {
                            Node m{o.result, nf, n.moves};
                            m.moves.push_back(std::move(o));
                            next.push_back(std::move(m));
                        }
                    } catch (const Error& e) {
                        if (e.code() != Err::PlanInvalid) throw;
                    }
                }
                if (facet_independence(n.c, g) == 2) {
                    for (Color x : valid_recolors(n.c, g)) {
                        if (x == n.c.col[g]) continue;
                        Outcome o = recolor(n.c, g, x, true);
                        if (facet_independence(o.result, n.f) != 3) continue;
                        Node m{o.result, n.f, n.moves};
                        m.moves.push_back(std::move(o));
                        next.push_back(std::move(m));
                    }
                }
            }
        }
        layer = std::move(next);
        if (layer.empty()) break;
    }
    fail(Err::SearchExhausted, "no compression found for facet " + std::to_string(f));
}

// ---- 3-cuts ----

struct Cut {
    int a = -1, b = -1, c = -1;
};

namespace detail {

// dual triangles on the side of the cycle a->b->c that contains vertex_of(a,b)
inline std::vector<char> cut_side(const Polytope& p, const Cut& k)
{
    auto is_cut = [&](int x, int y) {
        auto e = std::minmax(x, y);
        for (auto f : {std::minmax(k.a, k.b), std::minmax(k.b, k.c), std::minmax(k.a, k.c)})
            if (e == f) return true;
        return false;
    };
    std::vector<char> side(p.vertex_count(), 0);
    int s = p.vertex_of(k.a, k.b);
    std::vector<int> st{s};
    side[s] = 1;
    while (!st.empty()) {
        int v = st.back();
        st.pop_back();
        const Triple& t = p.vertex(v);
        for (int i = 0; i < 3; ++i) {
            int x = t[i], y = t[(i + 1) % 3];
            if (is_cut(x, y)) continue;
            int w = p.vertex_of(y, x);
            if (!side[w]) {
                side[w] = 1;
                st.push_back(w);
            }
        }
    }
    return side;
}

inline std::vector<int> interior_facets(const Polytope& p, const Cut& k, const std::vector<char>& side, bool which)
{
    std::set<int> s;
    for (int v = 0; v < p.vertex_count(); ++v)
        if (static_cast<bool>(side[v]) == which)
            for (int x : p.vertex(v))
                if (x != k.a && x != k.b && x != k.c) s.insert(x);
    return {s.begin(), s.end()};
}

} // namespace detail

// A separating cycle of three facets (equivalently three pairwise non-adjacent
// edges cutting the skeleton) with at least two facets on each side. The cut
// around a single triangular facet is not reported; compression handles it.
inline std::vector<Cut> all_three_cuts(const Polytope& p)
{
    std::vector<Cut> out;
    const int F = p.facet_count();
    for (int a = 0; a < F; ++a)
        for (int b = a + 1; b < F; ++b) {
            if (!p.adjacent(a, b)) continue;
            for (int c = b + 1; c < F; ++c) {
                if (!p.adjacent(a, c) || !p.adjacent(b, c) || p.find_vertex(a, b, c) >= 0) continue;
                Cut k{a, b, c};
                auto side = detail::cut_side(p, k);
                if (detail::interior_facets(p, k, side, true).size() >= 2 &&
                    detail::interior_facets(p, k, side, false).size() >= 2)
                    out.push_back(k);
            }
        }
    return out;
}

inline std::optional<Cut> find_three_cut(const Polytope& p)
{
    auto all = all_three_cuts(p);
    if (all.empty()) return std::nullopt;
    return all.front();
}

// the polytope edges crossing a cut: {a,b}, {b,c}, {c,a}
inline std::array<std::pair<int, int>, 3> cut_edges(const Cut& k)
{
    return {std::make_pair(k.a, k.b), std::make_pair(k.b, k.c), std::make_pair(k.a, k.c)};
}

struct Split {
    Colored c1, c2;
    std::string join; // sharp_v or sharp_triangle
    Locus l1, l2;
    Matching matching; // (facet of c1, facet of c2)
};

inline Split split_along_cut(const Colored& c, const Cut& k0)
{
    const Polytope& p = c.p;
    Cut k = k0;
    if (p.find_vertex(k.a, k.b, k.c) >= 0 || !p.adjacent(k.a, k.b) || !p.adjacent(k.b, k.c) || !p.adjacent(k.a, k.c))
        fail(Err::NoCutFound, "not a separating facet cycle");
    auto side = detail::cut_side(p, k);
    // orient the cycle so side 1 holds (a,b),(b,c),(c,a)
    if (!side[p.vertex_of(k.b, k.c)]) fail(Err::NoCutFound, "cut does not separate");
    const bool basis = is_basis(c.col[k.a], c.col[k.b], c.col[k.c]);
    Color cap = 0;
    if (!basis)
        for (Color t = 1; t < 8 && !cap; ++t)
            if (is_basis(t, c.col[k.a], c.col[k.b]) && is_basis(t, c.col[k.b], c.col[k.c]) &&
                is_basis(t, c.col[k.c], c.col[k.a]))
                cap = t;
    Split out;
    out.join = basis ? "sharp_v" : "sharp_triangle";
    for (int part = 0; part < 2; ++part) {
        std::vector<Triple> tris;
        for (int v = 0; v < p.vertex_count(); ++v)
            if (static_cast<bool>(side[v]) == (part == 0)) tris.push_back(p.vertex(v));
        const int T = c.F();
        // the missing region's boundary, oriented as the missing triangles
        std::vector<int> ring = part == 0 ? std::vector<int>{k.a, k.c, k.b} : std::vector<int>{k.a, k.b, k.c};
        if (basis) tris.push_back({ring[0], ring[1], ring[2]});
        else
            for (int j = 0; j < 3; ++j) tris.push_back({ring[j], ring[(j + 1) % 3], T});
        std::vector<int> map(T + 1, -1);
        std::vector<char> used(T + 1, 0);
        for (auto& t : tris)
            for (int x : t) used[x] = 1;
        int n = 0;
        for (int f = 0; f <= T; ++f)
            if (used[f]) map[f] = n++;
        Coloring col = c.col;
        col.push_back(cap ? cap : 1);
        Colored piece = detail::rebuild(T + 1, tris, col, map);
        Locus l = basis ? Locus::vertex(map[ring[0]], map[ring[1]], map[ring[2]]) : Locus::facet(map[T]);
        (part == 0 ? out.c1 : out.c2) = std::move(piece);
        (part == 0 ? out.l1 : out.l2) = l;
        if (part == 0)
            for (int x : {k.a, k.b, k.c}) out.matching.emplace_back(map[x], -1 - x);
        else
            for (auto& m : out.matching) m.second = map[-1 - m.second];
    }
    return out;
}

inline Colored join(const Split& s)
{
    return glue(s.c1, s.l1, s.c2, s.l2, s.matching).c;
}

// Glue the step's block onto `base` (the input of a forward step, the result
// of an inverse one).
inline Colored apply_step(const Colored& base, const Step& s)
{
    return glue(base, s.locus, s.block, s.block_locus, s.matching).c;
}

} // namespace scw
