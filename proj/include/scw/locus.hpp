#pragma once

// Loci (vertex, edge, V_eve, facet) and the dual disks ("holes") they cut out.

#include <algorithm>
#include <string>
#include <vector>

#include "polytope.hpp"

namespace scw {

struct Locus {
    enum Kind { Vertex, Edge, Eve, Facet, FacetSplit };
    Kind kind = Vertex;
    // Vertex: three facets; Edge: A,B; Eve: containing facet then the apex's
    // three facets; Facet: one facet; FacetSplit: facet X then sides A,B.
    std::vector<int> f;

    static Locus vertex(int a, int b, int c) { return {Vertex, {a, b, c}}; }
    static Locus vertex(const Triple& t) { return {Vertex, {t[0], t[1], t[2]}}; }
    static Locus edge(int a, int b) { return {Edge, {a, b}}; }
    static Locus eve(int facet, const Triple& apex) { return {Eve, {facet, apex[0], apex[1], apex[2]}}; }
    static Locus facet(int x) { return {Facet, {x}}; }
    static Locus facet_split(int x, int a, int b) { return {FacetSplit, {x, a, b}}; }

    friend bool operator==(const Locus& a, const Locus& b) { return a.kind == b.kind && a.f == b.f; }
};

inline const char* kind_name(Locus::Kind k)
{
    switch (k) {
    case Locus::Vertex: return "vertex";
    case Locus::Edge: return "edge";
    case Locus::Eve: return "eve";
    case Locus::Facet: return "facet";
    case Locus::FacetSplit: return "facet_split";
    }
    return "?";
}

// Triangles of the dual to delete, and the boundary cycle of facets in the
// orientation induced by the deleted triangles.
struct Hole {
    std::vector<int> tris;
    std::vector<int> boundary;
    std::vector<int> interior; // facets disappearing with the hole
};

namespace detail {

inline void check_ids(const Polytope& p, const Locus& l)
{
    for (int x : l.f)
        if (x < 0 || x >= p.facet_count()) fail(Err::InvalidLocus, "facet id out of range");
}

inline int locus_vertex(const Polytope& p, const std::vector<int>& f, size_t off)
{
    int v = p.find_vertex(f[off], f[off + 1], f[off + 2]);
    if (v < 0) fail(Err::InvalidLocus, "no such vertex");
    return v;
}

} // namespace detail

// position i such that vertex i of facet f is (f, n_i, n_{i-1})
inline int apex_index(const Polytope& p, int f, int v)
{
    Triple t = rotate_to(p.vertex(v), f);
    const auto& cyc = p.cycle(f);
    for (size_t i = 0; i < cyc.size(); ++i)
        if (cyc[i] == t[1]) return static_cast<int>(i);
    fail(Err::InvalidLocus, "apex not on facet");
}

inline Hole make_hole(const Polytope& p, const Locus& l)
{
    detail::check_ids(p, l);
    Hole h;
    switch (l.kind) {
    case Locus::Vertex: {
        if (l.f.size() != 3) fail(Err::InvalidLocus, "vertex needs three facets");
        int v = detail::locus_vertex(p, l.f, 0);
        h.tris = {v};
        const Triple& t = p.vertex(v);
        h.boundary = {t[0], t[1], t[2]};
        break;
    }
    case Locus::Edge: {
        if (l.f.size() != 2) fail(Err::InvalidLocus, "edge needs two facets");
        int A = l.f[0], B = l.f[1];
        int v1 = p.vertex_of(A, B), v2 = p.vertex_of(B, A);
        if (v1 < 0 || v2 < 0) fail(Err::InvalidLocus, "facets are not adjacent");
        int C = p.third(A, B), D = p.third(B, A);
        h.tris = {v1, v2};
        h.boundary = {A, D, B, C};
        break;
    }
    case Locus::Eve: {
        if (l.f.size() != 4) fail(Err::InvalidLocus, "eve needs facet and apex");
        int f = l.f[0];
        int v = detail::locus_vertex(p, l.f, 1);
        const Triple& t = p.vertex(v);
        if (t[0] != f && t[1] != f && t[2] != f) fail(Err::InvalidLocus, "apex not on facet");
        const auto& n = p.cycle(f);
        const int k = static_cast<int>(n.size());
        if (k < 5) fail(Err::ConventionViolation, "V_eve must lie in an m-gon with m >= 5");
        int i = apex_index(p, f, v);
        auto at = [&](int j) { return n[((j % k) + k) % k]; };
        h.tris = {p.vertex_of(f, at(i - 1)), v, p.vertex_of(f, at(i + 1))};
        h.boundary = {f, at(i + 1), at(i), at(i - 1), at(i - 2)};
        break;
    }
    case Locus::Facet: {
        if (l.f.size() != 1) fail(Err::InvalidLocus, "facet locus needs one facet");
        int f = l.f[0];
        const auto& n = p.cycle(f);
        const int k = static_cast<int>(n.size());
        for (int i = 0; i < k; ++i) h.tris.push_back(p.vertex_of(f, n[i]));
        h.boundary.push_back(n[0]);
        for (int i = k - 1; i >= 1; --i) h.boundary.push_back(n[i]);
        h.interior = {f};
        break;
    }
    case Locus::FacetSplit:
        fail(Err::InvalidLocus, "facet_split does not cut a hole");
    }
    return h;
}

// Stellar subdivision of the hole: one new facet (id F) coned over the boundary.
inline Polytope excise_raw(const Polytope& p, const Hole& h)
{
    const int t = p.facet_count();
    std::vector<Triple> out;
    std::vector<char> drop(p.vertex_count(), 0);
    for (int v : h.tris) drop[v] = 1;
    for (int v = 0; v < p.vertex_count(); ++v)
        if (!drop[v]) out.push_back(p.vertex(v));
    const size_t k = h.boundary.size();
    for (size_t j = 0; j < k; ++j) out.push_back({h.boundary[j], h.boundary[(j + 1) % k], t});
    return Polytope::make(t + 1, std::move(out));
}

// Cut out a vertex, an edge or a V_eve; the new facet gets id F.
inline Polytope excise(const Polytope& p, const Locus& l)
{
    if (!p.is_simple()) fail(Err::NotSimplePolytope, "excise needs a simple polytope");
    if (l.kind != Locus::Vertex && l.kind != Locus::Edge && l.kind != Locus::Eve)
        fail(Err::InvalidLocus, "excise takes a vertex, edge or eve");
    return excise_raw(p, make_hole(p, l));
}

inline Polytope truncated_prism3()
{
    Polytope p = prism(3);
    return excise(p, Locus::vertex(p.vertex(0)));
}

// every admissible excision locus, in a fixed order
inline std::vector<Locus> excision_loci(const Polytope& p)
{
    std::vector<Locus> out;
    for (int v = 0; v < p.vertex_count(); ++v) out.push_back(Locus::vertex(normalized(p.vertex(v))));
    for (auto [a, b] : p.edges()) out.push_back(Locus::edge(a, b));
    for (int f = 0; f < p.facet_count(); ++f) {
        if (p.degree(f) < 5) continue;
        for (int b : p.cycle(f)) out.push_back(Locus::eve(f, normalized(p.vertex(p.vertex_of(f, b)))));
    }
    return out;
}

} // namespace scw
