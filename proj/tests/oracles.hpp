#pragma once

// Slow, independent reference implementations used only by tests.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "scw/scw.hpp"

namespace oracle {

using namespace scw;

// ---- isomorphism by trying every facet permutation (F <= 8) ----

inline std::set<Triple> oriented_set(const std::vector<Triple>& ts)
{
    std::set<Triple> s;
    for (auto& t : ts) s.insert(normalized(t));
    return s;
}

inline bool brute_isomorphic(const Polytope& a, const Coloring* ca, const Polytope& b, const Coloring* cb)
{
    if (a.facet_count() != b.facet_count() || a.vertex_count() != b.vertex_count()) return false;
    const int F = a.facet_count();
    auto target = oriented_set(b.vertices());
    std::vector<int> perm(F);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (ca) {
            bool ok = true;
            for (int f = 0; f < F && ok; ++f) ok = (*ca)[f] == (*cb)[perm[f]];
            if (!ok) continue;
        }
        std::vector<Triple> img, mir;
        for (auto& t : a.vertices()) {
            img.push_back({perm[t[0]], perm[t[1]], perm[t[2]]});
            mir.push_back({perm[t[0]], perm[t[2]], perm[t[1]]});
        }
        if (oriented_set(img) == target || oriented_set(mir) == target) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// ---- cyclic 3-edge cuts by exhaustive edge-triple search ----

// each cut as the sorted list of its three edges (facet pairs)
inline std::set<std::vector<std::pair<int, int>>> edge_triple_cuts(const Polytope& p, int min_side_vertices)
{
    const int V = p.vertex_count();
    std::vector<std::pair<int, int>> ev; // skeleton edges as vertex pairs
    auto edges = p.edges();
    for (auto [a, b] : edges) ev.emplace_back(p.vertex_of(a, b), p.vertex_of(b, a));
    std::set<std::vector<std::pair<int, int>>> out;
    const int E = static_cast<int>(edges.size());
    for (int i = 0; i < E; ++i)
        for (int j = i + 1; j < E; ++j)
            for (int k = j + 1; k < E; ++k) {
                int ids[3] = {i, j, k};
                std::set<int> ends;
                for (int x : ids) {
                    ends.insert(ev[x].first);
                    ends.insert(ev[x].second);
                }
                if (ends.size() != 6) continue; // pairwise non-adjacent
                // components of the skeleton minus the three edges
                std::vector<std::vector<int>> adj(V);
                for (int e = 0; e < E; ++e) {
                    if (e == i || e == j || e == k) continue;
                    adj[ev[e].first].push_back(ev[e].second);
                    adj[ev[e].second].push_back(ev[e].first);
                }
                std::vector<int> comp(V, -1);
                std::vector<int> sizes;
                for (int s = 0; s < V; ++s) {
                    if (comp[s] >= 0) continue;
                    int id = static_cast<int>(sizes.size());
                    sizes.push_back(0);
                    std::vector<int> st{s};
                    comp[s] = id;
                    while (!st.empty()) {
                        int u = st.back();
                        st.pop_back();
                        ++sizes[id];
                        for (int w : adj[u])
                            if (comp[w] < 0) {
                                comp[w] = id;
                                st.push_back(w);
                            }
                    }
                }
                if (sizes.size() < 2) continue;
                if (*std::min_element(sizes.begin(), sizes.end()) < min_side_vertices) continue;
                std::vector<std::pair<int, int>> cut{edges[i], edges[j], edges[k]};
                std::sort(cut.begin(), cut.end());
                out.insert(cut);
            }
    return out;
}

// ---- section surface by gluing 8 polygon copies ----

struct SurfaceFacts {
    int components = 0;
    int euler_total = 0;
    bool orientable = true;
};

inline SurfaceFacts identification_complex(const std::vector<Color>& c)
{
    const int k = static_cast<int>(c.size());
    // corners: copy g, corner i sits between side i-1 and side i
    std::vector<int> up(8 * k);
    std::iota(up.begin(), up.end(), 0);
    std::function<int(int)> find = [&](int x) { return up[x] == x ? x : up[x] = find(up[x]); };
    auto unite = [&](int a, int b) { up[find(a)] = find(b); };
    auto corner = [&](int g, int i) { return g * k + ((i % k) + k) % k; };
    for (int g = 0; g < 8; ++g)
        for (int i = 0; i < k; ++i) {
            int h = g ^ c[i];
            unite(corner(g, i), corner(h, i));
            unite(corner(g, i + 1), corner(h, i + 1));
        }
    std::set<int> verts;
    for (int x = 0; x < 8 * k; ++x) verts.insert(find(x));
    // sides: side i of g is glued to side i of g^c_i, and c_i != 0, so 8k/2 edges
    const int V = static_cast<int>(verts.size()), E = 4 * k, F = 8;
    SurfaceFacts s;
    s.euler_total = V - E + F;
    // components and orientation propagation across walls
    std::vector<int> orient(8, 0);
    for (int g0 = 0; g0 < 8; ++g0) {
        if (orient[g0]) continue;
        ++s.components;
        orient[g0] = 1;
        std::vector<int> st{g0};
        while (!st.empty()) {
            int g = st.back();
            st.pop_back();
            for (int i = 0; i < k; ++i) {
                int h = g ^ c[i];
                if (!orient[h]) {
                    orient[h] = -orient[g];
                    st.push_back(h);
                } else if (orient[h] == orient[g]) s.orientable = false;
            }
        }
    }
    return s;
}

// ---- cobordism signature as a multiset of color sets ----

inline std::set<std::set<int>> odd_color_sets(const Colored& c)
{
    std::map<std::set<int>, int> mult;
    for (auto& t : c.p.vertices()) ++mult[{c.col[t[0]], c.col[t[1]], c.col[t[2]]}];
    std::set<std::set<int>> odd;
    for (auto& [k, v] : mult)
        if (v % 2) odd.insert(k);
    return odd;
}

// dimension of a span of 28-bit vectors by closing under XOR
inline int span_dimension_by_closure(const std::vector<unsigned long>& gens)
{
    std::set<unsigned long> span{0};
    for (unsigned long g : gens) {
        if (span.count(g)) continue;
        std::vector<unsigned long> add;
        for (unsigned long x : span) add.push_back(x ^ g);
        span.insert(add.begin(), add.end());
    }
    int d = 0;
    while ((1UL << d) < span.size()) ++d;
    return d;
}

// ---- orbits of local color tuples ----

template <size_t N>
int count_orbits(const std::vector<std::array<Color, N>>& tuples,
                 const std::vector<std::function<std::array<Color, N>(const std::array<Color, N>&)>>& extra)
{
    std::set<std::array<Color, N>> all(tuples.begin(), tuples.end()), seen;
    int orbits = 0;
    for (auto& t : all) {
        if (seen.count(t)) continue;
        ++orbits;
        std::vector<std::array<Color, N>> st{t};
        seen.insert(t);
        while (!st.empty()) {
            auto u = st.back();
            st.pop_back();
            std::vector<std::array<Color, N>> nb;
            for (const GL& g : gl_group()) {
                auto w = u;
                for (auto& x : w) x = g(x);
                nb.push_back(w);
            }
            for (auto& f : extra) nb.push_back(f(u));
            for (auto& w : nb)
                if (all.count(w) && !seen.count(w)) {
                    seen.insert(w);
                    st.push_back(w);
                }
        }
    }
    return orbits;
}

// ---- plain GL orbits of labeled colorings (no polytope symmetry) ----

inline int gl_orbits(const std::vector<Coloring>& cols)
{
    std::set<Coloring> seen;
    int n = 0;
    for (auto& c : cols) {
        if (seen.count(c)) continue;
        ++n;
        for (const GL& g : gl_group()) {
            Coloring d = c;
            for (auto& x : d) x = g(x);
            seen.insert(d);
        }
    }
    return n;
}

// ---- independent structural audit of a complex ----

inline bool well_formed(const Colored& c)
{
    const Polytope& p = c.p;
    int sum = 0;
    for (int f = 0; f < p.facet_count(); ++f) {
        auto cyc = p.cycle(f);
        sum += static_cast<int>(cyc.size());
        std::set<int> s(cyc.begin(), cyc.end());
        if (s.size() != cyc.size()) return false;
    }
    if (sum != 2 * p.edge_count() || 3 * p.vertex_count() != 2 * p.edge_count()) return false;
    if (p.vertex_count() - p.edge_count() + p.facet_count() != 2) return false;
    for (auto& t : p.vertices()) {
        int a = c.col[t[0]], b = c.col[t[1]], d = c.col[t[2]];
        if (!a || !b || !d || (a ^ b) == 0 || (a ^ d) == 0 || (b ^ d) == 0 || (a ^ b ^ d) == 0) return false;
    }
    return true;
}

} // namespace oracle
