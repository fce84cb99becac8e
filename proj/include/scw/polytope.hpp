#pragma once

// Combinatorial simple 3-polytopes stored as oriented vertex triples.
//
// A vertex (a,b,c) lists its three facets counterclockwise seen from outside.
// Every directed pair (a,b) occurs in exactly one triple; the other endpoint
// of edge {a,b} carries (b,a). The neighbor cycle n_0..n_{k-1} of a facet f
// satisfies: vertex i of f is (f, n_i, n_{i-1}).

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace scw {

using Triple = std::array<int, 3>;

inline Triple rotate_to(const Triple& t, int first)
{
    for (int r = 0; r < 3; ++r)
        if (t[r] == first) return {t[r], t[(r + 1) % 3], t[(r + 2) % 3]};
    return t;
}

// rotation with the smallest facet first
inline Triple normalized(const Triple& t)
{
    return rotate_to(t, std::min({t[0], t[1], t[2]}));
}

struct PolytopeStats {
    int V = 0, E = 0, F = 0;
    std::array<int, 4> h{};
    std::vector<int> degrees; // sorted ascending
};

class Polytope {
public:
    Polytope() = default;

    // validate_complex. Throws Error on malformed or non-spherical input.
    static Polytope make(int facet_count, std::vector<Triple> verts, bool require_simple = false)
    {
        Polytope p;
        p.nf_ = facet_count;
        p.verts_ = std::move(verts);
        p.build();
        if (require_simple && !p.simple_) fail(Err::NotSimplePolytope, "complex is not a simple polytope");
        return p;
    }

    int facet_count() const { return nf_; }
    int vertex_count() const { return static_cast<int>(verts_.size()); }
    int edge_count() const { return static_cast<int>(verts_.size()) * 3 / 2; }
    const std::vector<Triple>& vertices() const { return verts_; }
    const Triple& vertex(int v) const { return verts_[v]; }

    const std::vector<int>& cycle(int f) const { return cycles_[f]; }
    int degree(int f) const { return static_cast<int>(cycles_[f].size()); }
    bool is_simple() const { return simple_; }
    bool is_sphere() const { return true; } // enforced by make()
    bool three_connected() const { return conn3_; }

    // vertex carrying the directed pair (a,b), or -1
    int vertex_of(int a, int b) const
    {
        if (a < 0 || b < 0 || a >= nf_ || b >= nf_) return -1;
        return dir_[a * nf_ + b];
    }
    bool adjacent(int a, int b) const { return vertex_of(a, b) >= 0; }

    // z such that (a,b,z) is a rotation of a vertex triple
    int third(int a, int b) const
    {
        int v = vertex_of(a, b);
        if (v < 0) return -1;
        Triple t = rotate_to(verts_[v], a);
        return t[2];
    }

    // index of the vertex whose facet set is {a,b,c}, or -1
    int find_vertex(int a, int b, int c) const
    {
        int v = vertex_of(a, b);
        if (v >= 0 && rotate_to(verts_[v], a)[2] == c) return v;
        v = vertex_of(b, a);
        if (v >= 0 && rotate_to(verts_[v], b)[2] == c) return v;
        return -1;
    }

    // unordered edges as (a<b), sorted
    std::vector<std::pair<int, int>> edges() const
    {
        std::vector<std::pair<int, int>> e;
        for (int a = 0; a < nf_; ++a)
            for (int b = a + 1; b < nf_; ++b)
                if (adjacent(a, b)) e.emplace_back(a, b);
        return e;
    }

    // vertices of the skeleton adjacent to v (via its three edges)
    std::array<int, 3> vertex_neighbors(int v) const
    {
        const Triple& t = verts_[v];
        std::array<int, 3> r{};
        for (int i = 0; i < 3; ++i) r[i] = vertex_of(t[(i + 1) % 3], t[i]);
        return r;
    }

    PolytopeStats stats() const
    {
        if (!simple_) fail(Err::NotSimplePolytope, "stats needs a simple polytope");
        PolytopeStats s;
        s.V = vertex_count();
        s.E = edge_count();
        s.F = nf_;
        // h_k = sum_i (-1)^(k-i) C(3-i, k-i) f_{i-1}, f = (1, F, E, V)
        const int f[4] = {1, s.F, s.E, s.V};
        static const int C[4][4] = {{1, 0, 0, 0}, {1, 1, 0, 0}, {1, 2, 1, 0}, {1, 3, 3, 1}};
        for (int k = 0; k < 4; ++k) {
            int h = 0;
            for (int i = 0; i <= k; ++i) {
                int term = C[3 - i][k - i] * f[i];
                h += ((k - i) % 2 ? -term : term);
            }
            s.h[k] = h;
        }
        for (int x = 0; x < nf_; ++x) s.degrees.push_back(degree(x));
        std::sort(s.degrees.begin(), s.degrees.end());
        return s;
    }

    // Same map with every orientation reversed.
    Polytope mirrored() const
    {
        std::vector<Triple> t;
        t.reserve(verts_.size());
        for (auto& v : verts_) t.push_back({v[0], v[2], v[1]});
        return make(nf_, std::move(t));
    }

    // Rename facets by perm (old -> new, a bijection onto 0..F-1).
    Polytope relabeled(const std::vector<int>& perm) const
    {
        std::vector<Triple> t;
        t.reserve(verts_.size());
        for (auto& v : verts_) t.push_back({perm[v[0]], perm[v[1]], perm[v[2]]});
        return make(nf_, std::move(t));
    }

    friend bool operator==(const Polytope& a, const Polytope& b)
    {
        return a.nf_ == b.nf_ && a.verts_ == b.verts_;
    }

private:
    void build()
    {
        if (nf_ < 1) fail(Err::Malformed, "facet count must be positive");
        for (auto& t : verts_) {
            for (int x : t)
                if (x < 0 || x >= nf_) fail(Err::Malformed, "facet id out of range");
            if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) fail(Err::Malformed, "repeated facet in a vertex");
        }
        // unordered pair multiplicities first: they tell a duplicated edge from a torn surface
        std::vector<int> pairs(static_cast<size_t>(nf_) * nf_, 0);
        for (auto& t : verts_)
            for (int i = 0; i < 3; ++i) {
                int a = std::min(t[i], t[(i + 1) % 3]), b = std::max(t[i], t[(i + 1) % 3]);
                ++pairs[a * nf_ + b];
            }
        for (int a = 0; a < nf_; ++a)
            for (int b = a + 1; b < nf_; ++b) {
                int c = pairs[a * nf_ + b];
                if (c == 0 || c == 2) continue;
                if (c % 2 == 0) fail(Err::DuplicateEdgePair, "facets " + std::to_string(a) + "," + std::to_string(b) + " share more than one edge");
                fail(Err::NonSphere, "facet pair " + std::to_string(a) + "," + std::to_string(b) + " is not a closed edge");
            }
        dir_.assign(static_cast<size_t>(nf_) * nf_, -1);
        for (int v = 0; v < static_cast<int>(verts_.size()); ++v) {
            const Triple& t = verts_[v];
            for (int i = 0; i < 3; ++i) {
                int& slot = dir_[t[i] * nf_ + t[(i + 1) % 3]];
                if (slot >= 0) fail(Err::InconsistentOrientation, "directed pair repeated");
                slot = v;
            }
        }
        // facial walks
        std::vector<int> count(nf_, 0);
        for (auto& t : verts_)
            for (int x : t) ++count[x];
        cycles_.assign(nf_, {});
        for (int f = 0; f < nf_; ++f) {
            if (count[f] == 0) fail(Err::NonSphere, "facet " + std::to_string(f) + " has no vertex");
            int start = -1;
            for (int v = 0; v < static_cast<int>(verts_.size()) && start < 0; ++v)
                for (int x : verts_[v])
                    if (x == f) start = v;
            Triple t = rotate_to(verts_[start], f);
            int n0 = t[1];
            std::vector<int>& cyc = cycles_[f];
            int n = n0;
            do {
                cyc.push_back(n);
                if (static_cast<int>(cyc.size()) > count[f]) fail(Err::NonSphere, "facial walk does not close");
                n = third(n, f);
            } while (n != n0);
            if (static_cast<int>(cyc.size()) != count[f]) fail(Err::NonSphere, "facet boundary is not a single cycle");
        }
        // connectivity and Euler characteristic
        const int V = vertex_count();
        std::vector<char> seen(V, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : vertex_neighbors(v))
                if (!seen[w]) {
                    seen[w] = 1;
                    ++reached;
                    stack.push_back(w);
                }
        }
        if (reached != V) fail(Err::NonSphere, "complex is disconnected");
        if (V - edge_count() + nf_ != 2) fail(Err::NonSphere, "Euler characteristic is not 2");

        bool deg_ok = true;
        for (int f = 0; f < nf_; ++f)
            if (degree(f) < 3) deg_ok = false;
        conn3_ = compute_three_connected();
        simple_ = deg_ok && conn3_;
    }

    // vertex 3-connectivity of the skeleton: no pair of vertices disconnects it
    bool compute_three_connected() const
    {
        const int V = vertex_count();
        if (V < 4) return false;
        std::vector<char> gone(V, 0), seen(V, 0);
        std::vector<int> stack;
        for (int x = 0; x < V; ++x)
            for (int y = x + 1; y < V; ++y) {
                gone.assign(V, 0);
                gone[x] = gone[y] = 1;
                seen.assign(V, 0);
                int s = 0;
                while (gone[s]) ++s;
                stack.assign(1, s);
                seen[s] = 1;
                int reached = 1;
                while (!stack.empty()) {
                    int v = stack.back();
                    stack.pop_back();
                    for (int w : vertex_neighbors(v))
                        if (!gone[w] && !seen[w]) {
                            seen[w] = 1;
                            ++reached;
                            stack.push_back(w);
                        }
                }
                if (reached != V - 2) return false;
            }
        return true;
    }

    int nf_ = 0;
    std::vector<Triple> verts_;
    std::vector<int> dir_;
    std::vector<std::vector<int>> cycles_;
    bool simple_ = false;
    bool conn3_ = false;
};

// ---- builders ----

inline Polytope simplex3()
{
    return Polytope::make(4, {{0, 2, 1}, {0, 1, 3}, {0, 3, 2}, {1, 2, 3}});
}

// facets: 0 = top, 1 = bottom, 2..m+1 = sides in cyclic order
inline Polytope prism(int m)
{
    if (m < 3) fail(Err::InvalidArgument, "prism needs m >= 3");
    std::vector<Triple> v;
    for (int i = 0; i < m; ++i) {
        int s = 2 + i, sp = 2 + (i + m - 1) % m;
        v.push_back({0, s, sp});
        v.push_back({1, sp, s});
    }
    return Polytope::make(m + 2, std::move(v));
}

inline Polytope oslash()
{
    return Polytope::make(3, {{0, 1, 2}, {0, 2, 1}});
}

} // namespace scw
