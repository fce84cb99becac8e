#pragma once

// Canonical labeling by exhaustive dart traversal. A dart is (vertex, rotation,
// side); from each dart a breadth-first walk numbers facets by first
// appearance, and the lexicographically smallest encoding wins.

#include <optional>
#include <vector>

#include "color.hpp"
#include "polytope.hpp"

namespace scw {

enum class ColorMode {
    None,       // structure only
    Exact,      // structure, then colors as given
    GLNormal,   // structure, then colors moved so the start vertex reads (1,2,4)
};

struct Dart {
    int vertex = 0;
    int rot = 0;
    bool reflected = false;
};

struct Canonical {
    std::vector<int> code;     // F, V, ordered triples in visiting order, then colors
    std::vector<int> relabel;  // old facet id -> canonical id
    std::vector<Triple> triples;
    Dart dart;
    GL sigma;                  // color transform applied (GLNormal only)
};

namespace detail {

inline Triple dart_triple(const Polytope& p, const Dart& d)
{
    const Triple& t = p.vertex(d.vertex);
    int r = d.rot;
    if (!d.reflected) return {t[r], t[(r + 1) % 3], t[(r + 2) % 3]};
    return {t[r], t[(r + 2) % 3], t[(r + 1) % 3]};
}

// Encode from one dart; returns false early once the prefix exceeds `bound`.
inline bool encode_from(const Polytope& p, const std::vector<Color>* colors, ColorMode mode, const Dart& d,
                        const std::vector<int>* bound, Canonical& out)
{
    const int F = p.facet_count(), V = p.vertex_count();
    std::vector<int>& code = out.code;
    code.clear();
    code.reserve(2 + 3 * V + F);
    out.relabel.assign(F, -1);
    out.triples.clear();
    int next = 0;
    bool tight = bound != nullptr; // still equal to the bound so far
    auto emit = [&](int x) {
        size_t i = code.size();
        code.push_back(x);
        if (tight) {
            int b = (*bound)[i];
            if (x > b) return false;
            if (x < b) tight = false;
        }
        return true;
    };
    if (!emit(F) || !emit(V)) return false;

    std::vector<Triple> ord(V);
    std::vector<char> queued(V, 0);
    std::vector<int> queue;
    queue.reserve(V);
    queue.push_back(d.vertex);
    queued[d.vertex] = 1;
    ord[d.vertex] = dart_triple(p, d);
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int u = queue[qi];
        Triple t = ord[u];
        Triple lab;
        for (int i = 0; i < 3; ++i) {
            if (out.relabel[t[i]] < 0) out.relabel[t[i]] = next++;
            lab[i] = out.relabel[t[i]];
            if (!emit(lab[i])) return false;
        }
        out.triples.push_back(lab);
        for (int i = 0; i < 3; ++i) {
            int x = t[i], y = t[(i + 1) % 3];
            int w = p.vertex_of(x, y);
            if (w == u) w = p.vertex_of(y, x);
            if (queued[w]) continue;
            const Triple& wt = p.vertex(w);
            int z = wt[0] + wt[1] + wt[2] - x - y;
            ord[w] = {y, x, z};
            queued[w] = 1;
            queue.push_back(w);
        }
    }
    if (mode != ColorMode::None) {
        GL s;
        if (mode == ColorMode::GLNormal) {
            Triple t0 = dart_triple(p, d);
            s = GL::mapping({(*colors)[t0[0]], (*colors)[t0[1]], (*colors)[t0[2]]}, {1, 2, 4});
        }
        std::vector<int> inv(F);
        for (int f = 0; f < F; ++f) inv[out.relabel[f]] = f;
        for (int i = 0; i < F; ++i)
            if (!emit(s((*colors)[inv[i]]))) return false;
        out.sigma = s;
    }
    out.dart = d;
    return true;
}

} // namespace detail

inline std::vector<Dart> all_darts(const Polytope& p, bool rotations_only = false)
{
    std::vector<Dart> ds;
    for (int v = 0; v < p.vertex_count(); ++v)
        for (int side = 0; side < (rotations_only ? 1 : 2); ++side)
            for (int r = 0; r < 3; ++r) ds.push_back({v, r, side == 1});
    return ds;
}

inline Canonical encode_dart(const Polytope& p, const std::vector<Color>* colors, ColorMode mode, const Dart& d)
{
    Canonical c;
    detail::encode_from(p, colors, mode, d, nullptr, c);
    return c;
}

// Smallest encoding over all darts; ties keep the first dart in
// (vertex, side, rotation) order.
inline Canonical canonical_form(const Polytope& p, const std::vector<Color>* colors = nullptr,
                                ColorMode mode = ColorMode::None, bool rotations_only = false)
{
    if (mode != ColorMode::None && colors == nullptr) fail(Err::InvalidArgument, "colors required");
    Canonical best, cur;
    bool have = false;
    for (const Dart& d : all_darts(p, rotations_only)) {
        if (!detail::encode_from(p, colors, mode, d, have ? &best.code : nullptr, cur)) continue;
        if (!have || cur.code < best.code) {
            std::swap(best, cur);
            have = true;
        }
    }
    return best;
}

// All darts reaching the minimal encoding; each yields a facet map onto the
// canonical labels. Two of them differ by an automorphism.
inline std::vector<Canonical> canonical_darts(const Polytope& p, const std::vector<Color>* colors, ColorMode mode,
                                              bool rotations_only = false)
{
    Canonical best = canonical_form(p, colors, mode, rotations_only);
    std::vector<Canonical> out;
    for (const Dart& d : all_darts(p, rotations_only)) {
        Canonical c = encode_dart(p, colors, mode, d);
        if (c.code == best.code) out.push_back(std::move(c));
    }
    return out;
}

// Facet permutations (as old -> new maps) preserving the map, allowing
// reflections unless rotations_only.
inline std::vector<std::vector<int>> automorphisms(const Polytope& p, bool rotations_only = false)
{
    auto ds = canonical_darts(p, nullptr, ColorMode::None, rotations_only);
    std::vector<std::vector<int>> out;
    const int F = p.facet_count();
    std::vector<int> inv0(F);
    for (int f = 0; f < F; ++f) inv0[ds[0].relabel[f]] = f;
    for (auto& c : ds) {
        std::vector<int> m(F);
        for (int f = 0; f < F; ++f) m[f] = inv0[c.relabel[f]];
        out.push_back(std::move(m));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Facet bijection p1 -> p2 if the (optionally colored) complexes are isomorphic.
inline std::optional<std::vector<int>> isomorphism(const Polytope& p1, const std::vector<Color>* c1,
                                                   const Polytope& p2, const std::vector<Color>* c2,
                                                   bool respect_colors)
{
    if (p1.facet_count() != p2.facet_count() || p1.vertex_count() != p2.vertex_count()) return std::nullopt;
    ColorMode m = respect_colors ? ColorMode::Exact : ColorMode::None;
    Canonical a = canonical_form(p1, c1, m), b = canonical_form(p2, c2, m);
    if (a.code != b.code) return std::nullopt;
    const int F = p1.facet_count();
    std::vector<int> inv(F), map(F);
    for (int f = 0; f < F; ++f) inv[b.relabel[f]] = f;
    for (int f = 0; f < F; ++f) map[f] = inv[a.relabel[f]];
    return map;
}

inline bool is_isomorphic(const Polytope& a, const Polytope& b)
{
    return isomorphism(a, nullptr, b, nullptr, false).has_value();
}

// The canonical representative itself.
inline Polytope canonical_polytope(const Polytope& p)
{
    Canonical c = canonical_form(p);
    return Polytope::make(p.facet_count(), c.triples);
}

} // namespace scw
