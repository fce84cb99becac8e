#pragma once

// The cell structure of M(P, lambda): a face with incident facet colors
// spanning G contributes one cell per coset of G in (Z2)^3.

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "coloring.hpp"

namespace scw {

// dense GF(2) matrix, rows packed in 64-bit words
class BitMatrix {
public:
    BitMatrix(int rows, int cols) : rows_(rows), cols_(cols), words_((cols + 63) / 64), d_(size_t(rows) * words_, 0) {}
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    void flip(int r, int c) { d_[size_t(r) * words_ + c / 64] ^= std::uint64_t(1) << (c % 64); }
    bool get(int r, int c) const { return d_[size_t(r) * words_ + c / 64] >> (c % 64) & 1; }

    int rank() const
    {
        std::vector<std::uint64_t> m = d_;
        int r = 0;
        for (int c = 0; c < cols_ && r < rows_; ++c) {
            const int w = c / 64;
            const std::uint64_t bit = std::uint64_t(1) << (c % 64);
            int piv = -1;
            for (int i = r; i < rows_; ++i)
                if (m[size_t(i) * words_ + w] & bit) {
                    piv = i;
                    break;
                }
            if (piv < 0) continue;
            if (piv != r)
                for (int k = 0; k < words_; ++k) std::swap(m[size_t(piv) * words_ + k], m[size_t(r) * words_ + k]);
            for (int i = 0; i < rows_; ++i)
                if (i != r && (m[size_t(i) * words_ + w] & bit))
                    for (int k = 0; k < words_; ++k) m[size_t(i) * words_ + k] ^= m[size_t(r) * words_ + k];
            ++r;
        }
        return r;
    }

    // this * other over GF(2)
    BitMatrix times(const BitMatrix& o) const
    {
        BitMatrix out(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k)
                if (get(i, k))
                    for (int w = 0; w < o.words_; ++w) out.d_[size_t(i) * out.words_ + w] ^= o.d_[size_t(k) * o.words_ + w];
        return out;
    }

    bool is_zero() const
    {
        for (auto w : d_)
            if (w) return false;
        return true;
    }

private:
    int rows_, cols_, words_;
    std::vector<std::uint64_t> d_;
};

struct CellComplex {
    std::array<int, 4> counts{};
    // boundary[k] maps k-cells to (k-1)-cells, stored as (#(k-1)-cells) x (#k-cells)
    std::vector<BitMatrix> boundary; // index 1..3 used
    int euler() const { return counts[0] - counts[1] + counts[2] - counts[3]; }
};

namespace detail {

// canonical coset representative of g modulo the span mask
inline int coset_rep(int g, unsigned span)
{
    int best = g;
    for (int x = 0; x < 8; ++x)
        if (span >> x & 1) best = std::min(best, g ^ x);
    return best;
}

} // namespace detail

inline CellComplex build_cell_complex(const Colored& c)
{
    const Polytope& p = c.p;
    // 0-cells: one per vertex
    const int nv = p.vertex_count();
    // 1-cells: edges x 2 cosets
    auto edges = p.edges();
    std::map<std::pair<int, int>, int> edge_id;
    for (size_t i = 0; i < edges.size(); ++i) edge_id[edges[i]] = static_cast<int>(i);
    auto ecell = [&](int e, int g) {
        auto [a, b] = edges[e];
        unsigned span = span_mask({c.col[a], c.col[b]});
        int rep = detail::coset_rep(g, span);
        // index among the 2 cosets: order reps
        int idx = 0;
        for (int x = 0; x < rep; ++x)
            if (detail::coset_rep(x, span) == x) ++idx;
        return 2 * e + idx;
    };
    auto fcell = [&](int f, int g) {
        unsigned span = span_mask({c.col[f]});
        int rep = detail::coset_rep(g, span);
        int idx = 0;
        for (int x = 0; x < rep; ++x)
            if (detail::coset_rep(x, span) == x) ++idx;
        return 4 * f + idx;
    };
    const int ne = static_cast<int>(edges.size()), nf = p.facet_count();
    CellComplex X;
    X.counts = {nv, 2 * ne, 4 * nf, 8};
    X.boundary.assign(4, BitMatrix(0, 0));
    BitMatrix d1(nv, 2 * ne), d2(2 * ne, 4 * nf), d3(4 * nf, 8);
    for (int e = 0; e < ne; ++e) {
        auto [a, b] = edges[e];
        int v1 = p.vertex_of(a, b), v2 = p.vertex_of(b, a);
        for (int idx = 0; idx < 2; ++idx) {
            d1.flip(v1, 2 * e + idx);
            d1.flip(v2, 2 * e + idx);
        }
    }
    for (int f = 0; f < nf; ++f) {
        unsigned span = span_mask({c.col[f]});
        for (int g = 0; g < 8; ++g) {
            if (detail::coset_rep(g, span) != g) continue;
            int col = fcell(f, g);
            for (int n : p.cycle(f)) {
                auto key = std::minmax(f, n);
                d2.flip(ecell(edge_id.at({key.first, key.second}), g), col);
            }
        }
    }
    for (int g = 0; g < 8; ++g)
        for (int f = 0; f < nf; ++f) d3.flip(fcell(f, g), g);
    X.boundary[1] = std::move(d1);
    X.boundary[2] = std::move(d2);
    X.boundary[3] = std::move(d3);
    return X;
}

inline bool boundary_squares_vanish(const CellComplex& X)
{
    return X.boundary[1].times(X.boundary[2]).is_zero() && X.boundary[2].times(X.boundary[3]).is_zero();
}

inline std::array<int, 4> z2_betti(const CellComplex& X)
{
    int r[5] = {0, X.boundary[1].rank(), X.boundary[2].rank(), X.boundary[3].rank(), 0};
    std::array<int, 4> b{};
    for (int i = 0; i < 4; ++i) b[i] = X.counts[i] - r[i] - r[i + 1];
    return b;
}

inline int fixed_point_count(const Colored& c) { return c.V(); }

// ---- section surfaces ----

struct SectionReport {
    int components = 0;
    int euler_total = 0;
    int euler_per_component = 0;
    bool orientable = false;
};

// The surface over a k-gon section whose sides carry `colors` in cyclic
// order: 8 polygons, sides identified in pairs of copies g ~ g + c_i.
inline SectionReport section_surface(const std::vector<Color>& colors)
{
    const int k = static_cast<int>(colors.size());
    if (k < 2) fail(Err::InvalidSection, "section needs at least two sides");
    for (int i = 0; i < k; ++i)
        if (!is_color(colors[i]) || rank_of({colors[i], colors[(i + 1) % k]}) != 2)
            fail(Err::InvalidSection, "adjacent section colors must be independent");
    SectionReport r;
    const int rank = rank_of(colors);
    r.components = 8 >> rank;
    r.euler_total = 8 - 2 * k;
    r.euler_per_component = r.euler_total / r.components;
    r.orientable = false;
    for (int f = 1; f < 8; ++f) { // functional x -> parity(f & x)
        bool all = true;
        for (Color c : colors) all = all && (__builtin_popcount(f & c) & 1);
        if (all) r.orientable = true;
    }
    return r;
}

inline std::vector<Color> section_colors(const Colored& c, const Locus& l)
{
    Hole h = make_hole(c.p, l);
    std::vector<Color> out;
    for (int f : h.boundary) out.push_back(c.col[f]);
    return out;
}

} // namespace scw
