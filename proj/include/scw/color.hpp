#pragma once

// Colors are nonzero vectors of GF(2)^3 stored as 3-bit integers (e1=1, e2=2,
// e3=4); addition is XOR.

#include <array>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace scw {

using Color = std::uint8_t;

inline bool is_color(int c) { return c >= 1 && c <= 7; }

template <typename It>
int rank_of(It first, It last)
{
    // basis indexed by leading bit
    Color basis[3] = {0, 0, 0};
    int r = 0;
    for (; first != last; ++first) {
        Color v = static_cast<Color>(*first);
        for (int b = 2; b >= 0 && v; --b) {
            if (!(v >> b & 1)) continue;
            if (!basis[b]) {
                basis[b] = v;
                ++r;
                v = 0;
            } else {
                v ^= basis[b];
            }
        }
    }
    return r;
}

inline int rank_of(std::initializer_list<int> cs) { return rank_of(cs.begin(), cs.end()); }
inline int rank_of(const std::vector<Color>& cs) { return rank_of(cs.begin(), cs.end()); }

inline bool is_basis(int a, int b, int c)
{
    return is_color(a) && is_color(b) && is_color(c) && a != b && (a ^ b) != c && a != c && b != c;
}

// span of a set of colors as a bitmask over 0..7
inline unsigned span_mask(const std::vector<Color>& cs)
{
    unsigned m = 1; // contains 0
    for (Color c : cs) {
        unsigned add = 0;
        for (int x = 0; x < 8; ++x)
            if (m >> x & 1) add |= 1u << (x ^ c);
        m |= add;
    }
    return m;
}

// An element of GL(3,Z2) stored as the images of e1, e2, e3.
struct GL {
    std::array<Color, 3> img{1, 2, 4};

    Color operator()(Color c) const
    {
        Color r = 0;
        for (int j = 0; j < 3; ++j)
            if (c >> j & 1) r ^= img[j];
        return r;
    }

    friend bool operator==(const GL& a, const GL& b) { return a.img == b.img; }
    friend bool operator<(const GL& a, const GL& b) { return a.img < b.img; }

    // (a*b)(c) = a(b(c))
    friend GL operator*(const GL& a, const GL& b)
    {
        return GL{{a(b.img[0]), a(b.img[1]), a(b.img[2])}};
    }

    GL inverse() const
    {
        GL r;
        for (int c = 1; c < 8; ++c)
            for (int j = 0; j < 3; ++j)
                if ((*this)(static_cast<Color>(c)) == (1 << j)) r.img[j] = static_cast<Color>(c);
        return r;
    }

    bool valid() const { return is_basis(img[0], img[1], img[2]); }

    // 9-bit row-major matrix: bit (3*row + col) holds M[row][col], column j = img[j]
    int to_bits() const
    {
        int v = 0;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c)
                if (img[c] >> r & 1) v |= 1 << (3 * r + c);
        return v;
    }

    static GL from_bits(int v)
    {
        GL g{{0, 0, 0}};
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c)
                if (v >> (3 * r + c) & 1) g.img[c] |= static_cast<Color>(1 << r);
        return g;
    }

    // the unique element sending basis src[i] to dst[i]
    static GL mapping(const std::array<Color, 3>& src, const std::array<Color, 3>& dst)
    {
        GL to_src{src};
        GL to_dst{dst};
        return to_dst * to_src.inverse();
    }
};

inline const std::vector<GL>& gl_group()
{
    static const std::vector<GL> all = [] {
        std::vector<GL> v;
        for (int a = 1; a < 8; ++a)
            for (int b = 1; b < 8; ++b)
                for (int c = 1; c < 8; ++c)
                    if (is_basis(a, b, c))
                        v.push_back(GL{{static_cast<Color>(a), static_cast<Color>(b), static_cast<Color>(c)}});
        return v;
    }();
    return all;
}

} // namespace scw
