#pragma once

// Fixed-point signatures: parity of each unordered vertex basis.

#include <array>
#include <bitset>
#include <cstdio>
#include <string>
#include <vector>

#include "coloring.hpp"

namespace scw {

using Signature = std::bitset<28>;

// the 28 unordered bases, sorted (min, mid, max) lexicographically
inline const std::vector<std::array<Color, 3>>& vertex_triples()
{
    static const std::vector<std::array<Color, 3>> all = [] {
        std::vector<std::array<Color, 3>> v;
        for (int a = 1; a < 8; ++a)
            for (int b = a + 1; b < 8; ++b)
                for (int c = b + 1; c < 8; ++c)
                    if (is_basis(a, b, c)) v.push_back({Color(a), Color(b), Color(c)});
        return v;
    }();
    return all;
}

inline int triple_index(Color a, Color b, Color c)
{
    static const std::array<int, 512> table = [] {
        std::array<int, 512> t{};
        t.fill(-1);
        const auto& all = vertex_triples();
        for (size_t i = 0; i < all.size(); ++i) t[all[i][0] * 64 + all[i][1] * 8 + all[i][2]] = static_cast<int>(i);
        return t;
    }();
    if (a > b) std::swap(a, b);
    if (b > c) std::swap(b, c);
    if (a > b) std::swap(a, b);
    return table[a * 64 + b * 8 + c];
}

inline Signature signature(const Colored& c)
{
    Signature s;
    for (auto& t : c.p.vertices()) s.flip(triple_index(c.col[t[0]], c.col[t[1]], c.col[t[2]]));
    return s;
}

inline bool is_null_cobordant(const Colored& c) { return signature(c).none(); }

inline Signature act(const GL& g, const Signature& s)
{
    Signature r;
    const auto& all = vertex_triples();
    for (size_t i = 0; i < all.size(); ++i)
        if (s[i]) r.flip(triple_index(g(all[i][0]), g(all[i][1]), g(all[i][2])));
    return r;
}

inline std::string to_hex(const Signature& s)
{
    char buf[16];
    std::snprintf(buf, sizeof buf, "%07lx", s.to_ulong());
    return buf;
}

inline std::vector<std::array<Color, 3>> odd_triples(const Signature& s)
{
    std::vector<std::array<Color, 3>> out;
    for (size_t i = 0; i < 28; ++i)
        if (s[i]) out.push_back(vertex_triples()[i]);
    return out;
}

// rank over GF(2) of a set of signatures
inline int span_rank(std::vector<Signature> v)
{
    int r = 0;
    for (int bit = 27; bit >= 0; --bit) {
        size_t piv = r;
        while (piv < v.size() && !v[piv][bit]) ++piv;
        if (piv == v.size()) continue;
        std::swap(v[r], v[piv]);
        for (size_t i = 0; i < v.size(); ++i)
            if (i != static_cast<size_t>(r) && v[i][bit]) v[i] ^= v[r];
        ++r;
    }
    return r;
}

inline int generator_span_dimension(const std::vector<Colored>& gens)
{
    std::vector<Signature> v;
    for (const Colored& g : gens)
        for (const GL& s : gl_group()) v.push_back(act(s, signature(g)));
    return span_rank(std::move(v));
}

// Delta^3 and all P^3(3) orbits, each under the whole of GL
inline int generator_span_dimension()
{
    std::vector<Colored> gens;
    for (Elementary e : {Elementary::Delta0, Elementary::Prism1, Elementary::Prism2, Elementary::Prism3,
                         Elementary::Prism4, Elementary::PrismSum})
        gens.push_back(catalog(e));
    return generator_span_dimension(gens);
}

} // namespace scw
