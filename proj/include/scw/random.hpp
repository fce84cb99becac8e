#pragma once

// Seeded random polytopes and colorings.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "coloring.hpp"
#include "locus.hpp"

namespace scw {

inline Polytope random_polytope(int n_excisions, std::uint64_t seed)
{
    if (n_excisions < 0) fail(Err::InvalidArgument, "negative excision count");
    std::mt19937_64 rng(seed);
    Polytope p = simplex3();
    for (int i = 0; i < n_excisions; ++i) {
        auto loci = excision_loci(p);
        std::uniform_int_distribution<size_t> pick(0, loci.size() - 1);
        p = excise(p, loci[pick(rng)]);
    }
    return p;
}

// first coloring found by backtracking with a seeded color order per facet
inline Colored random_coloring(const Polytope& p, std::uint64_t seed)
{
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::vector<std::vector<Color>> orders(p.facet_count());
    for (auto& o : orders) {
        o = {1, 2, 3, 4, 5, 6, 7};
        std::shuffle(o.begin(), o.end(), rng);
    }
    auto found = enumerate_raw(p, 1, [&](int f) { return orders[f]; });
    if (found.empty()) fail(Err::InvalidColoring, "no coloring exists");
    return Colored(p, found.front());
}

inline Colored first_coloring(const Polytope& p)
{
    auto found = enumerate_raw(p, 1);
    if (found.empty()) fail(Err::InvalidColoring, "no coloring exists");
    return Colored(p, found.front());
}

// Instance i of a seeded corpus: F between 5 and max_f.
inline Colored corpus_instance(std::uint64_t seed, int i, int max_f = 16)
{
    std::mt19937_64 rng(seed * 1000003ULL + static_cast<std::uint64_t>(i));
    std::uniform_int_distribution<int> k(1, max_f - 4);
    const int n = k(rng);
    const std::uint64_t s = rng();
    return random_coloring(random_polytope(n, s), s);
}

inline std::vector<Colored> corpus(std::uint64_t seed, int count, int max_f = 16)
{
    std::vector<Colored> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) out.push_back(corpus_instance(seed, i, max_f));
    return out;
}

} // namespace scw
