#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace scw;

namespace {

Polytope relabel_random(const Polytope& p, std::mt19937& rng)
{
    std::vector<int> perm(p.facet_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return p.relabeled(perm);
}

Err error_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return Err::InvalidArgument; // sentinel for "no error"; never expected below
}

} // namespace

TEST(Validate, Tetrahedron)
{
    Polytope p = Polytope::make(4, {{0, 2, 1}, {0, 1, 3}, {0, 3, 2}, {1, 2, 3}});
    EXPECT_EQ(p.vertex_count(), 4);
    EXPECT_EQ(p.edge_count(), 6);
    EXPECT_EQ(p.facet_count(), 4);
    EXPECT_TRUE(p.is_simple());
}

TEST(Validate, QuarterBall)
{
    Polytope p = Polytope::make(3, {{0, 1, 2}, {0, 2, 1}});
    EXPECT_EQ(p.vertex_count(), 2);
    EXPECT_EQ(p.edge_count(), 3);
    EXPECT_FALSE(p.is_simple());
    EXPECT_EQ(p, oslash());
}

TEST(Validate, ReversedTriple)
{
    EXPECT_EQ(error_of([] { Polytope::make(4, {{0, 1, 2}, {0, 1, 3}, {0, 3, 2}, {1, 2, 3}}); }),
              Err::InconsistentOrientation);
}

TEST(Validate, Malformed)
{
    EXPECT_EQ(error_of([] { Polytope::make(4, {{0, 2, 1}, {0, 1, 3}, {0, 3, 2}, {1, 2, 7}}); }), Err::Malformed);
    EXPECT_EQ(error_of([] { Polytope::make(4, {{0, 0, 1}, {0, 1, 3}, {0, 3, 2}, {1, 2, 3}}); }), Err::Malformed);
}

TEST(Validate, NonSphere)
{
    // a lone vertex: each facet pair occurs once
    EXPECT_EQ(error_of([] { Polytope::make(3, {{0, 1, 2}}); }), Err::NonSphere);
}

TEST(Validate, DuplicateEdgePairWhenSimpleDemanded)
{
    // two copies of the quarter ball's vertex pair: each facet pair occurs four times
    EXPECT_EQ(error_of([] { Polytope::make(3, {{0, 1, 2}, {0, 2, 1}, {0, 1, 2}, {0, 2, 1}}); }),
              Err::DuplicateEdgePair);
}

TEST(Builders, Counts)
{
    auto vef = [](const Polytope& p) { return std::array<int, 3>{p.vertex_count(), p.edge_count(), p.facet_count()}; };
    EXPECT_EQ(vef(simplex3()), (std::array<int, 3>{4, 6, 4}));
    EXPECT_EQ(vef(prism(3)), (std::array<int, 3>{6, 9, 5}));
    EXPECT_EQ(vef(truncated_prism3()), (std::array<int, 3>{8, 12, 6}));
    for (int m = 3; m < 9; ++m) EXPECT_EQ(vef(prism(m)), (std::array<int, 3>{2 * m, 3 * m, m + 2}));
    EXPECT_THROW(prism(2), Error);
}

TEST(Excise, SimplexVertexGivesPrism)
{
    Polytope s = simplex3();
    for (int v = 0; v < 4; ++v) {
        Polytope t = excise(s, Locus::vertex(s.vertex(v)));
        EXPECT_TRUE(oracle::brute_isomorphic(t, nullptr, prism(3), nullptr));
        EXPECT_TRUE(is_isomorphic(t, prism(3)));
    }
}

TEST(Excise, PrismVertexGivesTruncatedPrism)
{
    Polytope p = prism(3);
    for (int v = 0; v < p.vertex_count(); ++v)
        EXPECT_TRUE(is_isomorphic(excise(p, Locus::vertex(p.vertex(v))), truncated_prism3()));
}

TEST(Excise, EveInSquareViolatesConvention)
{
    Polytope p = prism(4);
    EXPECT_EQ(error_of([&] { excise(p, Locus::eve(0, p.vertex(p.vertex_of(0, 2)))); }), Err::ConventionViolation);
}

TEST(Excise, CountLaws)
{
    for (int seed = 0; seed < 30; ++seed) {
        Polytope p = random_polytope(6, seed);
        for (const Locus& l : excision_loci(p)) {
            Polytope q = excise(p, l);
            EXPECT_EQ(q.facet_count(), p.facet_count() + 1);
            EXPECT_EQ(q.vertex_count(), p.vertex_count() + 2);
            EXPECT_EQ(q.edge_count(), p.edge_count() + 3);
            EXPECT_TRUE(q.is_simple());
        }
    }
}

TEST(Isomorphism, Examples)
{
    EXPECT_TRUE(is_isomorphic(prism(3), excise(simplex3(), Locus::vertex(0, 2, 1))));
    EXPECT_TRUE(is_isomorphic(prism(4), prism(4)));
    EXPECT_FALSE(is_isomorphic(prism(4), prism(5)));
    EXPECT_FALSE(is_isomorphic(prism(3), simplex3()));
}

TEST(Isomorphism, AgreesWithBruteForce)
{
    std::mt19937 rng(5);
    for (int seed = 0; seed < 40; ++seed) {
        Polytope a = random_polytope(3, seed), b = random_polytope(3, seed + 1000);
        EXPECT_EQ(is_isomorphic(a, b), oracle::brute_isomorphic(a, nullptr, b, nullptr)) << seed;
        Polytope c = relabel_random(a, rng);
        EXPECT_TRUE(is_isomorphic(a, c));
        EXPECT_TRUE(is_isomorphic(a, c.mirrored()));
    }
}

TEST(Canonical, Idempotent)
{
    Polytope c1 = canonical_polytope(prism(3));
    EXPECT_EQ(canonical_form(c1).code, canonical_form(prism(3)).code);
    EXPECT_EQ(canonical_polytope(c1), c1);
    EXPECT_NE(canonical_form(prism(3)).code, canonical_form(simplex3()).code);
}

TEST(Canonical, LabelAndReflectionInvariant)
{
    std::mt19937 rng(11);
    for (int seed = 0; seed < 1000; ++seed) {
        Polytope p = random_polytope(1 + seed % 10, seed);
        auto k = canonical_form(p).code;
        ASSERT_EQ(canonical_form(relabel_random(p, rng)).code, k);
        ASSERT_EQ(canonical_form(relabel_random(p.mirrored(), rng)).code, k);
    }
}

TEST(Stats, HVectors)
{
    EXPECT_EQ(simplex3().stats().h, (std::array<int, 4>{1, 1, 1, 1}));
    EXPECT_EQ(prism(3).stats().h, (std::array<int, 4>{1, 2, 2, 1}));
    EXPECT_EQ(prism(4).stats().h, (std::array<int, 4>{1, 3, 3, 1}));
    EXPECT_THROW(oslash().stats(), Error);
    for (int seed = 0; seed < 50; ++seed) {
        auto s = random_polytope(seed % 12, seed).stats();
        EXPECT_EQ(s.h[0], 1);
        EXPECT_EQ(s.h[3], 1);
        EXPECT_EQ(s.h[1], s.h[2]);
        EXPECT_EQ(s.h[0] + s.h[1] + s.h[2] + s.h[3], s.V);
    }
}

TEST(Random, Examples)
{
    EXPECT_EQ(random_polytope(0, 42), simplex3());
    for (int s = 0; s < 20; ++s) EXPECT_EQ(random_polytope(1, s).facet_count(), 5);
    for (int k = 0; k < 12; ++k) EXPECT_EQ(random_polytope(k, 3 * k).facet_count(), 4 + k);
    EXPECT_EQ(random_polytope(9, 7), random_polytope(9, 7));
}

TEST(Connectivity, SimpleImpliesThreeConnected)
{
    for (int seed = 0; seed < 100; ++seed) {
        Polytope p = random_polytope(seed % 14, seed);
        EXPECT_TRUE(p.is_simple());
        EXPECT_TRUE(p.three_connected());
    }
}
