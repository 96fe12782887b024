#include <random>

#include "doctest.h"
#include "gmac/error.hpp"
#include "gmac/simplicial.hpp"

using namespace gmac;

namespace {

SimplicialComplex boundary_square()
{
    return SimplicialComplex::from_facets(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
}

SimplicialComplex random_complex(std::mt19937_64& rng, int t)
{
    std::vector<VertexSet> facets;
    int n = static_cast<int>(rng() % 5);
    for (int i = 0; i < n; ++i) facets.emplace_back(static_cast<std::uint32_t>(rng() % (1U << t)));
    if (rng() % 10 == 0) return SimplicialComplex::void_complex(t);
    return SimplicialComplex::from_facets(t, facets);
}

}  // namespace

TEST_CASE("from_facets closes downward")
{
    auto k = SimplicialComplex::from_facets(3, {{1, 2}, {2, 3}});
    CHECK(k.size() == 6);
    CHECK(k.contains({1}));
    CHECK(k.contains({}));
    CHECK_FALSE(k.contains({1, 3}));
    CHECK(SimplicialComplex::from_facets(3, {}) == SimplicialComplex::empty_simplex(3));
    CHECK(SimplicialComplex::from_facets(3, {}, true).is_void());
    CHECK(SimplicialComplex::from_facets(3, {}, true).size() == 0);
    CHECK_THROWS_AS(SimplicialComplex::from_facets(2, {{1, 3}}), InvalidInput);
    CHECK(k.to_string() == "{φ,{1},{2},{3},{1,2},{2,3}}");
    CHECK(k.facets() == std::vector<VertexSet>{{1, 2}, {2, 3}});
}

TEST_CASE("link and star")
{
    auto path = SimplicialComplex::from_facets(3, {{1, 2}, {2, 3}});
    CHECK(link(path, {2}) == SimplicialComplex::from_facets(3, {{1}, {3}}));
    CHECK(link(path, {}) == path);
    CHECK(link(boundary_square(), {1}) == SimplicialComplex::from_facets(4, {{2}, {4}}));
    CHECK(star(path, {2}) == path);
    CHECK(star(path, {}) == path);
    auto two = SimplicialComplex::from_facets(2, {{1}, {2}});
    CHECK(star(two, {1}) == SimplicialComplex::from_facets(2, {{1}}));
    CHECK_THROWS_AS(link(path, {1, 3}), InvalidInput);
    CHECK_THROWS_AS(star(path, {1, 3}), InvalidInput);
}

TEST_CASE("restriction and hochster link")
{
    auto sq = boundary_square();
    CHECK(restrict_to(sq, {1, 3}) == SimplicialComplex::from_facets(4, {{1}, {3}}));
    CHECK(restrict_to(sq, VertexSet::range(4)) == sq);
    CHECK(restrict_to(SimplicialComplex::void_complex(4), {1}).is_void());
    CHECK(restrict_to(sq, {}) == SimplicialComplex::empty_simplex(4));

    auto h = hochster_link(sq, {1}, {3});
    CHECK(h.complex == SimplicialComplex::empty_simplex(4));
    CHECK(h.vertices.empty());
    CHECK(hochster_link(sq, {}, VertexSet::range(4)).complex == sq);
    auto two = SimplicialComplex::from_facets(2, {{1}, {2}});
    CHECK(hochster_link(two, {}, {1, 2}).complex == two);
    CHECK_THROWS_AS(hochster_link(sq, {1}, {1, 3}), InvalidInput);
}

TEST_CASE("alexander dual examples")
{
    for (int m = 1; m <= 4; ++m) {
        auto all = VertexSet::range(m);
        auto dual_empty = alexander_dual(SimplicialComplex::empty_simplex(m), m);
        CHECK(dual_empty.size() == (1U << m) - 1);
        CHECK_FALSE(dual_empty.contains(all));
        CHECK(alexander_dual(SimplicialComplex::void_complex(m), m) == SimplicialComplex::full(m, all));
    }
    auto two = SimplicialComplex::from_facets(2, {{1}, {2}});
    CHECK(alexander_dual(two, 2) == SimplicialComplex::empty_simplex(2));
    CHECK(alexander_dual(SimplicialComplex::full(2, {1, 2}), 2).is_void());
}

TEST_CASE("exhaustive enumeration counts")
{
    // Numbers of downward-closed families on t vertices, plus the void complex.
    CHECK(all_complexes(0).size() == 2);
    CHECK(all_complexes(1).size() == 3);
    CHECK(all_complexes(2).size() == 6);
    CHECK(all_complexes(3).size() == 20);
    CHECK(all_complexes(4).size() == 168);
}

TEST_CASE("alexander dual is an involution and turns unions into intersections")
{
    for (int t = 0; t <= 4; ++t) {
        for (const auto& k : all_complexes(t)) CHECK(alexander_dual(alexander_dual(k, t), t) == k);
    }
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        int t = 1 + static_cast<int>(rng() % 7);
        auto k = random_complex(rng, t);
        auto l = random_complex(rng, t);
        CHECK(alexander_dual(alexander_dual(k, t), t) == k);
        CHECK(alexander_dual(complex_union(k, l), t) ==
              complex_intersection(alexander_dual(k, t), alexander_dual(l, t)));
    }
}

TEST_CASE("operators preserve closure and never produce void from a simplex")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        int t = 1 + static_cast<int>(rng() % 6);
        auto k = random_complex(rng, t);
        if (k.is_void()) continue;
        VertexSet sigma = k.simplices()[rng() % k.size()];
        VertexSet omega = VertexSet(static_cast<std::uint32_t>(rng() % (1U << t))) - sigma;
        auto h = hochster_link(k, sigma, omega).complex;
        CHECK_FALSE(h.is_void());
        CHECK(h.vertex_set().subset_of(omega));
        for (const auto& c : {link(k, sigma), star(k, sigma), h}) {
            CHECK(c.contains(VertexSet()));
            for (VertexSet s : c.simplices()) {
                for (int v : s.vertices()) CHECK(c.contains(s - VertexSet::singleton(v)));
                CHECK(k.contains(s));
            }
        }
    }
}
