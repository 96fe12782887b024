#include <random>

#include "doctest.h"
#include "gmac/chains.hpp"
#include "gmac/error.hpp"

using namespace gmac;

namespace {

const Field Q = Field::rationals();

// Reduced Betti numbers by rank counting alone, independent of the
// representative machinery in Homology.
GradedDims betti_by_ranks(const ChainComplex& c)
{
    GradedDims g{c.min_degree(), {}};
    if (c.empty()) return g;
    for (int n = c.min_degree(); n <= c.max_degree(); ++n) {
        g.dims.push_back(c.dim(n) - rank(c.d(n)) - rank(c.d(n + 1)));
    }
    return g;
}

SimplicialComplex boundary_simplex(int n)
{
    std::vector<VertexSet> facets;
    for (int v = 1; v <= n + 1; ++v) facets.push_back(VertexSet::range(n + 1) - VertexSet::singleton(v));
    return SimplicialComplex::from_facets(n + 1, facets);
}

SimplicialComplex random_complex(std::mt19937_64& rng, int t, int facets)
{
    std::vector<VertexSet> f;
    for (int i = 0; i < facets; ++i) f.emplace_back(static_cast<std::uint32_t>(rng() % (1U << t)));
    return SimplicialComplex::from_facets(t, f);
}

}  // namespace

TEST_CASE("augmented complex shapes")
{
    auto e = augmented_complex(SimplicialComplex::empty_simplex(2), Q);
    CHECK(e.complex.min_degree() == -1);
    CHECK(e.complex.dims().dims == std::vector<std::size_t>{1});

    auto two = augmented_complex(SimplicialComplex::from_facets(2, {{1}, {2}}), Q);
    CHECK(two.complex.d(0) == Matrix::from_rows(Q, {{1, 1}}));

    auto tri = augmented_complex(boundary_simplex(2), Q);
    CHECK((tri.complex.d(0) * tri.complex.d(1)).is_zero());
    Homology h(tri.complex);
    CHECK(h.dims() == GradedDims{-1, {0, 0, 1}});

    CHECK(augmented_complex(SimplicialComplex::void_complex(3), Q).complex.empty());
}

TEST_CASE("relative full complexes")
{
    auto a = relative_full_complex({1}, SimplicialComplex::empty_simplex(1), Q);
    CHECK(a.complex.dims() == GradedDims{0, {1}});
    CHECK(Homology(a.complex).dims() == GradedDims{0, {1}});

    auto b = relative_full_complex({1, 2}, SimplicialComplex::from_facets(2, {{1}, {2}}), Q);
    CHECK(Homology(b.complex).dims() == GradedDims{0, {0, 1}});

    auto c = relative_full_complex({1, 2}, SimplicialComplex::full(2, {1, 2}), Q);
    CHECK(c.complex.empty());
    CHECK(Homology(c.complex).dims().total() == 0);

    CHECK_THROWS_AS(relative_full_complex({1}, SimplicialComplex::from_facets(2, {{2}}), Q), InvalidInput);
}

TEST_CASE("homology examples")
{
    // Values frozen from betti_by_ranks.
    CHECK(Homology(augmented_complex(boundary_simplex(3), Q).complex).dims() == GradedDims{-1, {0, 0, 0, 1}});
    CHECK(Homology(augmented_complex(SimplicialComplex::empty_simplex(0), Q).complex).dims() ==
          GradedDims{-1, {1}});
    auto three = SimplicialComplex::from_facets(3, {{1}, {2}, {3}});
    CHECK(Homology(augmented_complex(three, Q).complex).dims() == GradedDims{-1, {0, 2}});
    CHECK(betti_by_ranks(augmented_complex(three, Q).complex) == GradedDims{-1, {0, 2}});
}

TEST_CASE("decompose returns basis coordinates and boundary witnesses")
{
    std::mt19937_64 rng(3);
    for (const Field& f : {Q, Field::prime(2), Field::prime(3)}) {
        for (int trial = 0; trial < 30; ++trial) {
            auto k = random_complex(rng, 2 + static_cast<int>(rng() % 4), 1 + static_cast<int>(rng() % 5));
            auto c = augmented_complex(k, f);
            Homology h(c.complex);
            CHECK(h.dims() == betti_by_ranks(c.complex));
            for (int n = c.complex.min_degree(); n <= c.complex.max_degree(); ++n) {
                const Matrix& reps = h.reps(n);
                CHECK((h.dual(n) * reps) == Matrix::identity(f, reps.cols()));
                for (std::size_t i = 0; i < reps.cols(); ++i) {
                    auto dec = h.decompose(n, reps.column(i));
                    Vector e = zero_vector(f, reps.cols());
                    e[i] = Scalar::one(f);
                    CHECK(dec.coordinates == e);
                    CHECK(is_zero(c.complex.d(n + 1).apply(dec.witness)));
                }
                const std::size_t up = c.complex.dim(n + 1);
                if (up == 0) continue;
                Vector w = zero_vector(f, up);
                for (auto& s : w) s = Scalar(f, static_cast<long>(rng() % 5) - 2);
                Vector bd = c.complex.d(n + 1).apply(w);
                auto dec = h.decompose(n, bd);
                CHECK(is_zero(dec.coordinates));
                CHECK(c.complex.d(n + 1).apply(dec.witness) == bd);
            }
        }
    }
}

TEST_CASE("decompose rejects non-cycles")
{
    auto c = augmented_complex(SimplicialComplex::from_facets(2, {{1}, {2}}), Q);
    Homology h(c.complex);
    CHECK_THROWS_AS(h.decompose(0, {Scalar(Q, 1L), Scalar(Q, 0L)}), InvalidInput);
}

TEST_CASE("induced maps")
{
    std::mt19937_64 rng(1);
    auto k = random_complex(rng, 4, 3);
    auto c = augmented_complex(k, Q);
    Homology h(c.complex);
    auto id = induced_map(inclusion_map(c, c), c.complex, c.complex, h, h);
    for (std::size_t i = 0; i < id.size(); ++i) CHECK(id[i] == Matrix::identity(Q, id[i].cols()));

    auto bd = augmented_complex(boundary_simplex(2), Q);
    auto full = augmented_complex(SimplicialComplex::full(3, VertexSet::range(3)), Q);
    Homology hb(bd.complex), hf(full.complex);
    auto m = induced_map(inclusion_map(bd, full), bd.complex, full.complex, hb, hf);
    CHECK(m[2].rows() == 0);
    CHECK(m[2].cols() == 1);

    auto pt = plain_complex(SimplicialComplex::from_facets(2, {{1}}), Q);
    auto two = plain_complex(SimplicialComplex::from_facets(2, {{1}, {2}}), Q);
    Homology hp(pt.complex), ht(two.complex);
    auto p = induced_map(inclusion_map(pt, two), pt.complex, two.complex, hp, ht);
    CHECK(p[0] == Matrix::from_rows(Q, {{1}, {0}}));

    auto edge = plain_complex(SimplicialComplex::full(2, {1, 2}), Q);
    Homology he(edge.complex);
    // Zero on vertices but the identity on the edge does not commute with d.
    ChainMap not_chain{0, {Matrix(Q, 2, 2), Matrix::from_rows(Q, {{1}})}};
    CHECK_THROWS_AS(induced_map(not_chain, edge.complex, edge.complex, he, he), InvalidInput);
}

TEST_CASE("alexander-whitney splitting")
{
    CHECK(aw_split({1}) == std::vector<AwTerm>{{{1}, {1}}});
    CHECK(aw_split({1, 2}) == std::vector<AwTerm>{{{1}, {1, 2}}, {{1, 2}, {2}}});
    auto three = aw_split({1, 2, 3});
    REQUIRE(three.size() == 3);
    CHECK(three[1] == AwTerm{{1, 2}, {2, 3}});
    CHECK(aw_diagonal({1, 2, 3}).size() == 7);

    // (Δ⊗1)Δ = (1⊗Δ)Δ: both sides list the triples (i0..ij, ij..ik, ik..is).
    for (VertexSet s : {VertexSet{1}, VertexSet{1, 3}, VertexSet{1, 2, 4}, VertexSet{1, 2, 3, 5}}) {
        std::vector<std::tuple<VertexSet, VertexSet, VertexSet>> left, right;
        for (auto [a, b] : aw_split(s)) {
            for (auto [a1, a2] : aw_split(a)) left.emplace_back(a1, a2, b);
            for (auto [b1, b2] : aw_split(b)) right.emplace_back(a, b1, b2);
        }
        std::sort(left.begin(), left.end());
        std::sort(right.begin(), right.end());
        CHECK(left == right);
    }
}

TEST_CASE("rational Betti numbers never exceed modular ones")
{
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 40; ++trial) {
        auto k = random_complex(rng, 3 + static_cast<int>(rng() % 4), 2 + static_cast<int>(rng() % 5));
        GradedDims q = Homology(augmented_complex(k, Q).complex).dims();
        for (std::uint64_t p : {2, 3, 5}) {
            GradedDims gp = Homology(augmented_complex(k, Field::prime(p)).complex).dims();
            for (int n = -1; n <= 5; ++n) CHECK(q.dim(n) <= gp.dim(n));
        }
    }
}
