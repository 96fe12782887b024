#include "doctest.h"
#include "gmac/error.hpp"
#include "gmac/hochster.hpp"
#include "gmac/oracle.hpp"

using namespace gmac;

namespace {

const Field Q = Field::rationals();

Instance disks(const SimplicialComplex& k, const Field& f = Q)
{
    Instance inst{f, k, {}};
    for (int i = 0; i < k.ground_size(); ++i) inst.factors.push_back(analyze_pair(disk_sphere_pair(2), f));
    return inst;
}

Instance spheres(const SimplicialComplex& k, const std::vector<std::pair<int, int>>& rk, const Field& f = Q)
{
    Instance inst{f, k, {}};
    for (auto [r, kk] : rk) inst.factors.push_back(sphere_pair(r, kk, f));
    return inst;
}

SimplicialComplex two_points() { return SimplicialComplex::from_facets(2, {{1}, {2}}); }
SimplicialComplex boundary_square() { return SimplicialComplex::from_facets(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}); }

}  // namespace

TEST_CASE("index sets")
{
    Instance a = disks(two_points());
    auto pairs = index_set(a);
    CHECK(pairs.size() == 4);
    for (const auto& p : pairs) CHECK(p.sigma.empty());

    Instance pts{Q, SimplicialComplex::from_facets(2, {{1, 2}}), {}};
    for (int i = 0; i < 2; ++i) {
        pts.factors.push_back(analyze_pair({SimplicialComplex::full(1, {1}), SimplicialComplex::full(1, {1})}, Q));
    }
    CHECK(index_set(pts) == std::vector<IndexPair>{{VertexSet(), VertexSet()}});

    auto k = boundary_square();
    Instance s = spheres(k, {{1, 1}, {2, 1}, {1, 0}, {3, 2}});
    std::size_t expected = 0;
    for (VertexSet sigma : k.simplices()) expected += 1U << (4 - sigma.size());
    CHECK(index_set(s).size() == expected);
}

TEST_CASE("tensor bases")
{
    Instance s = spheres(boundary_square(), {{1, 1}, {2, 1}, {1, 0}, {3, 2}});
    for (const auto& p : index_set(s)) {
        auto b = t_basis(s, p);
        REQUIRE(b.size() == 1);
        CHECK(b[0].sigma == p.sigma);
        CHECK(b[0].omega == p.omega);
    }
    auto unit = t_basis(s, {VertexSet(), VertexSet()});
    CHECK(unit[0].degree == 0);
    CHECK(t_label(s, unit[0]) == "u⊗u⊗u⊗u");

    RawFactor raw;
    raw.field = Q;
    raw.elements = {{Role::kernel, 1, "a"}, {Role::kernel, 2, "b"}, {Role::image, 0, "u"}};
    raw.unit = "u";
    Instance two{Q, SimplicialComplex::from_facets(2, {{1}, {2}}), {from_raw(raw), sphere_pair(1, 1, Q)}};
    CHECK(t_basis(two, {VertexSet(), VertexSet{1, 2}}).size() == 2);
    CHECK(t_dims(two, {VertexSet(), VertexSet{1, 2}}) == std::vector<std::size_t>{0, 0, 1, 1});
}

TEST_CASE("golden Betti numbers agree with the oracle")
{
    struct Case
    {
        Instance inst;
        std::string totals;
    };
    std::vector<Case> cases{
        {disks(two_points()), "1 0 0 1"},
        {disks(boundary_square()), "1 0 0 2 0 0 1"},
        {disks(SimplicialComplex::empty_simplex(2)), "1 2 1"},
    };
    for (const auto& c : cases) {
        CHECK(betti(c.inst).totals.to_string() == c.totals);
        CHECK(minimal_model(c.inst).totals.to_string() == c.totals);
        CHECK(oracle_betti(c.inst).to_string() == c.totals);
    }
    // The top class of two points comes from (φ,{1,2}) in degree 3.
    auto t = betti(disks(two_points()));
    const BettiEntry* e = t.find({VertexSet(), VertexSet{1, 2}});
    REQUIRE(e);
    CHECK(e->dims.to_string() == "0 0 0 1");
}

TEST_CASE("degenerate complexes")
{
    // K = {φ}: Künneth product of the A factors.
    Instance s = spheres(SimplicialComplex::empty_simplex(2), {{2, 1}, {3, 2}});
    CHECK(betti(s).totals.to_string() == "1 1 1 1");
    CHECK(minimal_model(s).totals.to_string() == "1 1 1 1");

    // One factor with K = {φ,{1}} gives H_*(X).
    Instance x = spheres(SimplicialComplex::full(1, {1}), {{2, 1}});
    CHECK(betti(x).totals.to_string() == "1 0 0 1");
    CHECK(minimal_model(x).totals.to_string() == "1 0 0 1");

    Instance bad = spheres(two_points(), {{1, 1}});
    CHECK_THROWS_AS(betti(bad), InvalidInput);
}

TEST_CASE("sphere models realize the sphere pairs")
{
    for (int r = 0; r <= 3; ++r) {
        for (int k = 0; k <= r; ++k) {
            FactorData modelled = analyze_pair(sphere_model(r, k), Q);
            FactorData formal = sphere_pair(r, k, Q);
            CHECK(modelled.dims_a() == formal.dims_a());
            CHECK(modelled.dims_x() == formal.dims_x());
            CHECK(modelled.with_role(Role::kernel).size() == 1);
            CHECK(modelled.with_role(Role::coker).size() == 1);
        }
    }
}

TEST_CASE("oracle multiplication ranks on golden instances")
{
    auto sq = oracle_mult_ranks(disks(boundary_square()));
    CHECK(sq.at({3, 3}) == 1);
    CHECK(sq.at({0, 3}) == 2);
    CHECK(sq.at({3, 0}) == 2);
    CHECK(sq.at({0, 6}) == 1);
    auto two = oracle_mult_ranks(disks(two_points()));
    CHECK(two.at({3, 3}) == 0);
    CHECK(two.at({0, 3}) == 1);
    for (const auto& [pq, r] : sq) CHECK(sq.at({pq.second, pq.first}) == r);
}
