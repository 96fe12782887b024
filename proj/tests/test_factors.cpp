#include <random>

#include "doctest.h"
#include "gmac/chains.hpp"
#include "gmac/corpus.hpp"
#include "gmac/error.hpp"
#include "gmac/factors.hpp"

using namespace gmac;

namespace {

const Field Q = Field::rationals();

std::vector<std::size_t> with_degree(const FactorData& f, Role r, int d)
{
    std::vector<std::size_t> out;
    for (std::size_t i : f.with_role(r)) {
        if (f.degree(i) == d) out.push_back(i);
    }
    return out;
}

std::vector<CoproductTerm> terms(std::initializer_list<CoproductTerm> t, const Field& f = Q)
{
    std::vector<CoproductTerm> out(t);
    for (auto& x : out) x.coeff = Scalar(f, x.coeff.rational());
    return normalize_terms(out);
}


}  // namespace

TEST_CASE("disk and its boundary")
{
    FactorData f = analyze_pair(disk_sphere_pair(2), Q);
    CHECK(with_degree(f, Role::kernel, 1).size() == 1);
    CHECK(f.with_role(Role::kernel).size() == 1);
    CHECK(f.with_role(Role::image).size() == 1);
    CHECK(f.with_role(Role::coker).empty());
    CHECK(f.elements[f.unit].label == "u");
    CHECK(image_is_subcoalgebra(f));
}

TEST_CASE("sphere with a base point")
{
    auto x = SimplicialComplex::from_facets(4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
    auto a = SimplicialComplex::from_facets(4, {{1}});
    FactorData f = analyze_pair({x, a}, Q);
    CHECK(f.with_role(Role::kernel).empty());
    CHECK(with_degree(f, Role::coker, 2).size() == 1);
    CHECK(f.with_role(Role::coker).size() == 1);
    std::size_t c = f.with_role(Role::coker)[0];
    CHECK(f.coproduct_x[c] == terms({{c, f.unit, Scalar(Q, 1L)}, {f.unit, c, Scalar(Q, 1L)}}));
}

TEST_CASE("edge and its two endpoints")
{
    auto x = SimplicialComplex::full(2, {1, 2});
    auto a = SimplicialComplex::from_facets(2, {{1}, {2}});
    for (const Field& field : {Q, Field::prime(2), Field::prime(3)}) {
        FactorData f = analyze_pair({x, a}, field);
        REQUIRE(f.with_role(Role::kernel).size() == 1);
        std::size_t k = f.with_role(Role::kernel)[0];
        std::size_t u = f.unit;
        CHECK(f.degree(k) == 0);
        CHECK(f.with_role(Role::coker).empty());
        // The kernel class is [2]-[1] and the unit [1]; both points are grouplike.
        const Scalar one = Scalar::one(field);
        CHECK(f.coproduct_a[k] == normalize_terms({{k, k, one}, {k, u, one}, {u, k, one}}));
        CHECK(f.coproduct_a[u] == normalize_terms({{u, u, one}}));
    }
}

TEST_CASE("dimension counts and coalgebra laws on random pairs")
{
    std::mt19937_64 rng(21);
    int tested = 0;
    for (int trial = 0; trial < 40; ++trial) {
        const Field& field = trial % 3 == 0 ? Q : (trial % 3 == 1 ? Field::prime(2) : Field::prime(3));
        auto p = random_simplicial_pair(rng, 2 + static_cast<int>(rng() % 4));
        FactorData f = analyze_pair(p, field);
        GradedDims ha = Homology(plain_complex(p.a, field).complex).dims();
        GradedDims hx = Homology(plain_complex(p.x, field).complex).dims();
        auto da = f.dims_a();
        auto dx = f.dims_x();
        for (int n = 0; n < 6; ++n) {
            CHECK(ha.dim(n) == (n < static_cast<int>(da.size()) ? da[static_cast<std::size_t>(n)] : 0));
            CHECK(hx.dim(n) == (n < static_cast<int>(dx.size()) ? dx[static_cast<std::size_t>(n)] : 0));
        }
        for (const Coalgebra& c : {f.coalgebra_a(), f.coalgebra_x()}) {
            CHECK(respects_degrees(c));
            CHECK(is_counital(c));
            CHECK(is_coassociative(c));
            CHECK(is_cocommutative(c));
        }
        ++tested;
    }
    CHECK(tested == 40);
}

TEST_CASE("sphere pairs")
{
    FactorData f = sphere_pair(1, 1, Q);
    CHECK(f.degree(f.with_role(Role::coker)[0]) == 2);
    CHECK(f.degree(f.with_role(Role::kernel)[0]) == 1);
    CHECK(image_is_subcoalgebra(f));
    FactorData g = sphere_pair(2, 0, Field::prime(3));
    std::size_t k = g.with_role(Role::kernel)[0];
    CHECK(g.coproduct_a[k].size() == 3);
    for (int r = 0; r <= 3; ++r) {
        for (int kk = 0; kk <= r; ++kk) {
            FactorData s = sphere_pair(r, kk, Q);
            for (const Coalgebra& c : {s.coalgebra_a(), s.coalgebra_x()}) {
                CHECK(is_counital(c));
                CHECK(is_coassociative(c));
                CHECK(is_cocommutative(c));
                CHECK(respects_degrees(c));
            }
        }
    }
    CHECK_THROWS_AS(sphere_pair(1, 2, Q), InvalidInput);
}

TEST_CASE("sphere pair k = 0 agrees with the edge over two points")
{
    // Same Δ_A as the simplicial computation above.
    FactorData s = sphere_pair(2, 0, Q);
    FactorData e = analyze_pair({SimplicialComplex::full(2, {1, 2}), SimplicialComplex::from_facets(2, {{1}, {2}})}, Q);
    auto ks = s.with_role(Role::kernel)[0];
    auto ke = e.with_role(Role::kernel)[0];
    auto rename = [](const FactorData& f, std::size_t k) {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& t : f.coproduct_a[k]) out.emplace_back(f.elements[t.left].label.substr(0, 1), f.elements[t.right].label.substr(0, 1));
        std::sort(out.begin(), out.end());
        return out;
    };
    CHECK(rename(s, ks) == rename(e, ke));
}

TEST_CASE("raw factors")
{
    FactorData s = sphere_pair(1, 1, Q);
    FactorData back = from_raw(to_raw(s));
    CHECK(back.elements == s.elements);
    CHECK(back.coproduct_a == s.coproduct_a);
    CHECK(back.coproduct_x == s.coproduct_x);
    CHECK(back.unit == s.unit);

    RawFactor minimal;
    minimal.field = Q;
    minimal.elements = {{Role::coker, 3, "c"}, {Role::image, 0, "u"}, {Role::kernel, 2, "k"}};
    minimal.unit = "u";
    FactorData m = from_raw(minimal);
    CHECK(m.elements[0].label == "k");
    CHECK(m.elements[2].label == "c");
    CHECK(m.coproduct_x[2].size() == 2);

    RawFactor no_unit = minimal;
    no_unit.unit = "c";
    CHECK_THROWS_AS(from_raw(no_unit), InvalidInput);
    no_unit.unit = "missing";
    CHECK_THROWS_AS(from_raw(no_unit), InvalidInput);

    RawFactor bad_degree = minimal;
    bad_degree.coproduct_x["c"] = {{"c", "c", Scalar(Q, 1L)}};
    CHECK_THROWS_AS(from_raw(bad_degree), InvalidInput);

    RawFactor not_counital = minimal;
    not_counital.coproduct_x["c"] = {{"c", "u", Scalar(Q, 1L)}};
    try {
        from_raw(not_counital);
        FAIL("accepted");
    } catch (const InvalidInput& e) {
        CHECK(std::string(e.what()).find("counital") != std::string::npos);
    }

    RawFactor zero_needs_delta = minimal;
    zero_needs_delta.elements.push_back({Role::kernel, 0, "a"});
    CHECK_THROWS_AS(from_raw(zero_needs_delta), InvalidInput);
}

TEST_CASE("a raw factor whose image is not a subcoalgebra")
{
    // Three points p, q, r with q joined to p in X: u = [p], a = [q]-[p] dies,
    // and b = [r]-[p]+a is a valid but skewed image basis element.
    RawFactor raw;
    raw.field = Q;
    raw.elements = {{Role::kernel, 0, "a"}, {Role::image, 0, "u"}, {Role::image, 0, "b"}};
    raw.unit = "u";
    const Scalar one(Q, 1L), m1(Q, -1L), two(Q, 2L);
    raw.coproduct_a["a"] = {{"a", "a", one}, {"a", "u", one}, {"u", "a", one}};
    raw.coproduct_a["b"] = {{"b", "b", one}, {"b", "u", one}, {"u", "b", one},
                            {"b", "a", m1},  {"a", "b", m1}, {"a", "a", two}};
    raw.coproduct_x["b"] = {{"b", "b", one}, {"b", "u", one}, {"u", "b", one}};
    FactorData f = from_raw(raw);
    CHECK_FALSE(image_is_subcoalgebra(f));
    CHECK(is_cocommutative(f.coalgebra_a()));
}
