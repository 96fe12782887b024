#include "doctest.h"
#include "gmac/compare.hpp"
#include "gmac/corpus.hpp"
#include "gmac/io.hpp"

using namespace gmac;

namespace {

const std::string kFixtures = GMAC_FIXTURES_DIR;

}  // namespace

TEST_CASE("compare on the golden files")
{
    for (const char* name : {"two_points", "boundary_square", "empty_simplex", "spheres"}) {
        CAPTURE(name);
        CompareReport r = compare(load_instance(kFixtures + "/" + name + ".json"));
        CHECK(r.passed());
        CHECK(r.oracle);
        CHECK(r.oracle_ranks);
        CHECK(r.cocommutative);
    }
    CompareReport sq = compare(load_instance(kFixtures + "/boundary_square.json"));
    CHECK(ranks_to_string(sq.structure_ranks) == "(0,0)=1 (0,3)=2 (0,6)=1 (3,0)=2 (3,3)=1 (6,0)=1");
}

TEST_CASE("compare without an oracle model")
{
    CompareReport r = compare(load_instance(kFixtures + "/skewed_raw.json"));
    CHECK_FALSE(r.oracle);
    CHECK(r.betti_agree());
    CHECK(r.passed());
    CHECK(r.note == "oracle needs simplicial factors");
}

TEST_CASE("compare on a void complex")
{
    Instance inst = load_instance(kFixtures + "/two_points.json");
    inst.k = SimplicialComplex::void_complex(2);
    CompareReport r = compare(inst);
    CHECK(r.betti.total() == 0);
    CHECK(r.model.total() == 0);
    CHECK(r.cover.total() == 0);
    CHECK(r.passed());
}

TEST_CASE("compare over a corpus, ranks skipped")
{
    CompareOptions o;
    o.ring = false;
    for (const auto& c : corpus(11, 12)) {
        CAPTURE(c.description);
        CompareReport r = compare(c.inst, o);
        CHECK(r.betti_agree());
        CHECK_FALSE(r.oracle_ranks);
    }
}

TEST_CASE("report text")
{
    CompareReport r = compare(load_instance(kFixtures + "/two_points.json"));
    const std::string s = r.to_string();
    CHECK(s.find("oracle:              1 0 0 1\n") != std::string::npos);
    CHECK(s.substr(s.size() - 13) == "verify: PASS\n");
    CHECK(ranks_to_string({}) == "none");
}
