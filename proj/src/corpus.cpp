#include "gmac/corpus.hpp"

#include <algorithm>

#include "gmac/oracle.hpp"

namespace gmac {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

std::string facets_string(const SimplicialComplex& k)
{
    if (k.is_void()) return "void";
    std::string s = "[";
    bool first = true;
    for (VertexSet f : k.facets()) {
        if (!first) s += ",";
        first = false;
        s += f.to_string();
    }
    return s + "]";
}

// One factor and its short name.
std::pair<FactorData, std::string> random_factor(std::mt19937_64& rng, const Field& field, bool simplicial_only)
{
    switch (uniform(rng, 0, simplicial_only ? 2 : 3)) {
    case 0: {
        const int d = uniform(rng, 1, 3);
        return {analyze_pair(disk_sphere_pair(d), field), "disk(" + std::to_string(d) + ")"};
    }
    case 1: {
        const int d = uniform(rng, 1, 2);
        SimplicialPair p{SimplicialComplex::full(d + 1, VertexSet::range(d + 1)),
                         SimplicialComplex::full(d + 1, VertexSet::singleton(1))};
        return {analyze_pair(p, field), "simplex(" + std::to_string(d) + ")/point"};
    }
    case 2: {
        SimplicialPair p{SimplicialComplex::full(2, VertexSet::range(2)),
                         SimplicialComplex::from_facets(2, {{1}, {2}})};
        return {analyze_pair(p, field), "edge/points"};
    }
    default: {
        const int r = uniform(rng, 0, 3);
        const int k = uniform(rng, 0, r);
        return {sphere_pair(r, k, field), "sphere(" + std::to_string(r) + "," + std::to_string(k) + ")"};
    }
    }
}

}  // namespace

SimplicialComplex random_complex(std::mt19937_64& rng, int t)
{
    if (t == 0 || uniform(rng, 0, 7) == 0) return SimplicialComplex::empty_simplex(t);
    std::vector<VertexSet> facets;
    const int n = uniform(rng, 1, 4);
    for (int i = 0; i < n; ++i) {
        facets.emplace_back(static_cast<std::uint32_t>(uniform(rng, 1, (1 << t) - 1)));
    }
    return SimplicialComplex::from_facets(t, facets);
}

SimplicialPair random_simplicial_pair(std::mt19937_64& rng, int t)
{
    std::vector<VertexSet> facets;
    for (int i = 0; i < 1 + static_cast<int>(rng() % 4); ++i) {
        facets.emplace_back(static_cast<std::uint32_t>(rng() % (1U << t)) | 1U);
    }
    SimplicialComplex x = SimplicialComplex::from_facets(t, facets);
    // A: a random downward-closed subfamily that keeps vertex 1.
    std::vector<VertexSet> keep;
    for (VertexSet s : x.simplices()) {
        if (s == VertexSet{1} || rng() % 2 == 0) keep.push_back(s);
    }
    std::vector<VertexSet> closed;
    for (VertexSet s : keep) {
        bool ok = true;
        for (std::uint32_t sub = s.bits(); sub != 0; sub = (sub - 1) & s.bits()) {
            if (std::find(keep.begin(), keep.end(), VertexSet(sub)) == keep.end()) ok = false;
        }
        if (ok) closed.push_back(s);
    }
    return {x, SimplicialComplex::from_family(t, closed)};
}

std::vector<CorpusInstance> corpus(std::uint64_t seed, std::size_t count, CorpusOptions options)
{
    std::mt19937_64 rng(seed);
    const Field fields[] = {Field::rationals(), Field::prime(2), Field::prime(3)};
    std::vector<CorpusInstance> out;
    while (out.size() < count) {
        const Field& field = fields[out.size() % 3];
        const int m = uniform(rng, 1, options.max_m);
        CorpusInstance c{{field, random_complex(rng, m), {}}, {}};
        std::string names;
        for (int i = 0; i < m; ++i) {
            auto [f, name] = random_factor(rng, field, options.simplicial_only);
            c.inst.factors.push_back(std::move(f));
            names += (i ? "," : "") + name;
        }
        if (BlockComplex::count_tuples(c.inst, options.max_tuples) > options.max_tuples) continue;
        c.description = "K=" + facets_string(c.inst.k) + " factors=[" + names + "] field=" + field.name();
        out.push_back(std::move(c));
    }
    return out;
}

CorpusInstance random_sphere_instance(std::mt19937_64& rng, int max_m, int max_r, const Field& field, int min_k)
{
    const int m = uniform(rng, 1, max_m);
    CorpusInstance c{{field, random_complex(rng, m), {}}, {}};
    std::string names;
    for (int i = 0; i < m; ++i) {
        const int r = uniform(rng, min_k, max_r);
        const int k = uniform(rng, min_k, r);
        c.inst.factors.push_back(sphere_pair(r, k, field));
        names += (i ? "," : "") + ("sphere(" + std::to_string(r) + "," + std::to_string(k) + ")");
    }
    c.description = "K=" + facets_string(c.inst.k) + " factors=[" + names + "] field=" + field.name();
    return c;
}

}  // namespace gmac
