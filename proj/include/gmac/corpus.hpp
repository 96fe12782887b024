#pragma once

// Seeded random instances shared by the tests, the acceptance run and the CLI.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gmac/factors.hpp"
#include "gmac/hochster.hpp"

namespace gmac {

struct CorpusOptions
{
    int max_m = 5;
    /// Instances whose oracle block complex exceeds this are redrawn.
    std::size_t max_tuples = 2500;
    /// Draw only factors given by explicit simplicial pairs (no sphere_pair).
    bool simplicial_only = false;
};

struct CorpusInstance
{
    Instance inst;
    /// e.g. "K=[{1,2},{3}] factors=[disk(2),sphere(2,1),edge/points] field=GF(3)"
    std::string description;
};

/// Random facets on [t]; about one draw in eight is the empty-simplex complex.
SimplicialComplex random_complex(std::mt19937_64& rng, int t);

/// X: up to four random facets on [t], all through vertex 1; A: a random
/// subcomplex of X containing vertex 1.
SimplicialPair random_simplicial_pair(std::mt19937_64& rng, int t);

/// The `count` instances of a seeded corpus; fields cycle through Q, GF(2), GF(3).
std::vector<CorpusInstance> corpus(std::uint64_t seed, std::size_t count, CorpusOptions options = {});

/// Random sphere-pair instance with r_i <= max_r.
CorpusInstance random_sphere_instance(std::mt19937_64& rng, int max_m, int max_r, const Field& field,
                                      int min_k = 0);

}  // namespace gmac
