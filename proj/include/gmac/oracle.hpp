#pragma once

// Brute-force chains of Z_K(X,A) for simplicial factor pairs: the span of
// the blocks ⊗_k C_*(Y_k) inside ⊗_k C_*(X_k), with Y_k = X_k on σ and A_k off it.

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "gmac/chains.hpp"
#include "gmac/factors.hpp"
#include "gmac/hochster.hpp"

namespace gmac {

/// (S^{r+1}, S^k) triangulated as ∂Δ^{r+2} on r+3 vertices with A the
/// boundary of the face on the first k+2 vertices.
SimplicialPair sphere_model(int r, int k);

/// The simplicial pair behind a factor; throws InvalidInput for raw factors.
SimplicialPair oracle_pair(const FactorData& f);

struct OracleOptions
{
    std::size_t max_tuples = 200000;
};

/// (p,q) -> rank of H^p ⊗ H^q -> H^{p+q}, for all p,q with H^p, H^q nonzero.
using MultRanks = std::map<std::pair<int, int>, std::size_t>;

class BlockComplex
{
public:
    /// Throws InvalidInput for non-simplicial factors or when the basis
    /// exceeds options.max_tuples.
    explicit BlockComplex(const Instance& inst, OracleOptions options = {});

    const ChainComplex& complex() const { return complex_; }
    std::size_t size() const;
    /// Betti numbers from degree 0.
    GradedDims betti() const;
    MultRanks mult_ranks() const;

    /// Number of tuples an instance would need, without building anything;
    /// stops counting past `limit`.
    static std::size_t count_tuples(const Instance& inst, std::size_t limit);

private:
    using Tuple = std::vector<std::size_t>;  // simplex index per factor

    Field field_;
    std::vector<std::vector<VertexSet>> cells_; // nonempty simplices of each X_k
    std::vector<std::vector<Tuple>> tuples_;    // by degree
    std::map<Tuple, std::size_t> position_;
    ChainComplex complex_;
};

GradedDims oracle_betti(const Instance& inst, OracleOptions options = {});
MultRanks oracle_mult_ranks(const Instance& inst, OracleOptions options = {});

}  // namespace gmac
