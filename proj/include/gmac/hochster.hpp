#pragma once

// Bigraded Betti numbers of Z_K(X,A) from the decomposition over pairs
// (σ,ω), and the small chain model whose homology must agree with them.

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "gmac/chains.hpp"
#include "gmac/factors.hpp"
#include "gmac/simplicial.hpp"

namespace gmac {

struct Instance
{
    Field field;
    /// Lives on ground [m], m = factors.size().
    SimplicialComplex k;
    std::vector<FactorData> factors;

    int m() const { return static_cast<int>(factors.size()); }
    /// Throws InvalidInput on a factor count or field mismatch.
    void validate() const;
};

struct IndexPair
{
    VertexSet sigma;
    VertexSet omega;

    friend bool operator==(const IndexPair&, const IndexPair&) = default;
    friend std::strong_ordering operator<=>(const IndexPair& a, const IndexPair& b)
    {
        if (auto c = a.sigma.bits() <=> b.sigma.bits(); c != 0) return c;
        return a.omega.bits() <=> b.omega.bits();
    }
};

/// Σ = {k | coker_k ≠ 0}
VertexSet coker_support(const Instance& inst);
/// Ω = {k | ker_k ≠ 0}
VertexSet kernel_support(const Instance& inst);

/// All (σ,ω) with σ ∈ K, σ ⊆ Σ, ω ⊆ Ω, σ∩ω = φ, ordered by (σ, ω) bitmasks.
std::vector<IndexPair> index_set(const Instance& inst);

/// A tensor x = x_1⊗...⊗x_m of factor basis elements (indices into each
/// factor's elements).
struct TElement
{
    std::vector<std::size_t> x;
    VertexSet sigma;  // coordinates in coker
    VertexSet omega;  // coordinates in kernel
    int degree = 0;

    friend bool operator==(const TElement&, const TElement&) = default;
};

/// Basis of T^{σ,ω}, ordered by degree, then lexicographically.
std::vector<TElement> t_basis(const Instance& inst, const IndexPair& p);
/// dim T^{σ,ω}_t indexed by t from 0.
std::vector<std::size_t> t_dims(const Instance& inst, const IndexPair& p);
/// Label such as "k1⊗u⊗c2".
std::string t_label(const Instance& inst, const TElement& x);

struct BettiEntry
{
    IndexPair pair;
    /// Reduced homology of K_{σ,ω}, from degree -1.
    GradedDims link_homology;
    /// dim H^{σ,ω}_d(M) from degree 0.
    GradedDims dims;
};

struct BettiTable
{
    std::vector<BettiEntry> entries;  // index_set order, including zero entries
    GradedDims totals;                // from degree 0

    const BettiEntry* find(const IndexPair& p) const;
};

BettiTable betti(const Instance& inst);

struct MinimalModel
{
    ChainComplex complex;
    GradedDims totals;
    std::size_t basis_size = 0;
};

/// The chain model Σ_{σ∈K} ⊗_k V_k with V_k = kernel⊕image⊕coker⊕q (q a
/// shifted copy of the kernel with d q = k) for k ∈ σ and kernel⊕image otherwise.
MinimalModel minimal_model(const Instance& inst);

}  // namespace gmac
