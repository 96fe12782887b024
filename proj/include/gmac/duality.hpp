#pragma once

// Complementary sphere-pair instances and the dimension-level checks of
// Alexander duality, both combinatorial and for polyhedral products.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gmac/chains.hpp"
#include "gmac/hochster.hpp"

namespace gmac {

/// Z_K((S^{r_1+1},S^{k_1}),...,(S^{r_m+1},S^{k_m})) over a field.
struct SpherePairInstance
{
    SimplicialComplex k;
    std::vector<std::pair<int, int>> params;  // (r_i, k_i), 0 <= k_i <= r_i
    Field field;

    /// Throws InvalidInput on bad parameters or a ground-size mismatch.
    void validate() const;
    Instance instance() const;
    /// Σ (r_i + 1), the dimension of the ambient product of spheres.
    int ambient_dimension() const;

    friend bool operator==(const SpherePairInstance&, const SpherePairInstance&) = default;
};

/// The sphere parameters of an instance whose factors are all sphere pairs.
std::optional<SpherePairInstance> as_sphere_instance(const Instance& inst);

/// (K*, (r_i, r_i - k_i)).
SpherePairInstance complementary_instance(const SpherePairInstance& s);

struct DualityEntry
{
    IndexPair pair;         // (σ, ω) of M
    IndexPair dual_pair;    // (σ̃, ω) of M^c
    GradedDims dims;        // dim H^{σ,ω}_d(M), from degree 0
    GradedDims dual_dims;   // dim H^{σ̃,ω}_d(M^c), from degree 0
    bool passed = false;    // dims.dim(d) == dual_dims.dim(R - d - 1) for all d
};

struct DualityReport
{
    int ambient_dimension = 0;  // R
    std::vector<DualityEntry> entries;  // ω ≠ φ, index_set order
    /// Offsets c with dims.dim(d) == dual_dims.dim(c - d) on every pair; R - 1 expected.
    std::vector<int> offsets;
    bool passed() const;
    std::string to_string() const;
};

DualityReport duality_check(const SpherePairInstance& s);

struct AdReport
{
    int t = 0;
    GradedDims homology;       // reduced homology of L, from degree -1
    GradedDims dual_homology;  // reduced homology of L*, from degree -1
    /// Shifts c with dim H̃_s(L) = dim H̃_{c-s}(L*) for all s, within [-2, t + 2].
    std::vector<int> shifts;
    /// t - 3 is among the shifts.
    bool expected_shift_holds() const;
};

AdReport ad_check(const SimplicialComplex& l, const Field& field = Field::rationals());

}  // namespace gmac
