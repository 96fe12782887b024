#pragma once

// Runs every pipeline on one instance and compares basis-free statistics:
// Betti numbers degreewise and multiplication ranks per (p,q).

#include <optional>
#include <string>

#include "gmac/chains.hpp"
#include "gmac/hochster.hpp"
#include "gmac/oracle.hpp"

namespace gmac {

struct CompareOptions
{
    OracleOptions oracle;
    /// Also compare multiplication ranks (needs the oracle's ring computation).
    bool ring = true;
};

struct CompareReport
{
    GradedDims betti;         // decomposition over (σ,ω)
    GradedDims model;         // minimal chain model
    GradedDims cover;         // cover complex components
    std::optional<GradedDims> oracle;
    MultRanks structure_ranks;
    std::optional<MultRanks> oracle_ranks;
    /// The homology coproduct is graded cocommutative, as for any space.
    bool cocommutative = false;
    /// Why the oracle did not run, or an internal failure of a pipeline.
    std::string note;
    bool failed_internally = false;

    bool betti_agree() const;
    bool ranks_agree() const;
    bool passed() const;
    std::string to_string() const;
};

CompareReport compare(const Instance& inst, CompareOptions options = {});

/// "(0,3)=2 (3,0)=2 (3,3)=1", nonzero entries only.
std::string ranks_to_string(const MultRanks& r);

}  // namespace gmac
