#pragma once

// Simplex covers of K, the cover chain complex with its coproduct, the
// per-generator components it splits into, and the resulting coalgebra
// structure on H_*(Z_K(X,A)) together with the dual ring on H^*.

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gmac/chains.hpp"
#include "gmac/hochster.hpp"
#include "gmac/oracle.hpp"

namespace gmac {

/// Ordered simplices σ_1..σ_n of K; repetition and φ allowed.
struct SimplexCover
{
    std::vector<VertexSet> simplices;

    int size() const { return static_cast<int>(simplices.size()); }
    /// ∩_{j∈μ} σ_j over the 1-based cover indices in μ (all of [m] for μ = φ).
    VertexSet intersection(VertexSet mu, int m) const;
};

/// Every simplex of K, φ included, in canonical order. Throws on void K.
SimplexCover all_simplices_cover(const SimplicialComplex& k);
/// The facets of K in canonical order. Throws on void K.
SimplexCover facet_cover(const SimplicialComplex& k);
/// Throws InvalidInput unless every member is in K and every facet is covered.
void validate_cover(const SimplicialComplex& k, const SimplexCover& c);
inline constexpr int kMaxCoverSize = 12;
/// Largest |K| for which default_cover uses every simplex.
inline constexpr int kAllSimplicesLimit = 8;

/// All simplices when |K| <= kAllSimplicesLimit, facets otherwise.
SimplexCover default_cover(const SimplicialComplex& k);

/// Sparse combination of basis indices.
using SparseVector = std::map<std::size_t, Scalar>;
/// Sparse combination of pairs of basis indices.
using SparseTensor = std::map<std::pair<std::size_t, std::size_t>, Scalar>;

/// Formal sum of T-basis tuples x'⊗x''.
struct TTerm
{
    TElement left;
    TElement right;
    Scalar coeff;
};

/// Tensor of per-factor coproducts (Δ_X on cokernel coordinates, Δ_A on the
/// others) with sign ε = Σ_{u<v} |x''_u||x'_v|.
std::vector<TTerm> delta_T(const Instance& inst, const TElement& x);

/// The element of T with the given per-factor indices.
TElement make_t_element(const Instance& inst, std::vector<std::size_t> x);

/// Cells μ⊗x of the cover complex: μ a nonempty subset of the cover indices,
/// x a Künneth basis tuple of H_*(M_μ).
class CoverComplex
{
public:
    struct Cell
    {
        VertexSet mu;
        std::size_t element;  // index into elements()
        int s = 0;            // |μ| - 1
        int degree = 0;       // s + |x|
    };

    /// Throws InvalidInput when the cover has more than kMaxCoverSize members.
    CoverComplex(const Instance& inst, SimplexCover cover);

    const SimplexCover& cover() const { return cover_; }
    const std::vector<Cell>& cells() const { return cells_; }
    const std::vector<TElement>& elements() const { return elements_; }
    std::size_t find(VertexSet mu, std::size_t element) const;

    SparseVector boundary(std::size_t cell) const;
    SparseTensor coproduct(std::size_t cell) const;
    /// (d⊗d) with the Koszul sign on total degree.
    SparseTensor tensor_boundary(const SparseTensor& t) const;

    bool d_squared_zero() const;
    /// (d⊗d)Δ = Δd on every cell.
    bool coproduct_commutes() const;

    /// The whole complex graded by total degree; dense, for small covers.
    ChainComplex chain_complex() const;

private:
    Instance inst_;
    SimplexCover cover_;
    std::vector<TElement> elements_;
    std::map<std::vector<std::size_t>, std::size_t> element_index_;
    std::vector<Cell> cells_;
    std::map<std::pair<std::uint32_t, std::size_t>, std::size_t> cell_index_;
    std::vector<std::size_t> position_;  // index of a cell within its total degree
};

/// Killed complex and relative homology shared by all x of one (σ,ω).
struct Support
{
    IndexPair pair;
    VertexSet mu_max;
    /// {λ ⊆ μ_max | ω ∩ ∩_{j∈λ} σ_j ≠ φ} ∪ {φ}, on the cover's ground set.
    SimplicialComplex killed;
    SimplicialChains chains;
    Homology homology;
};

struct Component
{
    TElement x;
    std::size_t support;  // index into Components::supports
};

struct Components
{
    SimplexCover cover;
    std::vector<Support> supports;
    std::vector<Component> items;  // index_set order, then t_basis order
    /// Pairs with nonempty T but no valid cover index set.
    std::vector<IndexPair> starved;

    /// Sum over components of relative homology shifted by |x|.
    GradedDims totals() const;
};

/// Throws InternalError if a starved pair has nonzero link homology.
Components components(const Instance& inst, const SimplexCover& cover);

struct StructureOptions
{
    /// Mutation hook for tests: drop the Koszul sign ε in Δ^T.
    bool drop_t_sign = false;
};

/// Homology classes of M: relative class `index` in degree s of component
/// `component`, of total degree s + |x|.
struct ClassLabel
{
    std::size_t component;
    int s;
    std::size_t index;
    int degree;
};

struct StructureTable
{
    Field field;
    Components comps;
    std::vector<ClassLabel> basis;  // by component, then s, then index
    std::size_t unit = 0;
    /// Δ(h) for each basis class.
    std::vector<std::vector<CoproductTerm>> coproduct;

    /// e_a·e_b = Σ_h (-1)^{|a||b|} C^h_{a,b} e_h on the dual basis: product[(a,b)] = {(h,c)}.
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::pair<std::size_t, Scalar>>> product() const;
    MultRanks mult_ranks() const;
    Coalgebra coalgebra() const;
    GradedDims totals() const;
    std::string label(const Instance& inst, std::size_t h) const;
};

StructureTable homology_coproduct(const Instance& inst, StructureOptions options = {});
StructureTable homology_coproduct(const Instance& inst, const SimplexCover& cover, StructureOptions options = {});

/// T_*(M) with Δ^T as a coalgebra, basis in index_set then t_basis order.
Coalgebra t_coalgebra(const Instance& inst, std::vector<TElement>* basis = nullptr);

/// Outcome of testing the splitting hypothesis (each image is a subcoalgebra
/// of H_*(A_k) carried isomorphically onto its image in H_*(X_k)) and, when
/// it holds, the graded coalgebra laws it promises.
struct CoalgebraCheck
{
    bool hypothesis = false;
    bool t_cocommutative = false;
    bool t_coassociative = false;
    bool h_cocommutative = false;
    bool h_coassociative = false;
    bool h_counital = false;

    bool passed() const
    {
        return hypothesis && t_cocommutative && t_coassociative && h_cocommutative && h_coassociative && h_counital;
    }
    std::string to_string() const;
};

CoalgebraCheck coalgebra_check(const Instance& inst);

}  // namespace gmac
