#pragma once

// Homology-level data of one factor pair (X, A): the kernel, image and
// cokernel of H_*(A) -> H_*(X) and the coproducts on H_*(A) and H_*(X).

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "gmac/exactlin.hpp"
#include "gmac/simplicial.hpp"

namespace gmac {

struct CoproductTerm
{
    std::size_t left = 0;
    std::size_t right = 0;
    Scalar coeff;

    friend bool operator==(const CoproductTerm&, const CoproductTerm&) = default;
};

/// A graded coalgebra with a distinguished grouplike unit, given by structure
/// constants: delta[i] lists the terms of Δ(e_i) with nonzero coefficients,
/// sorted by (left, right).
struct Coalgebra
{
    Field field;
    std::vector<int> degrees;
    std::size_t unit = 0;
    std::vector<std::vector<CoproductTerm>> delta;

    std::size_t size() const { return degrees.size(); }
};

/// (ε⊗1)Δ = 1 = (1⊗ε)Δ with ε dual to the unit.
bool is_counital(const Coalgebra& c);
bool is_coassociative(const Coalgebra& c);
/// τΔ = Δ with τ(x⊗y) = (-1)^{|x||y|} y⊗x.
bool is_cocommutative(const Coalgebra& c);
/// Every term of Δ(e_i) has degrees adding up to |e_i|.
bool respects_degrees(const Coalgebra& c);

/// Sorts terms, merges duplicates and drops zeros.
std::vector<CoproductTerm> normalize_terms(std::vector<CoproductTerm> terms);

enum class Role { kernel, image, coker };
std::string role_name(Role r);

struct FactorElement
{
    Role role = Role::image;
    int degree = 0;
    std::string label;

    friend bool operator==(const FactorElement&, const FactorElement&) = default;
};

struct SimplicialPair
{
    SimplicialComplex x;
    SimplicialComplex a;
};

/// Elements are ordered kernel, image, cokernel, each by degree. Coproduct
/// terms index into `elements`: Δ_A is defined on kernel and image elements
/// and only involves them, Δ_X likewise on image and cokernel elements.
struct FactorData
{
    Field field;
    std::vector<FactorElement> elements;
    std::size_t unit = 0;
    std::vector<std::vector<CoproductTerm>> coproduct_a;
    std::vector<std::vector<CoproductTerm>> coproduct_x;
    /// "simplicial_pair", "disk_sphere(n)", "sphere_pair(r,k)" or "raw".
    std::string provenance;
    /// Present when the factor came from a simplicial pair.
    std::optional<SimplicialPair> pair;
    /// Present for sphere_pair factors.
    std::optional<std::pair<int, int>> sphere;

    std::size_t size() const { return elements.size(); }
    Role role(std::size_t i) const { return elements[i].role; }
    int degree(std::size_t i) const { return elements[i].degree; }
    bool in_a(std::size_t i) const { return elements[i].role != Role::coker; }
    bool in_x(std::size_t i) const { return elements[i].role != Role::kernel; }
    std::vector<std::size_t> with_role(Role r) const;
    bool has_kernel() const { return !with_role(Role::kernel).empty(); }
    bool has_coker() const { return !with_role(Role::coker).empty(); }
    std::optional<std::size_t> find(const std::string& label) const;

    /// H_*(A) with basis kernel ∪ image, and H_*(X) with basis image ∪ coker,
    /// in element order; `index` maps coalgebra positions back to elements.
    Coalgebra coalgebra_a(std::vector<std::size_t>* index = nullptr) const;
    Coalgebra coalgebra_x(std::vector<std::size_t>* index = nullptr) const;

    /// Graded dimensions of H_*(A) and H_*(X), indexed by degree from 0.
    std::vector<std::size_t> dims_a() const;
    std::vector<std::size_t> dims_x() const;
};

/// Homology of A ⊆ X, the inclusion-induced map and both coproducts from
/// Alexander-Whitney diagonals on cycle representatives.
FactorData analyze_pair(const SimplicialPair& pair, const Field& field);

/// (S^{r+1}, S^k) with the standard inclusion, 0 <= k <= r.
FactorData sphere_pair(int r, int k, const Field& field);

/// (Δ^n, ∂Δ^n) as a simplicial pair on n+1 vertices, n >= 1.
SimplicialPair disk_sphere_pair(int n);

struct RawFactor
{
    Field field;
    std::vector<FactorElement> elements;
    std::string unit;
    /// label -> terms (left label, right label, coefficient); positive-degree
    /// elements left out default to primitive, the unit to u⊗u.
    std::map<std::string, std::vector<std::tuple<std::string, std::string, Scalar>>> coproduct_a;
    std::map<std::string, std::vector<std::tuple<std::string, std::string, Scalar>>> coproduct_x;
};

/// Validates and orders raw content. Throws InvalidInput naming the problem.
FactorData from_raw(const RawFactor& raw);

/// Inverse of from_raw for any FactorData.
RawFactor to_raw(const FactorData& f);

/// The splitting hypothesis: Δ_A maps every image element into image⊗image,
/// where it agrees with Δ_X.
bool image_is_subcoalgebra(const FactorData& f);

}  // namespace gmac
