#pragma once

// Chain complexes over a field, their homology with explicit representatives,
// and simplicial chains (augmented, plain and relative).

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "gmac/exactlin.hpp"
#include "gmac/simplicial.hpp"

namespace gmac {

/// Dimensions indexed by integer degree, starting at min_degree.
struct GradedDims
{
    int min_degree = 0;
    std::vector<std::size_t> dims;

    std::size_t dim(int n) const;
    int max_degree() const { return min_degree + static_cast<int>(dims.size()) - 1; }
    std::size_t total() const;
    /// "1 0 2" from min_degree up to the last nonzero entry.
    std::string to_string() const;

    friend bool operator==(const GradedDims&, const GradedDims&) = default;
};

/// Degreewise sum; the result starts at the smaller min_degree.
GradedDims operator+(const GradedDims& a, const GradedDims& b);
/// Trailing zeros dropped, leading degrees below `from` discarded, missing ones zero.
GradedDims normalized(const GradedDims& g, int from);

class ChainComplex
{
public:
    ChainComplex() = default;
    /// boundaries[i] is d_n : C_n -> C_{n-1} for n = min_degree + i; the lowest one
    /// must have zero rows. Throws InternalError unless d∘d = 0.
    ChainComplex(Field field, int min_degree, std::vector<Matrix> boundaries);

    const Field& field() const { return field_; }
    int min_degree() const { return min_degree_; }
    int max_degree() const { return min_degree_ + static_cast<int>(d_.size()) - 1; }
    std::size_t dim(int n) const;
    GradedDims dims() const;
    /// d_n as a dim(n-1) x dim(n) matrix; zero matrix outside the stored range.
    Matrix d(int n) const;
    bool empty() const { return d_.empty(); }

private:
    Field field_;
    int min_degree_ = 0;
    std::vector<Matrix> d_;
};

/// Simplicial chains with their basis: basis[i] holds the simplices of degree
/// complex.min_degree() + i, in canonical order.
struct SimplicialChains
{
    ChainComplex complex;
    std::vector<std::vector<VertexSet>> basis;

    /// Position of s in the basis of its degree, or npos.
    std::size_t index_of(VertexSet s) const;
    /// Degree of simplex s in this complex (|s| - 1).
    static int degree_of(VertexSet s) { return s.size() - 1; }
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

/// Augmented chains: degree -1 carries φ; void gives the zero complex.
SimplicialChains augmented_complex(const SimplicialComplex& k, const Field& field);
/// Ordinary chains starting in degree 0 (φ omitted).
SimplicialChains plain_complex(const SimplicialComplex& k, const Field& field);
/// Chains of 2^μ modulo those of L, with φ always quotiented out. Throws if L ⊄ 2^μ.
SimplicialChains relative_full_complex(VertexSet mu, const SimplicialComplex& l, const Field& field);

/// Boundary of a single simplex in the given chains, as a vector on degree |s|-2.
Vector simplex_boundary(const SimplicialChains& c, VertexSet s);

struct HomologyOptions
{
    /// Build solvers that return boundary witnesses from decompose().
    bool witnesses = true;
};

class Homology
{
public:
    struct Decomposition
    {
        Vector coordinates;
        /// w with z = Σ c_i rep_i + d(w); empty when witnesses are disabled.
        Vector witness;
    };

    Homology() = default;
    explicit Homology(const ChainComplex& c, HomologyOptions options = {});

    const Field& field() const { return field_; }
    GradedDims dims() const;
    std::size_t dim(int n) const;
    /// Columns are cycle representatives of the basis of H_n.
    const Matrix& reps(int n) const;
    /// Rows are cocycles φ_i with φ_i(rep_j) = δ_ij and φ_i(boundaries) = 0.
    const Matrix& dual(int n) const;

    bool is_cycle(int n, const Vector& z) const;
    /// Coordinates of a cycle's class; no cycle check.
    Vector coordinates(int n, const Vector& z) const;
    /// Throws InvalidInput on a non-cycle.
    Decomposition decompose(int n, const Vector& z) const;

private:
    struct Degree
    {
        Matrix reps;
        Matrix dual;
        SpanSolver boundary_solver;
    };
    const Degree* find(int n) const;

    Field field_;
    ChainComplex complex_;
    bool witnesses_ = true;
    int min_degree_ = 0;
    std::vector<Degree> degrees_;
    Matrix empty_;
};

/// A degreewise linear map between chain complexes; maps[i] acts in degree
/// min_degree + i and missing degrees are zero.
struct ChainMap
{
    int min_degree = 0;
    std::vector<Matrix> maps;
};

/// Matrices of the induced map on homology, indexed from the source's min_degree.
/// Throws InvalidInput if the map does not commute with the boundaries.
std::vector<Matrix> induced_map(const ChainMap& f, const ChainComplex& src, const ChainComplex& dst,
                                const Homology& hsrc, const Homology& hdst);

/// Inclusion of simplicial chains, given bases that share simplices.
ChainMap inclusion_map(const SimplicialChains& sub, const SimplicialChains& super);

using AwTerm = std::pair<VertexSet, VertexSet>;
/// Front/back faces {i0..ik}⊗{ik..is}, k = 0..s, of a nonempty simplex.
std::vector<AwTerm> aw_split(VertexSet s);
/// aw_split for every nonempty simplex of 2^μ, in canonical order.
std::vector<std::pair<VertexSet, std::vector<AwTerm>>> aw_diagonal(VertexSet mu);

}  // namespace gmac
