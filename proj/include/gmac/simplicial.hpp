#pragma once

// Abstract simplicial complexes on a ground set [m] = {1..m}, m <= 30.

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace gmac {

inline constexpr int kMaxGround = 30;

/// A subset of [m], stored as a bitmask (vertex v <-> bit v-1).
class VertexSet
{
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint32_t bits) : bits_(bits) {}
    VertexSet(std::initializer_list<int> vertices);

    static VertexSet from_vertices(const std::vector<int>& vertices);
    /// {1..n}
    static constexpr VertexSet range(int n)
    {
        return VertexSet(n >= 32 ? ~0U : ((1U << n) - 1U));
    }
    static constexpr VertexSet singleton(int v) { return VertexSet(1U << (v - 1)); }

    constexpr std::uint32_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool contains(int v) const { return (bits_ >> (v - 1)) & 1U; }
    constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }
    /// Largest vertex, 0 for the empty set.
    constexpr int max_vertex() const { return 32 - std::countl_zero(bits_); }

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }

    /// Vertices in increasing order.
    std::vector<int> vertices() const;
    /// "{1,3}" or "{}".
    std::string to_string() const;

    friend constexpr bool operator==(VertexSet, VertexSet) = default;
    /// Canonical order: by cardinality, then by bitmask.
    friend constexpr std::strong_ordering operator<=>(VertexSet a, VertexSet b)
    {
        if (auto c = a.size() <=> b.size(); c != 0) return c;
        return a.bits_ <=> b.bits_;
    }

private:
    std::uint32_t bits_ = 0;
};

/// A downward-closed family of subsets of [m]. The void complex {} has no
/// simplices at all; every other complex contains the empty simplex.
class SimplicialComplex
{
public:
    /// The complex {φ} on ground [0].
    SimplicialComplex();

    static SimplicialComplex from_facets(int ground_size, const std::vector<VertexSet>& facets,
                                         bool void_flag = false);
    static SimplicialComplex void_complex(int ground_size);
    /// {φ}
    static SimplicialComplex empty_simplex(int ground_size);
    /// 2^s on ground [ground_size].
    static SimplicialComplex full(int ground_size, VertexSet s);
    /// Any family; closes it downward and adds φ.
    static SimplicialComplex from_family(int ground_size, std::vector<VertexSet> family);

    int ground_size() const { return ground_; }
    bool is_void() const { return is_void_; }
    /// Simplices (including φ unless void) in canonical order.
    const std::vector<VertexSet>& simplices() const { return simplices_; }
    std::size_t size() const { return simplices_.size(); }
    bool contains(VertexSet s) const;
    /// Union of all simplices.
    VertexSet vertex_set() const;
    /// Maximal simplices in canonical order; {φ} has the single facet φ.
    std::vector<VertexSet> facets() const;
    /// -1 for {φ}; -2 for the void complex.
    int dimension() const;
    std::vector<VertexSet> simplices_of_dimension(int d) const;

    /// Same simplices, different ground set; throws if a vertex falls outside.
    SimplicialComplex with_ground(int ground_size) const;

    std::string to_string() const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    int ground_ = 0;
    bool is_void_ = false;
    std::vector<VertexSet> simplices_;
};

/// {η ∈ K | η∪σ ∈ K, η∩σ = φ}; throws if σ ∉ K.
SimplicialComplex link(const SimplicialComplex& k, VertexSet sigma);
/// {τ ∈ K | σ∪τ ∈ K}; throws if σ ∉ K.
SimplicialComplex star(const SimplicialComplex& k, VertexSet sigma);
/// {η∩ω | η ∈ K}
SimplicialComplex restrict_to(const SimplicialComplex& k, VertexSet omega);

struct HochsterLink
{
    SimplicialComplex complex;
    /// Vertex set of the complex, a subset of ω.
    VertexSet vertices;
};

/// link_K(σ)|_ω, for σ ∈ K with σ∩ω = φ.
HochsterLink hochster_link(const SimplicialComplex& k, VertexSet sigma, VertexSet omega);

/// {[m]∖σ | σ ⊆ [m], σ ∉ K}
SimplicialComplex alexander_dual(const SimplicialComplex& k, int m);

SimplicialComplex complex_union(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex complex_intersection(const SimplicialComplex& a, const SimplicialComplex& b);

/// Every simplicial complex on ground [t] (including {} and {φ}), t <= 5.
std::vector<SimplicialComplex> all_complexes(int t);

}  // namespace gmac
