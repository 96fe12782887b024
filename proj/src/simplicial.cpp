#include "gmac/simplicial.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <unordered_set>

#include "gmac/error.hpp"

namespace gmac {

namespace {

void check_ground(int ground_size)
{
    if (ground_size < 0 || ground_size > kMaxGround) {
        throw InvalidInput("ground set size " + std::to_string(ground_size) + " outside [0, " +
                           std::to_string(kMaxGround) + "]");
    }
}

void check_in_ground(VertexSet s, int ground_size)
{
    if (!s.subset_of(VertexSet::range(ground_size))) {
        throw InvalidInput("simplex " + s.to_string() + " has a vertex outside the ground set [" +
                           std::to_string(ground_size) + "]");
    }
}

// Calls f on every subset of s.
template <class F>
void for_each_subset(VertexSet s, F&& f)
{
    const std::uint32_t bits = s.bits();
    std::uint32_t sub = bits;
    while (true) {
        f(VertexSet(sub));
        if (sub == 0) break;
        sub = (sub - 1) & bits;
    }
}

}  // namespace

VertexSet::VertexSet(std::initializer_list<int> vertices)
{
    for (int v : vertices) {
        if (v < 1 || v > kMaxGround) throw InvalidInput("vertex " + std::to_string(v) + " out of range");
        bits_ |= 1U << (v - 1);
    }
}

VertexSet VertexSet::from_vertices(const std::vector<int>& vertices)
{
    std::uint32_t bits = 0;
    for (int v : vertices) {
        if (v < 1 || v > kMaxGround) throw InvalidInput("vertex " + std::to_string(v) + " out of range");
        bits |= 1U << (v - 1);
    }
    return VertexSet(bits);
}

std::vector<int> VertexSet::vertices() const
{
    std::vector<int> out;
    std::uint32_t b = bits_;
    while (b) {
        out.push_back(std::countr_zero(b) + 1);
        b &= b - 1;
    }
    return out;
}

std::string VertexSet::to_string() const
{
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int v : vertices()) {
        os << (first ? "" : ",") << v;
        first = false;
    }
    os << '}';
    return os.str();
}

// ------------------------------------------------------------------ complex

SimplicialComplex::SimplicialComplex() : simplices_{VertexSet()} {}

SimplicialComplex SimplicialComplex::from_family(int ground_size, std::vector<VertexSet> family)
{
    check_ground(ground_size);
    std::unordered_set<std::uint32_t> seen;
    seen.insert(0);
    for (VertexSet s : family) {
        check_in_ground(s, ground_size);
        if (seen.count(s.bits())) continue;
        for_each_subset(s, [&](VertexSet t) { seen.insert(t.bits()); });
    }
    SimplicialComplex k;
    k.ground_ = ground_size;
    k.simplices_.clear();
    k.simplices_.reserve(seen.size());
    for (std::uint32_t b : seen) k.simplices_.emplace_back(b);
    std::sort(k.simplices_.begin(), k.simplices_.end());
    return k;
}

SimplicialComplex SimplicialComplex::from_facets(int ground_size, const std::vector<VertexSet>& facets,
                                                 bool void_flag)
{
    check_ground(ground_size);
    if (void_flag) {
        if (!facets.empty()) throw InvalidInput("void complex cannot have facets");
        return void_complex(ground_size);
    }
    return from_family(ground_size, facets);
}

SimplicialComplex SimplicialComplex::void_complex(int ground_size)
{
    check_ground(ground_size);
    SimplicialComplex k;
    k.ground_ = ground_size;
    k.is_void_ = true;
    k.simplices_.clear();
    return k;
}

SimplicialComplex SimplicialComplex::empty_simplex(int ground_size)
{
    check_ground(ground_size);
    SimplicialComplex k;
    k.ground_ = ground_size;
    return k;
}

SimplicialComplex SimplicialComplex::full(int ground_size, VertexSet s)
{
    return from_family(ground_size, {s});
}

bool SimplicialComplex::contains(VertexSet s) const
{
    return std::binary_search(simplices_.begin(), simplices_.end(), s);
}

VertexSet SimplicialComplex::vertex_set() const
{
    VertexSet out;
    for (VertexSet s : simplices_) out = out | s;
    return out;
}

std::vector<VertexSet> SimplicialComplex::facets() const
{
    std::vector<VertexSet> out;
    // Canonical order lists larger simplices later, so scan from the back.
    for (auto it = simplices_.rbegin(); it != simplices_.rend(); ++it) {
        bool maximal = std::none_of(out.begin(), out.end(), [&](VertexSet f) { return it->subset_of(f); });
        if (maximal) out.push_back(*it);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int SimplicialComplex::dimension() const
{
    if (is_void_) return -2;
    return simplices_.back().size() - 1;
}

std::vector<VertexSet> SimplicialComplex::simplices_of_dimension(int d) const
{
    std::vector<VertexSet> out;
    for (VertexSet s : simplices_) {
        if (s.size() == d + 1) out.push_back(s);
    }
    return out;
}

SimplicialComplex SimplicialComplex::with_ground(int ground_size) const
{
    check_ground(ground_size);
    for (VertexSet s : simplices_) check_in_ground(s, ground_size);
    SimplicialComplex k = *this;
    k.ground_ = ground_size;
    return k;
}

std::string SimplicialComplex::to_string() const
{
    if (is_void_) return "{}";
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (VertexSet s : simplices_) {
        os << (first ? "" : ",") << (s.empty() ? std::string("φ") : s.to_string());
        first = false;
    }
    os << '}';
    return os.str();
}

// ---------------------------------------------------------------- operators

SimplicialComplex link(const SimplicialComplex& k, VertexSet sigma)
{
    if (!k.contains(sigma)) throw InvalidInput("link: " + sigma.to_string() + " is not a simplex");
    std::vector<VertexSet> family;
    for (VertexSet eta : k.simplices()) {
        if (!eta.intersects(sigma) && k.contains(eta | sigma)) family.push_back(eta);
    }
    return SimplicialComplex::from_family(k.ground_size(), std::move(family));
}

SimplicialComplex star(const SimplicialComplex& k, VertexSet sigma)
{
    if (!k.contains(sigma)) throw InvalidInput("star: " + sigma.to_string() + " is not a simplex");
    std::vector<VertexSet> family;
    for (VertexSet tau : k.simplices()) {
        if (k.contains(tau | sigma)) family.push_back(tau);
    }
    return SimplicialComplex::from_family(k.ground_size(), std::move(family));
}

SimplicialComplex restrict_to(const SimplicialComplex& k, VertexSet omega)
{
    if (k.is_void()) return k;
    std::vector<VertexSet> family;
    family.reserve(k.size());
    for (VertexSet eta : k.simplices()) family.push_back(eta & omega);
    return SimplicialComplex::from_family(k.ground_size(), std::move(family));
}

HochsterLink hochster_link(const SimplicialComplex& k, VertexSet sigma, VertexSet omega)
{
    if (sigma.intersects(omega)) {
        throw InvalidInput("hochster_link: σ=" + sigma.to_string() + " meets ω=" + omega.to_string());
    }
    SimplicialComplex c = restrict_to(link(k, sigma), omega);
    VertexSet v = c.vertex_set();
    return {std::move(c), v};
}

SimplicialComplex alexander_dual(const SimplicialComplex& k, int m)
{
    check_ground(m);
    check_in_ground(k.vertex_set(), m);
    const VertexSet all = VertexSet::range(m);
    std::vector<VertexSet> family;
    bool any = false;
    for_each_subset(all, [&](VertexSet s) {
        if (!k.contains(s)) {
            family.push_back(all - s);
            any = true;
        }
    });
    if (!any) return SimplicialComplex::void_complex(m);
    return SimplicialComplex::from_family(m, std::move(family));
}

SimplicialComplex complex_union(const SimplicialComplex& a, const SimplicialComplex& b)
{
    const int ground = std::max(a.ground_size(), b.ground_size());
    if (a.is_void()) return b.with_ground(ground);
    if (b.is_void()) return a.with_ground(ground);
    std::vector<VertexSet> family = a.simplices();
    family.insert(family.end(), b.simplices().begin(), b.simplices().end());
    return SimplicialComplex::from_family(ground, std::move(family));
}

SimplicialComplex complex_intersection(const SimplicialComplex& a, const SimplicialComplex& b)
{
    const int ground = std::max(a.ground_size(), b.ground_size());
    if (a.is_void() || b.is_void()) return SimplicialComplex::void_complex(ground);
    std::vector<VertexSet> family;
    for (VertexSet s : a.simplices()) {
        if (b.contains(s)) family.push_back(s);
    }
    return SimplicialComplex::from_family(ground, std::move(family));
}

std::vector<SimplicialComplex> all_complexes(int t)
{
    if (t < 0 || t > 5) throw InvalidInput("all_complexes supports t <= 5");
    std::vector<VertexSet> order;
    for (std::uint32_t b = 1; b < (1U << t); ++b) order.emplace_back(b);
    std::sort(order.begin(), order.end());

    std::vector<SimplicialComplex> out;
    out.push_back(SimplicialComplex::void_complex(t));
    std::vector<VertexSet> chosen{VertexSet()};
    std::unordered_set<std::uint32_t> in{0};
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == order.size()) {
            out.push_back(SimplicialComplex::from_family(t, chosen));
            return;
        }
        rec(i + 1);
        VertexSet s = order[i];
        bool faces_present = true;
        for (int v : s.vertices()) {
            if (!in.count((s - VertexSet::singleton(v)).bits())) {
                faces_present = false;
                break;
            }
        }
        if (!faces_present) return;
        chosen.push_back(s);
        in.insert(s.bits());
        rec(i + 1);
        in.erase(s.bits());
        chosen.pop_back();
    };
    rec(0);
    return out;
}

}  // namespace gmac
