#include "gmac/hochster.hpp"

#include <algorithm>
#include <functional>

#include "gmac/error.hpp"

namespace gmac {

void Instance::validate() const
{
    if (k.ground_size() != m()) {
        throw InvalidInput("instance: complex has ground set [" + std::to_string(k.ground_size()) + "] but " +
                           std::to_string(m()) + " factors were given");
    }
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (!(factors[i].field == field)) {
            throw InvalidInput("instance: factor " + std::to_string(i + 1) + " is over " + factors[i].field.name() +
                               ", expected " + field.name());
        }
    }
}

VertexSet coker_support(const Instance& inst)
{
    VertexSet s;
    for (int k = 1; k <= inst.m(); ++k) {
        if (inst.factors[static_cast<std::size_t>(k - 1)].has_coker()) s = s | VertexSet::singleton(k);
    }
    return s;
}

VertexSet kernel_support(const Instance& inst)
{
    VertexSet s;
    for (int k = 1; k <= inst.m(); ++k) {
        if (inst.factors[static_cast<std::size_t>(k - 1)].has_kernel()) s = s | VertexSet::singleton(k);
    }
    return s;
}

std::vector<IndexPair> index_set(const Instance& inst)
{
    const VertexSet big_sigma = coker_support(inst);
    const VertexSet big_omega = kernel_support(inst);
    std::vector<IndexPair> out;
    for (VertexSet sigma : inst.k.simplices()) {
        if (!sigma.subset_of(big_sigma)) continue;
        const std::uint32_t free = (big_omega - sigma).bits();
        for (std::uint32_t w = free;; w = (w - 1) & free) {
            out.push_back({sigma, VertexSet(w)});
            if (w == 0) break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

Role role_at(const IndexPair& p, int k)
{
    if (p.sigma.contains(k)) return Role::coker;
    if (p.omega.contains(k)) return Role::kernel;
    return Role::image;
}

}  // namespace

std::vector<TElement> t_basis(const Instance& inst, const IndexPair& p)
{
    const int m = inst.m();
    std::vector<std::vector<std::size_t>> choices;
    for (int k = 1; k <= m; ++k) choices.push_back(inst.factors[static_cast<std::size_t>(k - 1)].with_role(role_at(p, k)));
    std::vector<TElement> out;
    TElement cur{std::vector<std::size_t>(static_cast<std::size_t>(m)), p.sigma, p.omega, 0};
    std::function<void(int)> rec = [&](int k) {
        if (k == m) {
            out.push_back(cur);
            return;
        }
        const auto& f = inst.factors[static_cast<std::size_t>(k)];
        for (std::size_t e : choices[static_cast<std::size_t>(k)]) {
            cur.x[static_cast<std::size_t>(k)] = e;
            cur.degree += f.degree(e);
            rec(k + 1);
            cur.degree -= f.degree(e);
        }
    };
    rec(0);
    std::stable_sort(out.begin(), out.end(), [](const TElement& a, const TElement& b) { return a.degree < b.degree; });
    return out;
}

std::vector<std::size_t> t_dims(const Instance& inst, const IndexPair& p)
{
    std::vector<std::size_t> acc{1};
    for (int k = 1; k <= inst.m(); ++k) {
        const auto& f = inst.factors[static_cast<std::size_t>(k - 1)];
        std::vector<std::size_t> here;
        for (std::size_t e : f.with_role(role_at(p, k))) {
            const auto d = static_cast<std::size_t>(f.degree(e));
            if (here.size() <= d) here.resize(d + 1, 0);
            ++here[d];
        }
        if (here.empty()) return {};
        std::vector<std::size_t> next(acc.size() + here.size() - 1, 0);
        for (std::size_t i = 0; i < acc.size(); ++i) {
            for (std::size_t j = 0; j < here.size(); ++j) next[i + j] += acc[i] * here[j];
        }
        acc = std::move(next);
    }
    return acc;
}

std::string t_label(const Instance& inst, const TElement& x)
{
    std::string s;
    for (std::size_t k = 0; k < x.x.size(); ++k) {
        if (k) s += "⊗";
        s += inst.factors[k].elements[x.x[k]].label;
    }
    return s.empty() ? "1" : s;
}

const BettiEntry* BettiTable::find(const IndexPair& p) const
{
    for (const auto& e : entries) {
        if (e.pair == p) return &e;
    }
    return nullptr;
}

BettiTable betti(const Instance& inst)
{
    inst.validate();
    BettiTable table;
    table.totals = GradedDims{0, {}};
    for (const IndexPair& p : index_set(inst)) {
        BettiEntry e;
        e.pair = p;
        SimplicialComplex link = hochster_link(inst.k, p.sigma, p.omega).complex;
        e.link_homology = Homology(augmented_complex(link, inst.field).complex, {false}).dims();
        std::vector<std::size_t> t = t_dims(inst, p);
        GradedDims g{0, {}};
        for (int s = e.link_homology.min_degree; s <= e.link_homology.max_degree(); ++s) {
            const std::size_t hs = e.link_homology.dim(s);
            if (hs == 0) continue;
            for (std::size_t tt = 0; tt < t.size(); ++tt) {
                const int d = s + static_cast<int>(tt) + 1;
                if (static_cast<int>(g.dims.size()) <= d) g.dims.resize(static_cast<std::size_t>(d) + 1, 0);
                g.dims[static_cast<std::size_t>(d)] += hs * t[tt];
            }
        }
        e.dims = normalized(g, 0);
        table.totals = table.totals + e.dims;
        table.entries.push_back(std::move(e));
    }
    table.totals = normalized(table.totals, 0);
    return table;
}

MinimalModel minimal_model(const Instance& inst)
{
    inst.validate();
    const int m = inst.m();
    const Field& field = inst.field;

    // Per factor: the basis of U_k as (element, shifted) pairs; shifted marks q.
    struct Gen
    {
        std::size_t element;
        bool q;
        int degree;
        bool outside_a;  // coker or q
    };
    std::vector<std::vector<Gen>> u(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
        const auto& f = inst.factors[static_cast<std::size_t>(k)];
        for (std::size_t e = 0; e < f.size(); ++e) u[static_cast<std::size_t>(k)].push_back({e, false, f.degree(e), f.role(e) == Role::coker});
        for (std::size_t e : f.with_role(Role::kernel)) u[static_cast<std::size_t>(k)].push_back({e, true, f.degree(e) + 1, true});
    }

    std::vector<std::vector<std::vector<std::size_t>>> by_degree;
    std::map<std::vector<std::size_t>, std::size_t> position;
    std::vector<std::size_t> cur(static_cast<std::size_t>(m));
    std::function<void(int, VertexSet, int)> rec = [&](int k, VertexSet outside, int degree) {
        if (k == m) {
            if (static_cast<int>(by_degree.size()) <= degree) by_degree.resize(static_cast<std::size_t>(degree) + 1);
            auto& bucket = by_degree[static_cast<std::size_t>(degree)];
            position[cur] = bucket.size();
            bucket.push_back(cur);
            return;
        }
        const auto& gens = u[static_cast<std::size_t>(k)];
        for (std::size_t g = 0; g < gens.size(); ++g) {
            VertexSet next = gens[g].outside_a ? outside | VertexSet::singleton(k + 1) : outside;
            if (!inst.k.contains(next)) continue;
            cur[static_cast<std::size_t>(k)] = g;
            rec(k + 1, next, degree + gens[g].degree);
        }
    };
    if (!inst.k.is_void()) rec(0, VertexSet(), 0);

    MinimalModel out;
    std::vector<Matrix> d;
    for (std::size_t n = 0; n < by_degree.size(); ++n) {
        const auto& cols = by_degree[n];
        out.basis_size += cols.size();
        Matrix dn(field, n == 0 ? 0 : by_degree[n - 1].size(), cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            int before = 0;
            for (int k = 0; k < m; ++k) {
                const Gen& g = u[static_cast<std::size_t>(k)][cols[j][static_cast<std::size_t>(k)]];
                if (g.q) {
                    std::vector<std::size_t> target = cols[j];
                    const auto& gens = u[static_cast<std::size_t>(k)];
                    for (std::size_t h = 0; h < gens.size(); ++h) {
                        if (!gens[h].q && gens[h].element == g.element) target[static_cast<std::size_t>(k)] = h;
                    }
                    dn.add(position.at(target), j, Scalar::sign(field, before));
                }
                before += g.degree;
            }
        }
        d.push_back(std::move(dn));
    }
    out.complex = ChainComplex(field, 0, std::move(d));
    GradedDims g{0, {}};
    for (int n = 0; n <= out.complex.max_degree(); ++n) {
        g.dims.push_back(out.complex.dim(n) - rank(out.complex.d(n)) - rank(out.complex.d(n + 1)));
    }
    out.totals = normalized(g, 0);
    return out;
}

}  // namespace gmac
