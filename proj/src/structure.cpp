#include "gmac/structure.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <tuple>

#include "gmac/error.hpp"

namespace gmac {

VertexSet SimplexCover::intersection(VertexSet mu, int m) const
{
    VertexSet out = VertexSet::range(m);
    for (int j : mu.vertices()) out = out & simplices[static_cast<std::size_t>(j - 1)];
    return out;
}

SimplexCover all_simplices_cover(const SimplicialComplex& k)
{
    if (k.is_void()) throw InvalidInput("cover: the void complex has no simplex cover");
    return {k.simplices()};
}

SimplexCover facet_cover(const SimplicialComplex& k)
{
    if (k.is_void()) throw InvalidInput("cover: the void complex has no simplex cover");
    return {k.facets()};
}

void validate_cover(const SimplicialComplex& k, const SimplexCover& c)
{
    for (VertexSet s : c.simplices) {
        if (!k.contains(s)) throw InvalidInput("cover: " + s.to_string() + " is not a simplex of K");
    }
    for (VertexSet f : k.facets()) {
        bool covered = std::any_of(c.simplices.begin(), c.simplices.end(), [&](VertexSet s) { return f.subset_of(s); });
        if (!covered) throw InvalidInput("cover: facet " + f.to_string() + " is not covered");
    }
}

SimplexCover default_cover(const SimplicialComplex& k)
{
    return k.size() <= static_cast<std::size_t>(kAllSimplicesLimit) ? all_simplices_cover(k) : facet_cover(k);
}

// ------------------------------------------------------------------ Δ^T

TElement make_t_element(const Instance& inst, std::vector<std::size_t> x)
{
    TElement t;
    for (std::size_t k = 0; k < x.size(); ++k) {
        const auto& f = inst.factors[k];
        const int v = static_cast<int>(k) + 1;
        if (f.role(x[k]) == Role::coker) t.sigma = t.sigma | VertexSet::singleton(v);
        if (f.role(x[k]) == Role::kernel) t.omega = t.omega | VertexSet::singleton(v);
        t.degree += f.degree(x[k]);
    }
    t.x = std::move(x);
    return t;
}

namespace {

std::vector<TTerm> delta_t_impl(const Instance& inst, const TElement& x, bool with_sign)
{
    const std::size_t m = x.x.size();
    const Field& field = inst.field;
    std::vector<TTerm> out;
    std::vector<std::size_t> front(m), back(m);
    std::function<void(std::size_t, int, long, Scalar)> rec = [&](std::size_t k, int back_degree, long eps, Scalar c) {
        if (k == m) {
            out.push_back({make_t_element(inst, front), make_t_element(inst, back),
                           with_sign ? Scalar::sign(field, eps) * c : c});
            return;
        }
        const auto& f = inst.factors[k];
        const std::size_t e = x.x[k];
        const auto& terms = f.role(e) == Role::coker ? f.coproduct_x[e] : f.coproduct_a[e];
        for (const auto& t : terms) {
            front[k] = t.left;
            back[k] = t.right;
            const int dl = f.degree(t.left);
            rec(k + 1, back_degree + f.degree(t.right), eps + static_cast<long>(back_degree) * dl, c * t.coeff);
        }
    };
    rec(0, 0, 0, Scalar::one(field));
    return out;
}

// x is a cell generator over μ iff its cokernel coordinates lie in ∩σ_j and
// its kernel coordinates avoid it.
bool valid_at(const TElement& x, VertexSet eta)
{
    return x.sigma.subset_of(eta) && !x.omega.intersects(eta);
}

VertexSet cover_indices_containing(const SimplexCover& c, VertexSet sigma)
{
    VertexSet j;
    for (int i = 1; i <= c.size(); ++i) {
        if (sigma.subset_of(c.simplices[static_cast<std::size_t>(i - 1)])) j = j | VertexSet::singleton(i);
    }
    return j;
}

template <class F>
void for_each_nonempty_subset(VertexSet s, F&& f)
{
    const std::uint32_t bits = s.bits();
    for (std::uint32_t sub = bits; sub != 0; sub = (sub - 1) & bits) f(VertexSet(sub));
}

void add_term(SparseTensor& t, std::size_t a, std::size_t b, const Scalar& c)
{
    auto [it, inserted] = t.try_emplace({a, b}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) t.erase(it);
    }
}

void add_term(SparseVector& v, std::size_t a, const Scalar& c)
{
    auto [it, inserted] = v.try_emplace(a, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) v.erase(it);
    }
}

}  // namespace

std::vector<TTerm> delta_T(const Instance& inst, const TElement& x)
{
    return delta_t_impl(inst, x, true);
}

// ------------------------------------------------------------------ cover complex

CoverComplex::CoverComplex(const Instance& inst, SimplexCover cover) : inst_(inst), cover_(std::move(cover))
{
    inst.validate();
    if (cover_.size() > kMaxCoverSize) {
        throw InvalidInput("cover complex: cover has " + std::to_string(cover_.size()) + " members, limit is " +
                           std::to_string(kMaxCoverSize));
    }
    validate_cover(inst.k, cover_);
    const int m = inst.m();

    for (const IndexPair& p : index_set(inst)) {
        const VertexSet j = cover_indices_containing(cover_, p.sigma);
        for (const TElement& x : t_basis(inst, p)) {
            const std::size_t e = elements_.size();
            element_index_[x.x] = e;
            elements_.push_back(x);
            for_each_nonempty_subset(j, [&](VertexSet mu) {
                if (!valid_at(x, cover_.intersection(mu, m))) return;
                const int s = mu.size() - 1;
                cells_.push_back({mu, e, s, s + x.degree});
            });
        }
    }
    std::sort(cells_.begin(), cells_.end(), [](const Cell& a, const Cell& b) {
        return std::tie(a.degree, a.mu, a.element) < std::tie(b.degree, b.mu, b.element);
    });
    std::vector<std::size_t> count;
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        cell_index_[{cells_[i].mu.bits(), cells_[i].element}] = i;
        const auto d = static_cast<std::size_t>(cells_[i].degree);
        if (count.size() <= d) count.resize(d + 1, 0);
        position_.push_back(count[d]++);
    }
}

std::size_t CoverComplex::find(VertexSet mu, std::size_t element) const
{
    auto it = cell_index_.find({mu.bits(), element});
    return it == cell_index_.end() ? SimplicialChains::npos : it->second;
}

SparseVector CoverComplex::boundary(std::size_t cell) const
{
    const Cell& c = cells_[cell];
    SparseVector out;
    if (c.s == 0) return out;
    int k = 0;
    for (int v : c.mu.vertices()) {
        const std::size_t face = find(c.mu - VertexSet::singleton(v), c.element);
        if (face != SimplicialChains::npos) add_term(out, face, Scalar::sign(inst_.field, k));
        ++k;
    }
    return out;
}

SparseTensor CoverComplex::coproduct(std::size_t cell) const
{
    const Cell& c = cells_[cell];
    SparseTensor out;
    const auto splits = aw_split(c.mu);
    for (const TTerm& t : delta_T(inst_, elements_[c.element])) {
        auto li = element_index_.find(t.left.x);
        auto ri = element_index_.find(t.right.x);
        if (li == element_index_.end() || ri == element_index_.end()) continue;
        for (int k = 0; k <= c.s; ++k) {
            const auto& [front, back] = splits[static_cast<std::size_t>(k)];
            // Restrictions that land on a kernel coordinate inside ∩σ_j vanish.
            const std::size_t a = find(front, li->second);
            const std::size_t b = find(back, ri->second);
            if (a == SimplicialChains::npos || b == SimplicialChains::npos) continue;
            add_term(out, a, b, Scalar::sign(inst_.field, static_cast<long>(c.s - k) * t.left.degree) * t.coeff);
        }
    }
    return out;
}

SparseTensor CoverComplex::tensor_boundary(const SparseTensor& t) const
{
    SparseTensor out;
    for (const auto& [ab, c] : t) {
        const auto [a, b] = ab;
        for (const auto& [a2, x] : boundary(a)) add_term(out, a2, b, c * x);
        const Scalar sign = Scalar::sign(inst_.field, cells_[a].degree);
        for (const auto& [b2, y] : boundary(b)) add_term(out, a, b2, sign * c * y);
    }
    return out;
}

bool CoverComplex::d_squared_zero() const
{
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        SparseVector dd;
        for (const auto& [j, c] : boundary(i)) {
            for (const auto& [l, x] : boundary(j)) add_term(dd, l, c * x);
        }
        if (!dd.empty()) return false;
    }
    return true;
}

bool CoverComplex::coproduct_commutes() const
{
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        SparseTensor lhs = tensor_boundary(coproduct(i));
        SparseTensor rhs;
        for (const auto& [j, c] : boundary(i)) {
            for (const auto& [ab, x] : coproduct(j)) add_term(rhs, ab.first, ab.second, c * x);
        }
        if (lhs != rhs) return false;
    }
    return true;
}

ChainComplex CoverComplex::chain_complex() const
{
    std::vector<std::size_t> count;
    for (const Cell& c : cells_) {
        const auto d = static_cast<std::size_t>(c.degree);
        if (count.size() <= d) count.resize(d + 1, 0);
        ++count[d];
    }
    std::vector<Matrix> d;
    for (std::size_t n = 0; n < count.size(); ++n) d.emplace_back(inst_.field, n == 0 ? 0 : count[n - 1], count[n]);
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        const auto n = static_cast<std::size_t>(cells_[i].degree);
        for (const auto& [j, c] : boundary(i)) d[n].add(position_[j], position_[i], c);
    }
    return ChainComplex(inst_.field, 0, std::move(d));
}

// ------------------------------------------------------------------ components

GradedDims Components::totals() const
{
    GradedDims g{0, {}};
    for (const Component& c : items) {
        GradedDims h = supports[c.support].homology.dims();
        h.min_degree += c.x.degree;
        g = g + h;
    }
    return normalized(g, 0);
}

Components components(const Instance& inst, const SimplexCover& cover)
{
    inst.validate();
    validate_cover(inst.k, cover);
    const int m = inst.m();
    const int n = cover.size();
    Components out;
    out.cover = cover;
    for (const IndexPair& p : index_set(inst)) {
        std::vector<TElement> xs = t_basis(inst, p);
        if (xs.empty()) continue;
        const VertexSet j = cover_indices_containing(cover, p.sigma);
        if (j.empty() || p.omega.intersects(cover.intersection(j, m))) {
            // No cover index set carries these generators; their summand must vanish.
            SimplicialComplex link = hochster_link(inst.k, p.sigma, p.omega).complex;
            if (Homology(augmented_complex(link, inst.field).complex, {false}).dims().total() != 0) {
                throw InternalError("cover starves (" + p.sigma.to_string() + "," + p.omega.to_string() +
                                    ") although its link has homology");
            }
            out.starved.push_back(p);
            continue;
        }
        std::vector<VertexSet> killed;
        for_each_nonempty_subset(j, [&](VertexSet lambda) {
            if (p.omega.intersects(cover.intersection(lambda, m))) killed.push_back(lambda);
        });
        Support s{p, j, SimplicialComplex::from_family(n, killed), {}, {}};
        s.chains = relative_full_complex(j, s.killed, inst.field);
        s.homology = Homology(s.chains.complex, {false});
        const std::size_t idx = out.supports.size();
        out.supports.push_back(std::move(s));
        for (TElement& x : xs) out.items.push_back({std::move(x), idx});
    }
    return out;
}

// ------------------------------------------------------------------ homology coproduct

namespace {

// Sparse columns of the dual cocycles of a homology, per degree and chain position.
using DualColumns = std::vector<std::vector<std::vector<std::pair<std::size_t, Scalar>>>>;

DualColumns dual_columns(const Support& s)
{
    DualColumns out;
    const ChainComplex& c = s.chains.complex;
    if (c.empty()) return out;
    for (int n = c.min_degree(); n <= c.max_degree(); ++n) {
        const Matrix& f = s.homology.dual(n);
        std::vector<std::vector<std::pair<std::size_t, Scalar>>> cols(c.dim(n));
        for (std::size_t r = 0; r < f.rows(); ++r) {
            for (std::size_t col = 0; col < f.cols(); ++col) {
                if (!f.is_zero_at(r, col)) cols[col].emplace_back(r, f.at(r, col));
            }
        }
        out.push_back(std::move(cols));
    }
    return out;
}

// A chain λ⊗x of the component `comp`, as (component, λ).
using ChainKey = std::pair<std::size_t, std::uint32_t>;

}  // namespace

StructureTable homology_coproduct(const Instance& inst, StructureOptions options)
{
    inst.validate();
    if (inst.k.is_void()) return StructureTable{inst.field, {}, {}, 0, {}};
    return homology_coproduct(inst, default_cover(inst.k), options);
}

StructureTable homology_coproduct(const Instance& inst, const SimplexCover& cover, StructureOptions options)
{
    const Field& field = inst.field;
    StructureTable table{field, components(inst, cover), {}, 0, {}};
    const Components& comps = table.comps;

    std::map<std::vector<std::size_t>, std::size_t> comp_of;
    for (std::size_t c = 0; c < comps.items.size(); ++c) comp_of[comps.items[c].x.x] = c;

    // first_class[c][s] is the basis index of the first class of component c in degree s.
    std::vector<std::map<int, std::size_t>> first_class(comps.items.size());
    for (std::size_t c = 0; c < comps.items.size(); ++c) {
        const Homology& h = comps.supports[comps.items[c].support].homology;
        const GradedDims dims = h.dims();
        for (int s = dims.min_degree; s <= dims.max_degree(); ++s) {
            if (dims.dim(s) == 0) continue;
            first_class[c][s] = table.basis.size();
            for (std::size_t i = 0; i < dims.dim(s); ++i) {
                table.basis.push_back({c, s, i, s + comps.items[c].x.degree});
            }
        }
    }

    std::vector<DualColumns> duals;
    for (const Support& s : comps.supports) duals.push_back(dual_columns(s));

    bool found_unit = false;
    for (std::size_t h = 0; h < table.basis.size(); ++h) {
        const ClassLabel& cl = table.basis[h];
        const TElement& x = comps.items[cl.component].x;
        if (cl.degree == 0 && x.sigma.empty() && x.omega.empty()) {
            bool all_units = true;
            for (std::size_t k = 0; k < x.x.size(); ++k) all_units = all_units && x.x[k] == inst.factors[k].unit;
            if (all_units) {
                table.unit = h;
                found_unit = true;
            }
        }
    }
    if (!found_unit && !table.basis.empty()) throw InternalError("homology coproduct: no unit class");

    auto chain_position = [&](std::size_t comp, VertexSet lambda) {
        return comps.supports[comps.items[comp].support].chains.index_of(lambda);
    };

    table.coproduct.resize(table.basis.size());
    for (std::size_t h = 0; h < table.basis.size(); ++h) {
        const ClassLabel& cl = table.basis[h];
        const Support& sup = comps.supports[comps.items[cl.component].support];
        const TElement& x = comps.items[cl.component].x;
        const int s = cl.s;
        const Matrix& reps = sup.homology.reps(s);
        const auto& cells = sup.chains.basis[static_cast<std::size_t>(s - sup.chains.complex.min_degree())];
        const std::vector<TTerm> dt = delta_t_impl(inst, x, !options.drop_t_sign);

        std::map<std::pair<ChainKey, ChainKey>, Scalar> chain;
        std::map<std::pair<std::size_t, std::size_t>, Scalar> coords;
        for (std::size_t pos = 0; pos < reps.rows(); ++pos) {
            if (reps.is_zero_at(pos, cl.index)) continue;
            const Scalar z = reps.at(pos, cl.index);
            const VertexSet lambda = cells[pos];
            const auto splits = aw_split(lambda);
            for (const TTerm& t : dt) {
                auto li = comp_of.find(t.left.x);
                auto ri = comp_of.find(t.right.x);
                if (li == comp_of.end() || ri == comp_of.end()) continue;  // starved side
                for (int k = 0; k <= s; ++k) {
                    const auto& [front, back] = splits[static_cast<std::size_t>(k)];
                    const std::size_t pf = chain_position(li->second, front);
                    const std::size_t pb = chain_position(ri->second, back);
                    if (pf == SimplicialChains::npos || pb == SimplicialChains::npos) continue;
                    const Scalar c = Scalar::sign(field, static_cast<long>(s - k) * t.left.degree) * t.coeff * z;
                    auto key = std::make_pair(ChainKey{li->second, front.bits()}, ChainKey{ri->second, back.bits()});
                    auto [it, inserted] = chain.try_emplace(key, c);
                    if (!inserted) it->second += c;

                    const auto& fcol = duals[comps.items[li->second].support][static_cast<std::size_t>(k)][pf];
                    const auto& bcol = duals[comps.items[ri->second].support][static_cast<std::size_t>(s - k)][pb];
                    for (const auto& [i, fv] : fcol) {
                        for (const auto& [j, bv] : bcol) {
                            const std::size_t a = first_class[li->second].at(k) + i;
                            const std::size_t b = first_class[ri->second].at(s - k) + j;
                            auto [ct, ins] = coords.try_emplace({a, b}, c * fv * bv);
                            if (!ins) ct->second += c * fv * bv;
                        }
                    }
                }
            }
        }

        // The image of a cycle must be a cycle of the tensor square.
        std::map<std::pair<ChainKey, ChainKey>, Scalar> dchain;
        auto accumulate = [&](const std::pair<ChainKey, ChainKey>& key, const Scalar& c) {
            auto [it, inserted] = dchain.try_emplace(key, c);
            if (!inserted) it->second += c;
        };
        for (const auto& [key, c] : chain) {
            if (c.is_zero()) continue;
            const auto& [left, right] = key;
            const auto& lsup = comps.supports[comps.items[left.first].support];
            const auto& rsup = comps.supports[comps.items[right.first].support];
            const VertexSet lv(left.second), rv(right.second);
            const Vector dl = simplex_boundary(lsup.chains, lv);
            const Vector dr = simplex_boundary(rsup.chains, rv);
            const int ldeg = lv.size() - 1;
            if (ldeg > 0) {
                const auto& lower = lsup.chains.basis[static_cast<std::size_t>(ldeg - 1)];
                for (std::size_t i = 0; i < dl.size(); ++i) {
                    if (!dl[i].is_zero()) accumulate({{left.first, lower[i].bits()}, right}, c * dl[i]);
                }
            }
            const int rdeg = rv.size() - 1;
            if (rdeg > 0) {
                const auto& lower = rsup.chains.basis[static_cast<std::size_t>(rdeg - 1)];
                const Scalar sign = Scalar::sign(field, ldeg + comps.items[left.first].x.degree);
                for (std::size_t i = 0; i < dr.size(); ++i) {
                    if (!dr[i].is_zero()) accumulate({left, {right.first, lower[i].bits()}}, sign * c * dr[i]);
                }
            }
        }
        for (const auto& [key, c] : dchain) {
            if (!c.is_zero()) throw InternalError("homology coproduct: image of a cycle is not a cycle");
        }

        std::vector<CoproductTerm> terms;
        for (const auto& [ab, c] : coords) {
            if (!c.is_zero()) terms.push_back({ab.first, ab.second, c});
        }
        table.coproduct[h] = normalize_terms(std::move(terms));
    }
    return table;
}

std::map<std::pair<std::size_t, std::size_t>, std::vector<std::pair<std::size_t, Scalar>>> StructureTable::product()
    const
{
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::pair<std::size_t, Scalar>>> out;
    for (std::size_t h = 0; h < coproduct.size(); ++h) {
        for (const auto& t : coproduct[h]) {
            const long e = static_cast<long>(basis[t.left].degree) * basis[t.right].degree;
            out[{t.left, t.right}].emplace_back(h, Scalar::sign(field, e) * t.coeff);
        }
    }
    return out;
}

MultRanks StructureTable::mult_ranks() const
{
    std::map<int, std::vector<std::size_t>> by_degree;
    for (std::size_t h = 0; h < basis.size(); ++h) by_degree[basis[h].degree].push_back(h);
    std::map<std::size_t, std::size_t> pos;
    for (const auto& [d, hs] : by_degree) {
        for (std::size_t i = 0; i < hs.size(); ++i) pos[hs[i]] = i;
    }
    MultRanks ranks;
    for (const auto& [p, hp] : by_degree) {
        for (const auto& [q, hq] : by_degree) {
            auto target = by_degree.find(p + q);
            if (target == by_degree.end()) {
                ranks[{p, q}] = 0;
                continue;
            }
            Matrix mat(field, hp.size() * hq.size(), target->second.size());
            for (std::size_t col = 0; col < target->second.size(); ++col) {
                for (const auto& t : coproduct[target->second[col]]) {
                    if (basis[t.left].degree != p || basis[t.right].degree != q) continue;
                    mat.add(pos.at(t.left) * hq.size() + pos.at(t.right), col, t.coeff);
                }
            }
            ranks[{p, q}] = rank(mat);
        }
    }
    return ranks;
}

Coalgebra StructureTable::coalgebra() const
{
    Coalgebra c{field, {}, unit, coproduct};
    for (const auto& b : basis) c.degrees.push_back(b.degree);
    return c;
}

GradedDims StructureTable::totals() const
{
    GradedDims g{0, {}};
    for (const auto& b : basis) {
        if (static_cast<int>(g.dims.size()) <= b.degree) g.dims.resize(static_cast<std::size_t>(b.degree) + 1, 0);
        ++g.dims[static_cast<std::size_t>(b.degree)];
    }
    return normalized(g, 0);
}

std::string StructureTable::label(const Instance& inst, std::size_t h) const
{
    const ClassLabel& cl = basis[h];
    const Component& c = comps.items[cl.component];
    const IndexPair& p = comps.supports[c.support].pair;
    std::string s = "(" + p.sigma.to_string() + "," + p.omega.to_string() + ") " + t_label(inst, c.x) + " s" +
                    std::to_string(cl.s);
    if (comps.supports[c.support].homology.dim(cl.s) > 1) s += "." + std::to_string(cl.index);
    return s;
}

// ------------------------------------------------------------------ coalgebra laws

Coalgebra t_coalgebra(const Instance& inst, std::vector<TElement>* basis)
{
    std::vector<TElement> elems;
    for (const IndexPair& p : index_set(inst)) {
        for (TElement& x : t_basis(inst, p)) elems.push_back(std::move(x));
    }
    std::map<std::vector<std::size_t>, std::size_t> index;
    for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i].x] = i;

    Coalgebra c{inst.field, {}, 0, {}};
    std::vector<std::size_t> units;
    for (const auto& f : inst.factors) units.push_back(f.unit);
    for (std::size_t i = 0; i < elems.size(); ++i) {
        c.degrees.push_back(elems[i].degree);
        if (elems[i].x == units) c.unit = i;
        std::vector<CoproductTerm> terms;
        for (const TTerm& t : delta_T(inst, elems[i])) {
            terms.push_back({index.at(t.left.x), index.at(t.right.x), t.coeff});
        }
        c.delta.push_back(normalize_terms(std::move(terms)));
    }
    if (basis) *basis = std::move(elems);
    return c;
}

CoalgebraCheck coalgebra_check(const Instance& inst)
{
    inst.validate();
    CoalgebraCheck r;
    r.hypothesis = std::all_of(inst.factors.begin(), inst.factors.end(),
                               [](const FactorData& f) { return image_is_subcoalgebra(f); });
    if (!r.hypothesis || inst.k.is_void()) return r;
    const Coalgebra t = t_coalgebra(inst);
    r.t_cocommutative = is_cocommutative(t);
    r.t_coassociative = is_coassociative(t);
    const Coalgebra h = homology_coproduct(inst).coalgebra();
    r.h_cocommutative = is_cocommutative(h);
    r.h_coassociative = is_coassociative(h);
    r.h_counital = is_counital(h);
    return r;
}

std::string CoalgebraCheck::to_string() const
{
    if (!hypothesis) return "hypothesis fails; checks skipped";
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    return std::string("hypothesis holds; T cocommutative: ") + yn(t_cocommutative) +
           ", T coassociative: " + yn(t_coassociative) + ", H cocommutative: " + yn(h_cocommutative) +
           ", H coassociative: " + yn(h_coassociative) + ", H counital: " + yn(h_counital);
}

}  // namespace gmac
