#include "gmac/oracle.hpp"

#include <functional>

#include "gmac/error.hpp"

namespace gmac {

SimplicialPair sphere_model(int r, int k)
{
    if (k < 0 || r < k) throw InvalidInput("sphere model: need 0 <= k <= r");
    if (r + 3 > kMaxGround) throw InvalidInput("sphere model: r too large");
    auto boundary = [](int ground, int n) {
        const VertexSet all = VertexSet::range(n);
        std::vector<VertexSet> facets;
        for (int v = 1; v <= n; ++v) facets.push_back(all - VertexSet::singleton(v));
        return SimplicialComplex::from_facets(ground, facets);
    };
    return {boundary(r + 3, r + 3), boundary(r + 3, k + 2)};
}

SimplicialPair oracle_pair(const FactorData& f)
{
    if (f.pair) return *f.pair;
    if (f.sphere) return sphere_model(f.sphere->first, f.sphere->second);
    throw InvalidInput("oracle: factor of kind '" + f.provenance + "' has no simplicial model");
}

namespace {

struct FactorCells
{
    std::vector<VertexSet> cells;  // nonempty simplices of X
    std::vector<bool> in_a;
};

std::vector<FactorCells> factor_cells(const Instance& inst)
{
    std::vector<FactorCells> out;
    for (const auto& f : inst.factors) {
        SimplicialPair p = oracle_pair(f);
        FactorCells fc;
        for (VertexSet s : p.x.simplices()) {
            if (s.empty()) continue;
            fc.cells.push_back(s);
            fc.in_a.push_back(p.a.contains(s));
        }
        out.push_back(std::move(fc));
    }
    return out;
}

// Calls visit(tuple, degree) for every tuple whose non-A coordinates form a
// simplex of K; stops early once visit returns false.
template <class Visit>
void for_each_tuple(const Instance& inst, const std::vector<FactorCells>& cells, Visit&& visit)
{
    const int m = inst.m();
    std::vector<std::size_t> cur(static_cast<std::size_t>(m));
    bool stop = false;
    std::function<void(int, VertexSet, int)> rec = [&](int k, VertexSet outside, int degree) {
        if (stop) return;
        if (k == m) {
            if (!visit(cur, degree)) stop = true;
            return;
        }
        const auto& fc = cells[static_cast<std::size_t>(k)];
        for (std::size_t i = 0; i < fc.cells.size() && !stop; ++i) {
            VertexSet next = fc.in_a[i] ? outside : outside | VertexSet::singleton(k + 1);
            if (!inst.k.contains(next)) continue;
            cur[static_cast<std::size_t>(k)] = i;
            rec(k + 1, next, degree + fc.cells[i].size() - 1);
        }
    };
    if (!inst.k.is_void()) rec(0, VertexSet(), 0);
}

}  // namespace

std::size_t BlockComplex::count_tuples(const Instance& inst, std::size_t limit)
{
    auto cells = factor_cells(inst);
    std::size_t count = 0;
    for_each_tuple(inst, cells, [&](const std::vector<std::size_t>&, int) { return ++count <= limit; });
    return count;
}

BlockComplex::BlockComplex(const Instance& inst, OracleOptions options) : field_(inst.field)
{
    inst.validate();
    auto cells = factor_cells(inst);

    std::size_t count = 0;
    for_each_tuple(inst, cells, [&](const std::vector<std::size_t>& t, int degree) {
        if (++count > options.max_tuples) return false;
        if (static_cast<int>(tuples_.size()) <= degree) tuples_.resize(static_cast<std::size_t>(degree) + 1);
        Tuple key(t.begin(), t.end());
        position_[key] = tuples_[static_cast<std::size_t>(degree)].size();
        tuples_[static_cast<std::size_t>(degree)].push_back(key);
        return true;
    });
    if (count > options.max_tuples) {
        throw InvalidInput("oracle: block complex exceeds " + std::to_string(options.max_tuples) + " tuples");
    }

    std::vector<std::map<std::uint32_t, std::size_t>> cell_index(cells.size());
    for (std::size_t k = 0; k < cells.size(); ++k) {
        for (std::size_t i = 0; i < cells[k].cells.size(); ++i) cell_index[k][cells[k].cells[i].bits()] = i;
    }
    for (auto& fc : cells) cells_.push_back(std::move(fc.cells));

    std::vector<Matrix> d;
    for (std::size_t n = 0; n < tuples_.size(); ++n) {
        const auto& cols = tuples_[n];
        Matrix dn(field_, n == 0 ? 0 : tuples_[n - 1].size(), cols.size());
        for (std::size_t j = 0; j < cols.size() && n > 0; ++j) {
            int before = 0;
            for (std::size_t k = 0; k < cols[j].size(); ++k) {
                VertexSet s = cells_[k][cols[j][k]];
                int i = 0;
                for (int v : s.vertices()) {
                    VertexSet face = s - VertexSet::singleton(v);
                    if (!face.empty()) {
                        Tuple t = cols[j];
                        t[k] = cell_index[k].at(face.bits());
                        dn.add(position_.at(t), j, Scalar::sign(field_, before + i));
                    }
                    ++i;
                }
                before += s.size() - 1;
            }
        }
        d.push_back(std::move(dn));
    }
    complex_ = ChainComplex(field_, 0, std::move(d));
}

std::size_t BlockComplex::size() const
{
    std::size_t n = 0;
    for (const auto& t : tuples_) n += t.size();
    return n;
}

GradedDims BlockComplex::betti() const
{
    GradedDims g{0, {}};
    for (int n = 0; n <= complex_.max_degree(); ++n) {
        g.dims.push_back(complex_.dim(n) - rank(complex_.d(n)) - rank(complex_.d(n + 1)));
    }
    return normalized(g, 0);
}

MultRanks BlockComplex::mult_ranks() const
{
    Homology h(complex_, {false});
    const int top = complex_.max_degree();

    // Sparse columns of the dual cocycles: per degree, per tuple position.
    std::vector<std::vector<std::vector<std::pair<std::size_t, Scalar>>>> dual(static_cast<std::size_t>(top) + 1);
    for (int n = 0; n <= top; ++n) {
        const Matrix& f = h.dual(n);
        auto& cols = dual[static_cast<std::size_t>(n)];
        cols.assign(complex_.dim(n), {});
        for (std::size_t c = 0; c < f.cols(); ++c) {
            for (std::size_t r = 0; r < f.rows(); ++r) {
                if (!f.is_zero_at(r, c)) cols[c].emplace_back(r, f.at(r, c));
            }
        }
    }

    // Per-factor splits of each cell: (front index, back index, front dim, back dim).
    struct Split
    {
        std::size_t front, back;
        int fd, bd;
    };
    std::vector<std::vector<std::vector<Split>>> splits(cells_.size());
    for (std::size_t k = 0; k < cells_.size(); ++k) {
        std::map<std::uint32_t, std::size_t> index;
        for (std::size_t i = 0; i < cells_[k].size(); ++i) index[cells_[k][i].bits()] = i;
        for (VertexSet s : cells_[k]) {
            std::vector<Split> out;
            for (auto [front, back] : aw_split(s)) {
                out.push_back({index.at(front.bits()), index.at(back.bits()), front.size() - 1, back.size() - 1});
            }
            splits[k].push_back(std::move(out));
        }
    }

    MultRanks ranks;
    for (int p = 0; p <= top; ++p) {
        for (int q = 0; q <= top; ++q) {
            if (h.dim(p) > 0 && h.dim(q) > 0) ranks[{p, q}] = 0;
        }
    }

    const std::size_t m = cells_.size();
    for (int n = 0; n <= top; ++n) {
        const std::size_t hn = h.dim(n);
        if (hn == 0) continue;
        // entries[p] is the (dim H_p * dim H_{n-p}) x hn coefficient matrix.
        std::vector<Matrix> entries;
        for (int p = 0; p <= n; ++p) entries.emplace_back(field_, h.dim(p) * h.dim(n - p), hn);
        const Matrix& reps = h.reps(n);
        for (std::size_t cls = 0; cls < hn; ++cls) {
            for (std::size_t pos = 0; pos < reps.rows(); ++pos) {
                if (reps.is_zero_at(pos, cls)) continue;
                const Scalar c = reps.at(pos, cls);
                const Tuple& t = tuples_[static_cast<std::size_t>(n)][pos];
                Tuple front(m), back(m);
                std::function<void(std::size_t, int, int, long)> rec = [&](std::size_t k, int fdeg, int bdeg, long eps) {
                    if (k == m) {
                        const auto& fcol = dual[static_cast<std::size_t>(fdeg)][position_.at(front)];
                        const auto& bcol = dual[static_cast<std::size_t>(bdeg)][position_.at(back)];
                        if (fcol.empty() || bcol.empty()) return;
                        const Scalar sc = Scalar::sign(field_, eps) * c;
                        const std::size_t hq = h.dim(bdeg);
                        for (const auto& [i, x] : fcol) {
                            for (const auto& [j, y] : bcol) {
                                entries[static_cast<std::size_t>(fdeg)].add(i * hq + j, cls, sc * x * y);
                            }
                        }
                        return;
                    }
                    for (const Split& sp : splits[k][t[k]]) {
                        front[k] = sp.front;
                        back[k] = sp.back;
                        // Moving the fronts past the earlier backs.
                        rec(k + 1, fdeg + sp.fd, bdeg + sp.bd, eps + static_cast<long>(bdeg) * sp.fd);
                    }
                };
                rec(0, 0, 0, 0);
            }
        }
        for (int p = 0; p <= n; ++p) {
            auto it = ranks.find({p, n - p});
            if (it != ranks.end()) it->second = rank(entries[static_cast<std::size_t>(p)]);
        }
    }
    return ranks;
}

GradedDims oracle_betti(const Instance& inst, OracleOptions options)
{
    return BlockComplex(inst, options).betti();
}

MultRanks oracle_mult_ranks(const Instance& inst, OracleOptions options)
{
    return BlockComplex(inst, options).mult_ranks();
}

}  // namespace gmac
