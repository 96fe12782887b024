#include "gmac/chains.hpp"

#include <algorithm>
#include <sstream>

#include "gmac/error.hpp"

namespace gmac {

// ------------------------------------------------------------- GradedDims

std::size_t GradedDims::dim(int n) const
{
    if (n < min_degree || n > max_degree()) return 0;
    return dims[static_cast<std::size_t>(n - min_degree)];
}

std::size_t GradedDims::total() const
{
    std::size_t t = 0;
    for (std::size_t d : dims) t += d;
    return t;
}

std::string GradedDims::to_string() const
{
    std::size_t last = dims.size();
    while (last > 0 && dims[last - 1] == 0) --last;
    if (last == 0) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < last; ++i) os << (i ? " " : "") << dims[i];
    return os.str();
}

GradedDims operator+(const GradedDims& a, const GradedDims& b)
{
    if (a.dims.empty()) return b;
    if (b.dims.empty()) return a;
    GradedDims out;
    out.min_degree = std::min(a.min_degree, b.min_degree);
    int top = std::max(a.max_degree(), b.max_degree());
    for (int n = out.min_degree; n <= top; ++n) out.dims.push_back(a.dim(n) + b.dim(n));
    return out;
}

GradedDims normalized(const GradedDims& g, int from)
{
    GradedDims out;
    out.min_degree = from;
    int top = g.max_degree();
    while (top >= from && g.dim(top) == 0) --top;
    for (int n = from; n <= top; ++n) out.dims.push_back(g.dim(n));
    return out;
}

// ----------------------------------------------------------- ChainComplex

ChainComplex::ChainComplex(Field field, int min_degree, std::vector<Matrix> boundaries)
    : field_(std::move(field)), min_degree_(min_degree), d_(std::move(boundaries))
{
    for (std::size_t i = 0; i < d_.size(); ++i) {
        const std::size_t below = i == 0 ? 0 : d_[i - 1].cols();
        if (d_[i].rows() != below) throw InternalError("chain complex: boundary shapes do not chain");
        if (!(d_[i].field() == field_)) throw InternalError("chain complex: mixed fields");
        if (i > 0 && d_[i - 1].rows() > 0 && d_[i].cols() > 0 && !(d_[i - 1] * d_[i]).is_zero()) {
            throw InternalError("chain complex: d∘d != 0 in degree " +
                                std::to_string(min_degree_ + static_cast<int>(i)));
        }
    }
}

std::size_t ChainComplex::dim(int n) const
{
    if (n < min_degree_ || n > max_degree()) return 0;
    return d_[static_cast<std::size_t>(n - min_degree_)].cols();
}

GradedDims ChainComplex::dims() const
{
    GradedDims g{min_degree_, {}};
    for (const Matrix& m : d_) g.dims.push_back(m.cols());
    return g;
}

Matrix ChainComplex::d(int n) const
{
    if (n < min_degree_ || n > max_degree()) return Matrix(field_, dim(n - 1), dim(n));
    return d_[static_cast<std::size_t>(n - min_degree_)];
}

// ------------------------------------------------------ simplicial chains

std::size_t SimplicialChains::index_of(VertexSet s) const
{
    const int n = degree_of(s) - complex.min_degree();
    if (n < 0 || n >= static_cast<int>(basis.size())) return npos;
    const auto& b = basis[static_cast<std::size_t>(n)];
    auto it = std::lower_bound(b.begin(), b.end(), s);
    if (it == b.end() || *it != s) return npos;
    return static_cast<std::size_t>(it - b.begin());
}

Vector simplex_boundary(const SimplicialChains& c, VertexSet s)
{
    const Field& f = c.complex.field();
    Vector out = zero_vector(f, c.complex.dim(SimplicialChains::degree_of(s) - 1));
    int i = 0;
    for (int v : s.vertices()) {
        std::size_t idx = c.index_of(s - VertexSet::singleton(v));
        if (idx != SimplicialChains::npos) out[idx] += Scalar::sign(f, i);
        ++i;
    }
    return out;
}

namespace {

// Builds chains on the given per-degree bases; faces outside the basis are
// treated as zero, which realizes quotients.
SimplicialChains build_chains(const Field& field, int min_degree, std::vector<std::vector<VertexSet>> basis)
{
    while (!basis.empty() && basis.back().empty()) basis.pop_back();
    SimplicialChains c;
    c.basis = std::move(basis);
    // A temporary complex with correctly shaped zero boundaries lets index_of
    // and simplex_boundary work during construction.
    std::vector<Matrix> zeros;
    for (std::size_t i = 0; i < c.basis.size(); ++i) {
        zeros.emplace_back(field, i == 0 ? 0 : c.basis[i - 1].size(), c.basis[i].size());
    }
    c.complex = ChainComplex(field, min_degree, zeros);
    std::vector<Matrix> d = zeros;
    for (std::size_t i = 1; i < c.basis.size(); ++i) {
        for (std::size_t j = 0; j < c.basis[i].size(); ++j) {
            const VertexSet s = c.basis[i][j];
            int pos = 0;
            for (int v : s.vertices()) {
                std::size_t idx = c.index_of(s - VertexSet::singleton(v));
                if (idx != SimplicialChains::npos) d[i].set(idx, j, Scalar::sign(field, pos));
                ++pos;
            }
        }
    }
    c.complex = ChainComplex(field, min_degree, std::move(d));
    return c;
}

std::vector<std::vector<VertexSet>> by_degree(const std::vector<VertexSet>& simplices, int min_degree)
{
    std::vector<std::vector<VertexSet>> out;
    for (VertexSet s : simplices) {
        const int n = s.size() - 1 - min_degree;
        if (n < 0) continue;
        if (static_cast<int>(out.size()) <= n) out.resize(static_cast<std::size_t>(n) + 1);
        out[static_cast<std::size_t>(n)].push_back(s);
    }
    return out;
}

}  // namespace

SimplicialChains augmented_complex(const SimplicialComplex& k, const Field& field)
{
    return build_chains(field, -1, by_degree(k.simplices(), -1));
}

SimplicialChains plain_complex(const SimplicialComplex& k, const Field& field)
{
    return build_chains(field, 0, by_degree(k.simplices(), 0));
}

SimplicialChains relative_full_complex(VertexSet mu, const SimplicialComplex& l, const Field& field)
{
    for (VertexSet s : l.simplices()) {
        if (!s.subset_of(mu)) {
            throw InvalidInput("relative complex: " + s.to_string() + " is not a face of " + mu.to_string());
        }
    }
    std::vector<VertexSet> cells;
    const std::uint32_t bits = mu.bits();
    for (std::uint32_t sub = bits; sub != 0; sub = (sub - 1) & bits) {
        if (!l.contains(VertexSet(sub))) cells.emplace_back(sub);
    }
    std::sort(cells.begin(), cells.end());
    return build_chains(field, 0, by_degree(cells, 0));
}

// --------------------------------------------------------------- Homology

Homology::Homology(const ChainComplex& c, HomologyOptions options)
    : field_(c.field()), complex_(c), witnesses_(options.witnesses), min_degree_(c.min_degree())
{
    if (c.empty()) return;
    for (int n = c.min_degree(); n <= c.max_degree(); ++n) {
        Degree deg;
        const std::size_t dim = c.dim(n);
        Matrix z = nullspace(c.d(n));
        Matrix up = c.d(n + 1);
        std::vector<std::size_t> bpiv = pivot_columns(up);
        Matrix b = up.select_columns(bpiv);
        std::vector<std::size_t> piv = pivot_columns(b.hcat(z));
        std::vector<std::size_t> chosen;
        for (std::size_t p : piv) {
            if (p >= b.cols()) chosen.push_back(p - b.cols());
        }
        deg.reps = z.select_columns(chosen);
        const std::size_t h = chosen.size();
        deg.dual = Matrix(field_, h, dim);
        if (h > 0) {
            Matrix g = b.hcat(deg.reps);
            SpanSolver dual_solver(g.transposed());
            for (std::size_t i = 0; i < h; ++i) {
                Vector e = zero_vector(field_, g.cols());
                e[b.cols() + i] = Scalar::one(field_);
                auto row = dual_solver.solve(e);
                if (!row) throw InternalError("homology: cycle basis is not independent");
                for (std::size_t j = 0; j < dim; ++j) {
                    if (!(*row)[j].is_zero()) deg.dual.set(i, j, (*row)[j]);
                }
            }
        }
        if (witnesses_) deg.boundary_solver = SpanSolver(up);
        degrees_.push_back(std::move(deg));
    }
}

const Homology::Degree* Homology::find(int n) const
{
    if (n < min_degree_ || n >= min_degree_ + static_cast<int>(degrees_.size())) return nullptr;
    return &degrees_[static_cast<std::size_t>(n - min_degree_)];
}

GradedDims Homology::dims() const
{
    GradedDims g{min_degree_, {}};
    for (const Degree& d : degrees_) g.dims.push_back(d.reps.cols());
    return g;
}

std::size_t Homology::dim(int n) const
{
    const Degree* d = find(n);
    return d ? d->reps.cols() : 0;
}

const Matrix& Homology::reps(int n) const
{
    const Degree* d = find(n);
    return d ? d->reps : empty_;
}

const Matrix& Homology::dual(int n) const
{
    const Degree* d = find(n);
    return d ? d->dual : empty_;
}

bool Homology::is_cycle(int n, const Vector& z) const
{
    if (z.size() != complex_.dim(n)) throw InvalidInput("homology: chain has wrong length");
    return gmac::is_zero(complex_.d(n).apply(z));
}

Vector Homology::coordinates(int n, const Vector& z) const
{
    const Degree* d = find(n);
    if (!d) return {};
    return d->dual.apply(z);
}

Homology::Decomposition Homology::decompose(int n, const Vector& z) const
{
    if (!is_cycle(n, z)) throw InvalidInput("decompose: chain in degree " + std::to_string(n) + " is not a cycle");
    Decomposition out;
    out.coordinates = coordinates(n, z);
    if (!witnesses_) return out;
    const Degree* d = find(n);
    if (!d) return out;
    Vector rest = z;
    Vector lifted = d->reps.apply(out.coordinates);
    for (std::size_t i = 0; i < rest.size(); ++i) rest[i] -= lifted[i];
    auto w = d->boundary_solver.solve(rest);
    if (!w) throw InternalError("decompose: remainder is not a boundary");
    out.witness = std::move(*w);
    return out;
}

// ------------------------------------------------------------ chain maps

namespace {

Matrix map_at(const ChainMap& f, int n, std::size_t rows, std::size_t cols, const Field& field)
{
    const int i = n - f.min_degree;
    if (i < 0 || i >= static_cast<int>(f.maps.size())) return Matrix(field, rows, cols);
    const Matrix& m = f.maps[static_cast<std::size_t>(i)];
    if (m.rows() != rows || m.cols() != cols) throw InvalidInput("chain map: wrong shape in degree " + std::to_string(n));
    return m;
}

}  // namespace

std::vector<Matrix> induced_map(const ChainMap& f, const ChainComplex& src, const ChainComplex& dst,
                                const Homology& hsrc, const Homology& hdst)
{
    std::vector<Matrix> out;
    const Field& field = src.field();
    if (src.empty()) return out;
    for (int n = src.min_degree(); n <= src.max_degree(); ++n) {
        Matrix fn = map_at(f, n, dst.dim(n), src.dim(n), field);
        Matrix fdown = map_at(f, n - 1, dst.dim(n - 1), src.dim(n - 1), field);
        if (!(dst.d(n) * fn == fdown * src.d(n))) {
            throw InvalidInput("induced_map: not a chain map in degree " + std::to_string(n));
        }
        Matrix m(field, hdst.dim(n), hsrc.dim(n));
        const Matrix& reps = hsrc.reps(n);
        for (std::size_t j = 0; j < reps.cols(); ++j) {
            Vector c = hdst.decompose(n, fn.apply(reps.column(j))).coordinates;
            for (std::size_t i = 0; i < c.size(); ++i) {
                if (!c[i].is_zero()) m.set(i, j, c[i]);
            }
        }
        out.push_back(std::move(m));
    }
    return out;
}

ChainMap inclusion_map(const SimplicialChains& sub, const SimplicialChains& super)
{
    const Field& field = sub.complex.field();
    ChainMap f{sub.complex.min_degree(), {}};
    for (std::size_t i = 0; i < sub.basis.size(); ++i) {
        const int n = sub.complex.min_degree() + static_cast<int>(i);
        Matrix m(field, super.complex.dim(n), sub.basis[i].size());
        for (std::size_t j = 0; j < sub.basis[i].size(); ++j) {
            std::size_t idx = super.index_of(sub.basis[i][j]);
            if (idx == SimplicialChains::npos) {
                throw InvalidInput("inclusion: " + sub.basis[i][j].to_string() + " missing from target");
            }
            m.set(idx, j, Scalar::one(field));
        }
        f.maps.push_back(std::move(m));
    }
    return f;
}

// ------------------------------------------------------ AW diagonal

std::vector<AwTerm> aw_split(VertexSet s)
{
    std::vector<AwTerm> out;
    const std::vector<int> v = s.vertices();
    for (std::size_t k = 0; k < v.size(); ++k) {
        VertexSet front, back;
        for (std::size_t i = 0; i <= k; ++i) front = front | VertexSet::singleton(v[i]);
        for (std::size_t i = k; i < v.size(); ++i) back = back | VertexSet::singleton(v[i]);
        out.emplace_back(front, back);
    }
    return out;
}

std::vector<std::pair<VertexSet, std::vector<AwTerm>>> aw_diagonal(VertexSet mu)
{
    std::vector<VertexSet> cells;
    const std::uint32_t bits = mu.bits();
    for (std::uint32_t sub = bits; sub != 0; sub = (sub - 1) & bits) cells.emplace_back(sub);
    std::sort(cells.begin(), cells.end());
    std::vector<std::pair<VertexSet, std::vector<AwTerm>>> out;
    for (VertexSet s : cells) out.emplace_back(s, aw_split(s));
    return out;
}

}  // namespace gmac
