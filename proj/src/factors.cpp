#include "gmac/factors.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "gmac/chains.hpp"
#include "gmac/error.hpp"

namespace gmac {

// -------------------------------------------------------------- Coalgebra

std::vector<CoproductTerm> normalize_terms(std::vector<CoproductTerm> terms)
{
    std::sort(terms.begin(), terms.end(), [](const CoproductTerm& a, const CoproductTerm& b) {
        return std::tie(a.left, a.right) < std::tie(b.left, b.right);
    });
    std::vector<CoproductTerm> out;
    for (auto& t : terms) {
        if (!out.empty() && out.back().left == t.left && out.back().right == t.right) {
            out.back().coeff += t.coeff;
        } else {
            out.push_back(std::move(t));
        }
    }
    std::erase_if(out, [](const CoproductTerm& t) { return t.coeff.is_zero(); });
    return out;
}

namespace {

using Triple = std::tuple<std::size_t, std::size_t, std::size_t>;

void add_to(std::map<Triple, Scalar>& m, const Triple& key, const Scalar& c)
{
    auto [it, inserted] = m.try_emplace(key, c);
    if (!inserted) it->second += c;
}

void drop_zeros(std::map<Triple, Scalar>& m)
{
    std::erase_if(m, [](const auto& kv) { return kv.second.is_zero(); });
}

}  // namespace

bool is_counital(const Coalgebra& c)
{
    for (std::size_t i = 0; i < c.size(); ++i) {
        std::vector<CoproductTerm> left, right;
        for (const auto& t : c.delta[i]) {
            if (t.right == c.unit) left.push_back({t.left, 0, t.coeff});
            if (t.left == c.unit) right.push_back({t.right, 0, t.coeff});
        }
        const std::vector<CoproductTerm> expected{{i, 0, Scalar::one(c.field)}};
        if (normalize_terms(left) != expected || normalize_terms(right) != expected) return false;
    }
    return true;
}

bool is_coassociative(const Coalgebra& c)
{
    for (std::size_t i = 0; i < c.size(); ++i) {
        std::map<Triple, Scalar> lhs, rhs;
        for (const auto& t : c.delta[i]) {
            for (const auto& s : c.delta[t.left]) add_to(lhs, {s.left, s.right, t.right}, t.coeff * s.coeff);
            for (const auto& s : c.delta[t.right]) add_to(rhs, {t.left, s.left, s.right}, t.coeff * s.coeff);
        }
        drop_zeros(lhs);
        drop_zeros(rhs);
        if (lhs != rhs) return false;
    }
    return true;
}

bool is_cocommutative(const Coalgebra& c)
{
    for (std::size_t i = 0; i < c.size(); ++i) {
        std::vector<CoproductTerm> swapped;
        for (const auto& t : c.delta[i]) {
            swapped.push_back({t.right, t.left,
                               Scalar::sign(c.field, static_cast<long>(c.degrees[t.left]) * c.degrees[t.right]) *
                                   t.coeff});
        }
        if (normalize_terms(swapped) != normalize_terms(c.delta[i])) return false;
    }
    return true;
}

bool respects_degrees(const Coalgebra& c)
{
    for (std::size_t i = 0; i < c.size(); ++i) {
        for (const auto& t : c.delta[i]) {
            if (c.degrees[t.left] + c.degrees[t.right] != c.degrees[i]) return false;
        }
    }
    return true;
}

// ------------------------------------------------------------- FactorData

std::string role_name(Role r)
{
    switch (r) {
    case Role::kernel: return "kernel";
    case Role::image: return "image";
    case Role::coker: return "coker";
    }
    return "?";
}

std::vector<std::size_t> FactorData::with_role(Role r) const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (elements[i].role == r) out.push_back(i);
    }
    return out;
}

std::optional<std::size_t> FactorData::find(const std::string& label) const
{
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (elements[i].label == label) return i;
    }
    return std::nullopt;
}

namespace {

Coalgebra restrict_coalgebra(const FactorData& f, bool a_side, std::vector<std::size_t>* index)
{
    std::vector<std::size_t> pos(f.size(), SimplicialChains::npos);
    std::vector<std::size_t> back;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (a_side ? f.in_a(i) : f.in_x(i)) {
            pos[i] = back.size();
            back.push_back(i);
        }
    }
    Coalgebra c;
    c.field = f.field;
    c.unit = pos[f.unit];
    for (std::size_t i : back) {
        c.degrees.push_back(f.degree(i));
        std::vector<CoproductTerm> terms;
        for (const auto& t : (a_side ? f.coproduct_a : f.coproduct_x)[i]) {
            terms.push_back({pos[t.left], pos[t.right], t.coeff});
        }
        c.delta.push_back(std::move(terms));
    }
    if (index) *index = std::move(back);
    return c;
}

std::vector<std::size_t> dims_where(const FactorData& f, bool a_side)
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (!(a_side ? f.in_a(i) : f.in_x(i))) continue;
        const auto d = static_cast<std::size_t>(f.degree(i));
        if (out.size() <= d) out.resize(d + 1, 0);
        ++out[d];
    }
    return out;
}

}  // namespace

Coalgebra FactorData::coalgebra_a(std::vector<std::size_t>* index) const
{
    return restrict_coalgebra(*this, true, index);
}

Coalgebra FactorData::coalgebra_x(std::vector<std::size_t>* index) const
{
    return restrict_coalgebra(*this, false, index);
}

std::vector<std::size_t> FactorData::dims_a() const { return dims_where(*this, true); }
std::vector<std::size_t> FactorData::dims_x() const { return dims_where(*this, false); }

bool image_is_subcoalgebra(const FactorData& f)
{
    for (std::size_t b : f.with_role(Role::image)) {
        for (const auto& t : f.coproduct_a[b]) {
            if (f.role(t.left) != Role::image || f.role(t.right) != Role::image) return false;
        }
        if (f.coproduct_a[b] != f.coproduct_x[b]) return false;
    }
    return true;
}

namespace {

// Δ_X on an image element must be the image of Δ_A: terms with a kernel side die.
void check_naturality(const FactorData& f, bool internal)
{
    for (std::size_t b : f.with_role(Role::image)) {
        std::vector<CoproductTerm> pushed;
        for (const auto& t : f.coproduct_a[b]) {
            if (f.role(t.left) == Role::image && f.role(t.right) == Role::image) pushed.push_back(t);
        }
        if (normalize_terms(pushed) != f.coproduct_x[b]) {
            const std::string msg = "coproducts of A and X disagree on image element '" + f.elements[b].label + "'";
            if (internal) throw InternalError(msg);
            throw InvalidInput(msg);
        }
    }
}

std::string element_label(Role role, int degree, std::size_t idx, std::size_t count)
{
    const char* prefix = role == Role::kernel ? "k" : role == Role::image ? "i" : "c";
    std::string s = prefix + std::to_string(degree);
    if (count > 1) s += "." + std::to_string(idx);
    return s;
}

// Per-degree data used while analyzing a pair.
struct DegreeBasis
{
    Matrix basis;                   // new basis in old homology coordinates (square)
    std::vector<std::size_t> elem;  // element index of each column
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> dual_cols;  // per chain index
};

Scalar augmentation(const Homology& h, const Vector& coords)
{
    const Field& f = h.field();
    Scalar e = Scalar::zero(f);
    const Matrix& reps = h.reps(0);
    for (std::size_t j = 0; j < coords.size(); ++j) {
        if (coords[j].is_zero()) continue;
        for (std::size_t r = 0; r < reps.rows(); ++r) {
            if (!reps.is_zero_at(r, j)) e += coords[j] * reps.at(r, j);
        }
    }
    return e;
}

// Columns of `fixed` followed by whichever columns of `extra` complete them to
// a basis, chosen by pivoting.
Matrix complete_basis(const Matrix& fixed, const Matrix& extra)
{
    Matrix all = fixed.hcat(extra);
    std::vector<std::size_t> piv = pivot_columns(all);
    if (piv.size() < fixed.cols()) throw InternalError("basis completion: fixed columns are dependent");
    for (std::size_t i = 0; i < fixed.cols(); ++i) {
        if (piv[i] != i) throw InternalError("basis completion: fixed columns are dependent");
    }
    return all.select_columns(piv);
}

void fill_dual_columns(DegreeBasis& b, const Homology& h, int n)
{
    const Field& f = h.field();
    const Matrix& dual = h.dual(n);
    Matrix inv = echelon(b.basis).transform;
    Matrix fprime = b.basis.cols() ? inv * dual : Matrix(f, 0, dual.cols());
    b.dual_cols.assign(dual.cols(), {});
    for (std::size_t c = 0; c < fprime.cols(); ++c) {
        for (std::size_t r = 0; r < fprime.rows(); ++r) {
            if (!fprime.is_zero_at(r, c)) b.dual_cols[c].emplace_back(r, fprime.at(r, c));
        }
    }
}

std::vector<CoproductTerm> chain_coproduct(const SimplicialChains& ch, const Homology& h,
                                           const std::vector<DegreeBasis>& bases, int n, const Vector& coords)
{
    Vector z = h.reps(n).apply(coords);
    std::vector<CoproductTerm> terms;
    for (std::size_t s = 0; s < z.size(); ++s) {
        if (z[s].is_zero()) continue;
        for (auto [front, back] : aw_split(ch.basis[static_cast<std::size_t>(n)][s])) {
            const auto& fb = bases[static_cast<std::size_t>(SimplicialChains::degree_of(front))];
            const auto& bb = bases[static_cast<std::size_t>(SimplicialChains::degree_of(back))];
            const auto& fc = fb.dual_cols[ch.index_of(front)];
            const auto& bc = bb.dual_cols[ch.index_of(back)];
            for (const auto& [i, x] : fc) {
                for (const auto& [j, y] : bc) terms.push_back({fb.elem[i], bb.elem[j], z[s] * x * y});
            }
        }
    }
    return normalize_terms(std::move(terms));
}

}  // namespace

FactorData analyze_pair(const SimplicialPair& pair, const Field& field)
{
    const auto& x = pair.x;
    const auto& a = pair.a;
    if (x.is_void() || a.is_void()) throw InvalidInput("factor pair: X and A must be non-void");
    if (a.vertex_set().empty()) throw InvalidInput("factor pair: A must have at least one vertex");
    for (VertexSet s : a.simplices()) {
        if (!x.contains(s)) throw InvalidInput("factor pair: A is not a subcomplex of X (" + s.to_string() + ")");
    }

    SimplicialChains cx = plain_complex(x, field);
    SimplicialChains ca = plain_complex(a, field);
    Homology hx(cx.complex, {false});
    Homology ha(ca.complex, {false});
    std::vector<Matrix> imap = induced_map(inclusion_map(ca, cx), ca.complex, cx.complex, ha, hx);

    const int top = std::max(cx.complex.max_degree(), ca.complex.max_degree());
    const VertexSet base = VertexSet::singleton(a.vertex_set().vertices().front());

    // Per degree: kernel, complement (image preimages) and cokernel columns.
    std::vector<Matrix> kern, comp, img, cok;
    Vector unit_a, unit_x;
    for (int n = 0; n <= top; ++n) {
        const std::size_t da = ha.dim(n), dx = hx.dim(n);
        Matrix in = n < static_cast<int>(imap.size()) ? imap[static_cast<std::size_t>(n)] : Matrix(field, dx, da);
        Matrix k = nullspace(in);
        Matrix extra = Matrix::identity(field, da);
        if (n == 0) {
            Vector e = zero_vector(field, ca.complex.dim(0));
            e[ca.index_of(base)] = Scalar::one(field);
            unit_a = ha.coordinates(0, e);
            extra = Matrix::from_columns(field, da, {unit_a}).hcat(extra);
        }
        Matrix c = complete_basis(k, extra).select_columns([&] {
            std::vector<std::size_t> idx;
            for (std::size_t j = k.cols(); j < da; ++j) idx.push_back(j);
            return idx;
        }());
        if (n == 0) {
            // Non-unit degree-0 classes get augmentation zero, so the counit is
            // dual to the unit in the chosen basis.
            for (std::size_t j = 1; j < c.cols(); ++j) {
                Vector col = c.column(j);
                Scalar e = augmentation(ha, col);
                for (std::size_t r = 0; r < da; ++r) c.set(r, j, col[r] - e * unit_a[r]);
            }
        }
        Matrix im = in * c;
        Matrix ck = complete_basis(im, Matrix::identity(field, dx)).select_columns([&] {
            std::vector<std::size_t> idx;
            for (std::size_t j = im.cols(); j < dx; ++j) idx.push_back(j);
            return idx;
        }());
        if (n == 0) {
            unit_x = im.column(0);
            for (std::size_t j = 0; j < ck.cols(); ++j) {
                Vector col = ck.column(j);
                Scalar e = augmentation(hx, col);
                for (std::size_t r = 0; r < dx; ++r) ck.set(r, j, col[r] - e * unit_x[r]);
            }
        }
        kern.push_back(std::move(k));
        comp.push_back(std::move(c));
        img.push_back(std::move(im));
        cok.push_back(std::move(ck));
    }

    FactorData out;
    out.field = field;
    out.provenance = "simplicial_pair";
    out.pair = pair;
    std::vector<DegreeBasis> abases(static_cast<std::size_t>(top) + 1), xbases(static_cast<std::size_t>(top) + 1);
    auto add_role = [&](Role role, const std::vector<Matrix>& cols) {
        for (int n = 0; n <= top; ++n) {
            const std::size_t count = cols[static_cast<std::size_t>(n)].cols();
            for (std::size_t j = 0; j < count; ++j) {
                const bool is_unit = role == Role::image && n == 0 && j == 0;
                out.elements.push_back(
                    {role, n, is_unit ? std::string("u") : element_label(role, n, j, count)});
                if (is_unit) out.unit = out.elements.size() - 1;
            }
        }
    };
    add_role(Role::kernel, kern);
    add_role(Role::image, comp);
    add_role(Role::coker, cok);

    // Element indices of each basis column.
    std::size_t next = 0;
    std::vector<std::vector<std::size_t>> kid(abases.size()), iid(abases.size()), cid(abases.size());
    for (std::size_t n = 0; n < abases.size(); ++n) {
        for (std::size_t j = 0; j < kern[n].cols(); ++j) kid[n].push_back(next++);
    }
    for (std::size_t n = 0; n < abases.size(); ++n) {
        for (std::size_t j = 0; j < comp[n].cols(); ++j) iid[n].push_back(next++);
    }
    for (std::size_t n = 0; n < abases.size(); ++n) {
        for (std::size_t j = 0; j < cok[n].cols(); ++j) cid[n].push_back(next++);
    }
    for (std::size_t n = 0; n < abases.size(); ++n) {
        const int deg = static_cast<int>(n);
        abases[n].basis = kern[n].hcat(comp[n]);
        abases[n].elem = kid[n];
        abases[n].elem.insert(abases[n].elem.end(), iid[n].begin(), iid[n].end());
        fill_dual_columns(abases[n], ha, deg);
        xbases[n].basis = img[n].hcat(cok[n]);
        xbases[n].elem = iid[n];
        xbases[n].elem.insert(xbases[n].elem.end(), cid[n].begin(), cid[n].end());
        fill_dual_columns(xbases[n], hx, deg);
    }

    out.coproduct_a.assign(out.size(), {});
    out.coproduct_x.assign(out.size(), {});
    for (std::size_t n = 0; n < abases.size(); ++n) {
        const int deg = static_cast<int>(n);
        for (std::size_t j = 0; j < abases[n].elem.size(); ++j) {
            out.coproduct_a[abases[n].elem[j]] = chain_coproduct(ca, ha, abases, deg, abases[n].basis.column(j));
        }
        for (std::size_t j = 0; j < xbases[n].elem.size(); ++j) {
            out.coproduct_x[xbases[n].elem[j]] = chain_coproduct(cx, hx, xbases, deg, xbases[n].basis.column(j));
        }
    }
    check_naturality(out, true);
    return out;
}

SimplicialPair disk_sphere_pair(int n)
{
    if (n < 1 || n + 1 > kMaxGround) throw InvalidInput("disk_sphere: n must be in [1, 29]");
    const VertexSet all = VertexSet::range(n + 1);
    std::vector<VertexSet> faces;
    for (int v = 1; v <= n + 1; ++v) faces.push_back(all - VertexSet::singleton(v));
    return {SimplicialComplex::full(n + 1, all), SimplicialComplex::from_facets(n + 1, faces)};
}

FactorData sphere_pair(int r, int k, const Field& field)
{
    if (k < 0 || r < k) throw InvalidInput("sphere_pair: need 0 <= k <= r (got r=" + std::to_string(r) +
                                           ", k=" + std::to_string(k) + ")");
    FactorData f;
    f.field = field;
    f.elements = {{Role::kernel, k, "k"}, {Role::image, 0, "u"}, {Role::coker, r + 1, "c"}};
    f.unit = 1;
    const Scalar one = Scalar::one(field);
    f.coproduct_a = {{{0, 1, one}, {1, 0, one}}, {{1, 1, one}}, {}};
    if (k == 0) f.coproduct_a[0].insert(f.coproduct_a[0].begin(), {0, 0, one});
    f.coproduct_x = {{}, {{1, 1, one}}, {{1, 2, one}, {2, 1, one}}};
    f.provenance = "sphere_pair(" + std::to_string(r) + "," + std::to_string(k) + ")";
    f.sphere = {r, k};
    return f;
}

// -------------------------------------------------------------------- raw

FactorData from_raw(const RawFactor& raw)
{
    if (raw.elements.empty()) throw InvalidInput("raw factor: no elements");
    std::set<std::string> seen;
    for (const auto& e : raw.elements) {
        if (e.label.empty()) throw InvalidInput("raw factor: empty label");
        if (!seen.insert(e.label).second) throw InvalidInput("raw factor: duplicate label '" + e.label + "'");
        if (e.degree < 0) throw InvalidInput("raw factor: negative degree for '" + e.label + "'");
    }
    FactorData f;
    f.field = raw.field;
    f.provenance = "raw";
    f.elements = raw.elements;
    std::stable_sort(f.elements.begin(), f.elements.end(), [](const FactorElement& a, const FactorElement& b) {
        return std::tie(a.role, a.degree) < std::tie(b.role, b.degree);
    });
    auto unit = f.find(raw.unit);
    if (!unit) throw InvalidInput("raw factor: unit '" + raw.unit + "' is not an element");
    if (f.role(*unit) != Role::image || f.degree(*unit) != 0) {
        throw InvalidInput("raw factor: unit '" + raw.unit + "' must be an image element of degree 0");
    }
    f.unit = *unit;

    auto build = [&](bool a_side) {
        const auto& given = a_side ? raw.coproduct_a : raw.coproduct_x;
        const char* name = a_side ? "coproduct_a" : "coproduct_x";
        std::vector<std::vector<CoproductTerm>> delta(f.size());
        for (const auto& [label, terms] : given) {
            auto i = f.find(label);
            if (!i) throw InvalidInput(std::string(name) + ": unknown element '" + label + "'");
            if (a_side ? !f.in_a(*i) : !f.in_x(*i)) {
                throw InvalidInput(std::string(name) + ": '" + label + "' does not belong to this side");
            }
        }
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (a_side ? !f.in_a(i) : !f.in_x(i)) continue;
            const std::string& label = f.elements[i].label;
            std::vector<CoproductTerm> terms;
            auto it = given.find(label);
            if (it != given.end()) {
                for (const auto& [l, r, c] : it->second) {
                    auto li = f.find(l);
                    auto ri = f.find(r);
                    if (!li || !ri) throw InvalidInput(std::string(name) + "." + label + ": unknown element in term");
                    if (a_side ? (!f.in_a(*li) || !f.in_a(*ri)) : (!f.in_x(*li) || !f.in_x(*ri))) {
                        throw InvalidInput(std::string(name) + "." + label + ": term uses an element of the wrong side");
                    }
                    if (!(c.field() == f.field)) throw InvalidInput(std::string(name) + "." + label + ": field mismatch");
                    if (f.degree(*li) + f.degree(*ri) != f.degree(i)) {
                        throw InvalidInput(std::string(name) + "." + label + ": term " + l + "⊗" + r +
                                           " has degree " + std::to_string(f.degree(*li) + f.degree(*ri)) +
                                           ", expected " + std::to_string(f.degree(i)));
                    }
                    terms.push_back({*li, *ri, c});
                }
            } else if (i == f.unit) {
                terms.push_back({i, i, Scalar::one(f.field)});
            } else if (f.degree(i) > 0) {
                terms.push_back({i, f.unit, Scalar::one(f.field)});
                terms.push_back({f.unit, i, Scalar::one(f.field)});
            } else {
                throw InvalidInput(std::string(name) + ": degree-0 element '" + label + "' needs an explicit coproduct");
            }
            delta[i] = normalize_terms(std::move(terms));
        }
        return delta;
    };
    f.coproduct_a = build(true);
    f.coproduct_x = build(false);

    if (!is_counital(f.coalgebra_a())) throw InvalidInput("coproduct_a is not counital");
    if (!is_counital(f.coalgebra_x())) throw InvalidInput("coproduct_x is not counital");
    if (!is_coassociative(f.coalgebra_a())) throw InvalidInput("coproduct_a is not coassociative");
    if (!is_coassociative(f.coalgebra_x())) throw InvalidInput("coproduct_x is not coassociative");
    check_naturality(f, false);
    return f;
}

RawFactor to_raw(const FactorData& f)
{
    RawFactor raw;
    raw.field = f.field;
    raw.elements = f.elements;
    raw.unit = f.elements[f.unit].label;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const std::string& label = f.elements[i].label;
        auto emit = [&](const std::vector<CoproductTerm>& terms) {
            std::vector<std::tuple<std::string, std::string, Scalar>> out;
            for (const auto& t : terms) out.emplace_back(f.elements[t.left].label, f.elements[t.right].label, t.coeff);
            return out;
        };
        if (f.in_a(i)) raw.coproduct_a[label] = emit(f.coproduct_a[i]);
        if (f.in_x(i)) raw.coproduct_x[label] = emit(f.coproduct_x[i]);
    }
    return raw;
}

}  // namespace gmac
