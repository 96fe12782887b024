#include "gmac/exactlin.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <utility>

#include "gmac/error.hpp"

namespace gmac {

namespace {

std::uint32_t reduce_mod(const mpz_class& v, std::uint32_t p)
{
    mpz_class r = v % p;
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint32_t p)
{
    std::uint64_t result = 1;
    base %= p;
    while (exp) {
        if (exp & 1) result = result * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return static_cast<std::uint32_t>(result);
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p)
{
    if (a == 0) throw InvalidInput("division by zero in " + Field::prime(p).name());
    return pow_mod(a, p - 2, p);
}

std::string trim(std::string_view s)
{
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

// Element operations on raw storage.

struct RationalOps
{
    using T = mpq_class;
    bool zero(const T& x) const { return sgn(x) == 0; }
    T inv(const T& x) const { return 1 / x; }
    void mul_inplace(T& x, const T& y) const { x *= y; }
    // x -= f * y
    void submul(T& x, const T& f, const T& y, T& tmp) const
    {
        mpq_mul(tmp.get_mpq_t(), f.get_mpq_t(), y.get_mpq_t());
        mpq_sub(x.get_mpq_t(), x.get_mpq_t(), tmp.get_mpq_t());
    }
    T neg(const T& x) const { return -x; }
    T from_long(long v) const { return T(v); }
};

struct ModOps
{
    using T = std::uint32_t;
    std::uint32_t p;
    bool zero(T x) const { return x == 0; }
    T inv(T x) const { return inv_mod(x, p); }
    void mul_inplace(T& x, T y) const
    {
        x = static_cast<T>(static_cast<std::uint64_t>(x) * y % p);
    }
    void submul(T& x, T f, T y, T&) const
    {
        std::uint64_t prod = static_cast<std::uint64_t>(f) * y % p;
        x = static_cast<T>((x + p - prod) % p);
    }
    T neg(T x) const { return x == 0 ? 0 : p - x; }
    T from_long(long v) const
    {
        long r = v % static_cast<long>(p);
        if (r < 0) r += p;
        return static_cast<T>(r);
    }
};

// Gauss-Jordan on a row-major block. Pivots are searched only in the first
// pivot_limit columns; row operations run across all columns.
template <class Ops>
std::vector<std::size_t> eliminate(const Ops& ops, std::vector<typename Ops::T>& a,
                                   std::size_t rows, std::size_t cols,
                                   std::size_t pivot_limit)
{
    using T = typename Ops::T;
    std::vector<std::size_t> pivots;
    std::vector<std::size_t> nz;
    T tmp{};
    T factor{};
    std::size_t r = 0;
    for (std::size_t c = 0; c < pivot_limit && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && ops.zero(a[p * cols + c])) ++p;
        if (p == rows) continue;
        if (p != r) {
            std::swap_ranges(a.begin() + p * cols, a.begin() + (p + 1) * cols,
                             a.begin() + r * cols);
        }
        T inv = ops.inv(a[r * cols + c]);
        nz.clear();
        for (std::size_t j = c; j < cols; ++j) {
            T& x = a[r * cols + j];
            if (!ops.zero(x)) {
                ops.mul_inplace(x, inv);
                nz.push_back(j);
            }
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            const T& lead = a[i * cols + c];
            if (ops.zero(lead)) continue;
            factor = lead;
            for (std::size_t j : nz) ops.submul(a[i * cols + j], factor, a[r * cols + j], tmp);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

// ---------------------------------------------------------------- Field

Field Field::prime(std::uint64_t p)
{
    if (p < 2) throw InvalidInput("prime field needs p >= 2, got " + std::to_string(p));
    if (p >= (1ULL << 31)) throw InvalidInput("prime " + std::to_string(p) + " too large (limit 2^31)");
    for (std::uint64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) {
            throw InvalidInput("not a prime: " + std::to_string(p) + " = " + std::to_string(d) +
                               "·" + std::to_string(p / d));
        }
    }
    return Field(Kind::prime, static_cast<std::uint32_t>(p));
}

Field Field::parse(std::string_view descriptor)
{
    std::string s = trim(descriptor);
    if (s == "rationals" || s == "rational" || s == "Q") return rationals();
    std::string digits;
    if (s.rfind("prime", 0) == 0) {
        digits = trim(std::string_view(s).substr(5));
    } else if (s.rfind("GF(", 0) == 0 && s.size() > 4 && s.back() == ')') {
        digits = s.substr(3, s.size() - 4);
    } else {
        throw InvalidInput("unknown field descriptor '" + s + "'");
    }
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
        throw InvalidInput("bad prime in field descriptor '" + s + "'");
    }
    return prime(p);
}

std::string Field::name() const
{
    if (is_rational()) return "Q";
    return "GF(" + std::to_string(p_) + ")";
}

// --------------------------------------------------------------- Scalar

Scalar::Scalar(const Field& field, long value) : p_(field.characteristic())
{
    if (p_ == 0) {
        q_ = value;
    } else {
        r_ = ModOps{p_}.from_long(value);
    }
}

Scalar::Scalar(const Field& field, const mpq_class& value) : p_(field.characteristic())
{
    if (p_ == 0) {
        q_ = value;
        q_.canonicalize();
    } else {
        std::uint32_t num = reduce_mod(value.get_num(), p_);
        std::uint32_t den = reduce_mod(value.get_den(), p_);
        if (den == 0) {
            throw InvalidInput("denominator of " + value.get_str() + " vanishes in GF(" +
                               std::to_string(p_) + ")");
        }
        r_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(num) * inv_mod(den, p_) % p_);
    }
}

Scalar Scalar::sign(const Field& field, long exponent)
{
    return Scalar(field, (exponent % 2 == 0) ? 1L : -1L);
}

Scalar Scalar::parse(const Field& field, std::string_view text)
{
    std::string s = trim(text);
    mpq_class q;
    if (s.empty() || q.set_str(s, 10) != 0) throw InvalidInput("bad scalar '" + s + "'");
    if (q.get_den() == 0) throw InvalidInput("zero denominator in '" + s + "'");
    q.canonicalize();
    return Scalar(field, q);
}

Field Scalar::field() const { return p_ == 0 ? Field::rationals() : Field(Field::Kind::prime, p_); }

bool Scalar::is_zero() const { return p_ == 0 ? sgn(q_) == 0 : r_ == 0; }

bool Scalar::is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1; }

Scalar Scalar::operator-() const
{
    Scalar s = *this;
    if (p_ == 0) {
        s.q_ = -q_;
    } else {
        s.r_ = ModOps{p_}.neg(r_);
    }
    return s;
}

Scalar& Scalar::operator+=(const Scalar& o)
{
    if (p_ == 0) {
        q_ += o.q_;
    } else {
        r_ = static_cast<std::uint32_t>((static_cast<std::uint64_t>(r_) + o.r_) % p_);
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o)
{
    if (p_ == 0) {
        q_ -= o.q_;
    } else {
        r_ = static_cast<std::uint32_t>((static_cast<std::uint64_t>(r_) + p_ - o.r_) % p_);
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o)
{
    if (p_ == 0) {
        q_ *= o.q_;
    } else {
        r_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(r_) * o.r_ % p_);
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o)
{
    if (o.is_zero()) throw InvalidInput("division by zero");
    if (p_ == 0) {
        q_ /= o.q_;
    } else {
        r_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(r_) * inv_mod(o.r_, p_) % p_);
    }
    return *this;
}

bool operator==(const Scalar& a, const Scalar& b)
{
    if (a.p_ != b.p_) return false;
    return a.p_ == 0 ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::string Scalar::to_string() const
{
    if (p_ == 0) return q_.get_str();
    return std::to_string(r_);
}

Vector zero_vector(const Field& field, std::size_t n) { return Vector(n, Scalar::zero(field)); }

bool is_zero(const Vector& v)
{
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

// --------------------------------------------------------------- Matrix

struct MatrixAccess
{
    static auto& data(Matrix& m) { return m.data_; }
    static const auto& data(const Matrix& m) { return m.data_; }
};

namespace {

// Runs f(ops, storage) with the element type matching the matrix field.
template <class F>
decltype(auto) visit_storage(Matrix& m, F&& f)
{
    auto& data = MatrixAccess::data(m);
    if (m.field().is_rational()) return f(RationalOps{}, std::get<0>(data));
    return f(ModOps{m.field().characteristic()}, std::get<1>(data));
}

template <class F>
decltype(auto) visit_storage(const Matrix& m, F&& f)
{
    const auto& data = MatrixAccess::data(m);
    if (m.field().is_rational()) return f(RationalOps{}, std::get<0>(data));
    return f(ModOps{m.field().characteristic()}, std::get<1>(data));
}

Scalar make_scalar(const Field& field, const mpq_class& v) { return Scalar(field, v); }

Scalar make_scalar(const Field& field, std::uint32_t v) { return Scalar(field, static_cast<long>(v)); }

}  // namespace

Matrix::Matrix(const Field& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols)
{
    if (field.is_rational()) {
        data_ = std::vector<mpq_class>(rows * cols);
    } else {
        data_ = std::vector<std::uint32_t>(rows * cols, 0);
    }
}

Matrix Matrix::identity(const Field& field, std::size_t n)
{
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, Scalar::one(field));
    return m;
}

Matrix Matrix::from_rows(const Field& field, const std::vector<std::vector<long>>& rows)
{
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw InvalidInput("ragged matrix rows");
        for (std::size_t j = 0; j < cols; ++j) m.set(i, j, Scalar(field, rows[i][j]));
    }
    return m;
}

Matrix Matrix::from_columns(const Field& field, std::size_t rows, const std::vector<Vector>& columns)
{
    Matrix m(field, rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != rows) throw InvalidInput("column length mismatch");
        for (std::size_t i = 0; i < rows; ++i) {
            if (!columns[j][i].is_zero()) m.set(i, j, columns[j][i]);
        }
    }
    return m;
}

Scalar Matrix::at(std::size_t r, std::size_t c) const
{
    return visit_storage(*this, [&](const auto&, const auto& v) {
        return make_scalar(field_, v[r * cols_ + c]);
    });
}

bool Matrix::is_zero_at(std::size_t r, std::size_t c) const
{
    return visit_storage(*this, [&](const auto& ops, const auto& v) {
        return ops.zero(v[r * cols_ + c]);
    });
}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& value)
{
    if (field_.is_rational()) {
        std::get<0>(data_)[r * cols_ + c] = value.rational();
    } else {
        std::get<1>(data_)[r * cols_ + c] = value.residue();
    }
}

void Matrix::add(std::size_t r, std::size_t c, const Scalar& value)
{
    if (field_.is_rational()) {
        std::get<0>(data_)[r * cols_ + c] += value.rational();
    } else {
        auto& x = std::get<1>(data_)[r * cols_ + c];
        x = static_cast<std::uint32_t>((static_cast<std::uint64_t>(x) + value.residue()) %
                                       field_.characteristic());
    }
}

Vector Matrix::column(std::size_t c) const
{
    Vector out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(at(i, c));
    return out;
}

Vector Matrix::row(std::size_t r) const
{
    Vector out;
    out.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j) out.push_back(at(r, j));
    return out;
}

Matrix Matrix::select_columns(std::span<const std::size_t> indices) const
{
    Matrix out(field_, rows_, indices.size());
    visit_storage(*this, [&](const auto&, const auto& src) {
        visit_storage(out, [&](const auto&, auto& dst) {
            using D = std::decay_t<decltype(dst[0])>;
            using S = std::decay_t<decltype(src[0])>;
            if constexpr (std::is_same_v<D, S>) {
                for (std::size_t i = 0; i < rows_; ++i) {
                    for (std::size_t k = 0; k < indices.size(); ++k) {
                        dst[i * indices.size() + k] = src[i * cols_ + indices[k]];
                    }
                }
            }
        });
    });
    return out;
}

Matrix Matrix::transposed() const
{
    Matrix out(field_, cols_, rows_);
    visit_storage(*this, [&](const auto&, const auto& src) {
        visit_storage(out, [&](const auto&, auto& dst) {
            using D = std::decay_t<decltype(dst[0])>;
            using S = std::decay_t<decltype(src[0])>;
            if constexpr (std::is_same_v<D, S>) {
                for (std::size_t i = 0; i < rows_; ++i) {
                    for (std::size_t j = 0; j < cols_; ++j) dst[j * rows_ + i] = src[i * cols_ + j];
                }
            }
        });
    });
    return out;
}

Matrix Matrix::hcat(const Matrix& other) const
{
    if (other.rows_ != rows_) throw InvalidInput("hcat: row count mismatch");
    if (!(other.field_ == field_)) throw InvalidInput("hcat: field mismatch");
    Matrix out(field_, rows_, cols_ + other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (!is_zero_at(i, j)) out.set(i, j, at(i, j));
        }
        for (std::size_t j = 0; j < other.cols_; ++j) {
            if (!other.is_zero_at(i, j)) out.set(i, cols_ + j, other.at(i, j));
        }
    }
    return out;
}

Matrix Matrix::operator*(const Matrix& other) const
{
    if (cols_ != other.rows_) throw InvalidInput("matrix product: dimension mismatch");
    if (!(other.field_ == field_)) throw InvalidInput("matrix product: field mismatch");
    Matrix out(field_, rows_, other.cols_);
    visit_storage(*this, [&](const auto& ops, const auto& a) {
        using T = std::decay_t<decltype(a[0])>;
        const auto& b = std::get<std::vector<T>>(MatrixAccess::data(other));
        auto& c = std::get<std::vector<T>>(MatrixAccess::data(out));
        T tmp{};
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& aik = a[i * cols_ + k];
                if (ops.zero(aik)) continue;
                T neg = ops.neg(aik);
                for (std::size_t j = 0; j < other.cols_; ++j) {
                    const T& bkj = b[k * other.cols_ + j];
                    if (ops.zero(bkj)) continue;
                    ops.submul(c[i * other.cols_ + j], neg, bkj, tmp);
                }
            }
        }
    });
    return out;
}

Vector Matrix::apply(const Vector& v) const
{
    if (v.size() != cols_) throw InvalidInput("matrix-vector product: dimension mismatch");
    return visit_storage(*this, [&](const auto& ops, const auto& a) {
        using T = std::decay_t<decltype(a[0])>;
        std::vector<T> x(cols_), y(rows_, ops.from_long(0));
        for (std::size_t j = 0; j < cols_; ++j) {
            if constexpr (std::is_same_v<T, mpq_class>) {
                x[j] = v[j].rational();
            } else {
                x[j] = v[j].residue();
            }
        }
        T tmp{};
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                const T& aij = a[i * cols_ + j];
                if (ops.zero(aij) || ops.zero(x[j])) continue;
                ops.submul(y[i], ops.neg(aij), x[j], tmp);
            }
        }
        Vector out;
        out.reserve(rows_);
        for (const T& e : y) out.push_back(make_scalar(field_, e));
        return out;
    });
}

bool Matrix::is_zero() const
{
    return visit_storage(*this, [](const auto& ops, const auto& v) {
        for (const auto& x : v) {
            if (!ops.zero(x)) return false;
        }
        return true;
    });
}

bool operator==(const Matrix& a, const Matrix& b)
{
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::to_string() const
{
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << '[';
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).to_string();
        os << "]\n";
    }
    return os.str();
}

// ------------------------------------------------------------- echelon

EchelonForm echelon(const Matrix& m)
{
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    const std::size_t width = cols + rows;
    EchelonForm out;
    out.reduced = Matrix(m.field(), rows, cols);
    out.transform = Matrix(m.field(), rows, rows);

    visit_storage(m, [&](const auto& ops, const auto& src) {
        using T = std::decay_t<decltype(src[0])>;
        std::vector<T> a(rows * width, ops.from_long(0));
        for (std::size_t i = 0; i < rows; ++i) {
            for (std::size_t j = 0; j < cols; ++j) a[i * width + j] = src[i * cols + j];
            a[i * width + cols + i] = ops.from_long(1);
        }
        out.pivots = eliminate(ops, a, rows, width, cols);
        auto& red = std::get<std::vector<T>>(MatrixAccess::data(out.reduced));
        auto& tr = std::get<std::vector<T>>(MatrixAccess::data(out.transform));
        for (std::size_t i = 0; i < rows; ++i) {
            for (std::size_t j = 0; j < cols; ++j) red[i * cols + j] = a[i * width + j];
            for (std::size_t j = 0; j < rows; ++j) tr[i * rows + j] = a[i * width + cols + j];
        }
    });
    out.rank = out.pivots.size();

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : out.pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols; ++c) {
        if (!is_pivot[c]) free_cols.push_back(c);
    }
    out.nullspace = Matrix(m.field(), cols, free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const std::size_t f = free_cols[k];
        out.nullspace.set(f, k, Scalar::one(m.field()));
        for (std::size_t i = 0; i < out.rank; ++i) {
            if (!out.reduced.is_zero_at(i, f)) out.nullspace.set(out.pivots[i], k, -out.reduced.at(i, f));
        }
    }
    return out;
}

namespace {

// Echelon without transform: returns (pivots, reduced storage as Matrix).
std::pair<std::vector<std::size_t>, Matrix> reduce_only(const Matrix& m)
{
    Matrix red = m;
    std::vector<std::size_t> pivots = visit_storage(red, [&](const auto& ops, auto& a) {
        return eliminate(ops, a, m.rows(), m.cols(), m.cols());
    });
    return {std::move(pivots), std::move(red)};
}

}  // namespace

std::size_t rank(const Matrix& m)
{
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return reduce_only(m).first.size();
}

std::vector<std::size_t> pivot_columns(const Matrix& m)
{
    if (m.rows() == 0 || m.cols() == 0) return {};
    return reduce_only(m).first;
}

Matrix nullspace(const Matrix& m)
{
    const std::size_t cols = m.cols();
    auto [pivots, red] = reduce_only(m);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols; ++c) {
        if (!is_pivot[c]) free_cols.push_back(c);
    }
    Matrix ns(m.field(), cols, free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const std::size_t f = free_cols[k];
        ns.set(f, k, Scalar::one(m.field()));
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            if (!red.is_zero_at(i, f)) ns.set(pivots[i], k, -red.at(i, f));
        }
    }
    return ns;
}

SpanSolver::SpanSolver(const Matrix& a) : field_(a.field()), rows_(a.rows()), cols_(a.cols())
{
    EchelonForm e = echelon(a);
    pivots_ = std::move(e.pivots);
    transform_ = std::move(e.transform);
}

std::optional<Vector> SpanSolver::solve(const Vector& b) const
{
    if (b.size() != rows_) throw InvalidInput("solve_in_span: right-hand side has wrong length");
    Vector y = transform_.apply(b);
    for (std::size_t i = pivots_.size(); i < rows_; ++i) {
        if (!y[i].is_zero()) return std::nullopt;
    }
    Vector x = zero_vector(field_, cols_);
    for (std::size_t i = 0; i < pivots_.size(); ++i) x[pivots_[i]] = y[i];
    return x;
}

std::optional<Vector> solve_in_span(const Matrix& a, const Vector& b) { return SpanSolver(a).solve(b); }

}  // namespace gmac
