#pragma once

// Exact scalars over Q and GF(p), and dense exact linear algebra.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace gmac {

class Field
{
public:
    enum class Kind { rationals, prime };

    /// The default field is Q.
    Field() = default;

    static Field rationals() { return Field(); }

    /// Throws InvalidInput naming a factor when p is composite, e.g. "6 = 2·3".
    static Field prime(std::uint64_t p);

    /// Accepts "rationals" (also "Q", "rational") or "prime p" (also "GF(p)").
    static Field parse(std::string_view descriptor);

    Kind kind() const { return kind_; }
    bool is_rational() const { return kind_ == Kind::rationals; }
    /// 0 for Q.
    std::uint32_t characteristic() const { return p_; }

    /// "Q" or "GF(p)".
    std::string name() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    friend class Scalar;
    Field(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}

    Kind kind_ = Kind::rationals;
    std::uint32_t p_ = 0;
};

/// An element of a Field. Rationals are kept in lowest terms, residues in [0, p).
class Scalar
{
public:
    /// Rational zero.
    Scalar() = default;
    Scalar(const Field& field, long value);
    Scalar(const Field& field, const mpq_class& value);

    static Scalar zero(const Field& field) { return Scalar(field, 0L); }
    static Scalar one(const Field& field) { return Scalar(field, 1L); }
    /// (-1)^exponent
    static Scalar sign(const Field& field, long exponent);
    /// Parses "3", "-2/5".
    static Scalar parse(const Field& field, std::string_view text);

    Field field() const;
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& other);
    Scalar& operator-=(const Scalar& other);
    Scalar& operator*=(const Scalar& other);
    Scalar& operator/=(const Scalar& other);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b);

    std::string to_string() const;

    // Raw access used by Matrix.
    const mpq_class& rational() const { return q_; }
    std::uint32_t residue() const { return r_; }

private:
    std::uint32_t p_ = 0;
    std::uint32_t r_ = 0;
    mpq_class q_;
};

using Vector = std::vector<Scalar>;

Vector zero_vector(const Field& field, std::size_t n);
bool is_zero(const Vector& v);

/// Dense row-major matrix over a Field.
class Matrix
{
public:
    Matrix() = default;
    Matrix(const Field& field, std::size_t rows, std::size_t cols);

    static Matrix identity(const Field& field, std::size_t n);
    static Matrix from_rows(const Field& field,
                            const std::vector<std::vector<long>>& rows);
    static Matrix from_columns(const Field& field, std::size_t rows,
                               const std::vector<Vector>& columns);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar at(std::size_t r, std::size_t c) const;
    bool is_zero_at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, const Scalar& value);
    void add(std::size_t r, std::size_t c, const Scalar& value);

    Vector column(std::size_t c) const;
    Vector row(std::size_t r) const;
    Matrix select_columns(std::span<const std::size_t> indices) const;
    Matrix transposed() const;
    /// Columns of *this followed by columns of other.
    Matrix hcat(const Matrix& other) const;

    Matrix operator*(const Matrix& other) const;
    Vector apply(const Vector& v) const;
    bool is_zero() const;

    friend bool operator==(const Matrix& a, const Matrix& b);

    std::string to_string() const;

private:
    friend struct MatrixAccess;

    Field field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::variant<std::vector<mpq_class>, std::vector<std::uint32_t>> data_;
};

struct EchelonForm
{
    std::size_t rank = 0;
    /// Pivot column of each nonzero row of the reduced form, ascending.
    std::vector<std::size_t> pivots;
    /// Invertible, with transform * M == reduced.
    Matrix transform;
    Matrix reduced;
    /// Columns span ker(M), one per non-pivot column, in column order.
    Matrix nullspace;
};

/// Gauss-Jordan elimination. The pivot of each column is the topmost
/// remaining row with a nonzero entry, columns scanned left to right.
EchelonForm echelon(const Matrix& m);

std::size_t rank(const Matrix& m);
Matrix nullspace(const Matrix& m);
/// Indices of the pivot columns of m, which index a basis of its column space.
std::vector<std::size_t> pivot_columns(const Matrix& m);

/// x with A x = b, free variables zero; nullopt when b is not in the column span.
std::optional<Vector> solve_in_span(const Matrix& a, const Vector& b);

/// Factorizes A once for repeated solves against different right-hand sides.
class SpanSolver
{
public:
    SpanSolver() = default;
    explicit SpanSolver(const Matrix& a);

    std::optional<Vector> solve(const Vector& b) const;
    std::size_t rank() const { return pivots_.size(); }

private:
    Field field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::size_t> pivots_;
    Matrix transform_;
};

}  // namespace gmac
