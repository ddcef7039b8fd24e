// Exact linear algebra over the rationals.
//
// Every dimension, rank and structure constant in the library is computed
// here, over Q, with fraction-based Gauss-Jordan elimination. Nothing is
// approximated.

#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace silted::linalg {

using Rational = mpq_class;
using Vec = std::vector<Rational>;

/// Dense row-major matrix of rationals.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols);
    RatMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static RatMatrix identity(std::size_t n);
    static RatMatrix from_columns(std::span<const Vec> columns, std::size_t height);
    static RatMatrix from_rows(std::span<const Vec> rows, std::size_t width);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Rational> entries() const { return data_; }

    Vec row(std::size_t r) const;
    Vec column(std::size_t c) const;
    RatMatrix transpose() const;
    bool is_zero() const;

    /// Matrix-vector product with a column vector.
    Vec apply(const Vec& v) const;

    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator-(const RatMatrix& a);
    friend bool operator==(const RatMatrix& a, const RatMatrix& b);

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Reduced row echelon form; `pivots` receives the pivot column of each
/// nonzero row.
RatMatrix rref(RatMatrix m, std::vector<std::size_t>* pivots = nullptr);

std::size_t rank(const RatMatrix& m);

/// Basis of the right null space, one column vector per free variable.
std::vector<RatMatrix> kernel_basis(const RatMatrix& m);
std::vector<Vec> kernel_vectors(const RatMatrix& m);

/// Some x with m*x = b, or nullopt when the system is inconsistent. Free
/// variables are set to zero, so the answer is a function of the input.
std::optional<RatMatrix> solve(const RatMatrix& m, const RatMatrix& b);

std::optional<RatMatrix> inverse(const RatMatrix& m);
Rational determinant(const RatMatrix& m);

/// Characteristic polynomial det(t*I - m), ascending coefficients, monic.
Vec characteristic_polynomial(const RatMatrix& m);

bool is_zero(const Vec& v);

/// Incrementally built subspace of Q^n kept in reduced row echelon form.
/// `reduce` returns the canonical representative of v modulo the span.
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t ambient = 0) : ambient_(ambient) {}

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return rows_.size(); }
    const std::vector<Vec>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    Vec reduce(Vec v) const;
    bool contains(const Vec& v) const;
    bool insert(Vec v);

    /// Coordinates of v in terms of rows(); nullopt if v is not in the span.
    std::optional<Vec> coordinates(const Vec& v) const;

private:
    std::size_t ambient_;
    std::vector<Vec> rows_;
    std::vector<std::size_t> pivots_;
};

/// Coordinates with respect to a fixed list of linearly independent vectors.
class SpanCoordinates {
public:
    SpanCoordinates() = default;
    SpanCoordinates(std::vector<Vec> basis, std::size_t ambient);

    std::size_t size() const { return basis_.size(); }
    const std::vector<Vec>& basis() const { return basis_; }

    std::optional<Vec> coordinates(const Vec& v) const;

private:
    std::size_t ambient_ = 0;
    std::vector<Vec> basis_;
    std::vector<std::size_t> rows_;
    RatMatrix solver_;
};

}  // namespace silted::linalg
