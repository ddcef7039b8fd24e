#include "silted/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace silted::linalg {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        for (long x : r) data_.emplace_back(x);
    }
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_columns(std::span<const Vec> columns, std::size_t height) {
    RatMatrix m(height, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != height) throw std::invalid_argument("column length mismatch");
        for (std::size_t r = 0; r < height; ++r) m(r, c) = columns[c][r];
    }
    return m;
}

RatMatrix RatMatrix::from_rows(std::span<const Vec> rows, std::size_t width) {
    RatMatrix m(rows.size(), width);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != width) throw std::invalid_argument("row length mismatch");
        for (std::size_t c = 0; c < width; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

Vec RatMatrix::row(std::size_t r) const {
    return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
               data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec RatMatrix::column(std::size_t c) const {
    Vec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

bool RatMatrix::is_zero() const {
    for (const auto& x : data_)
        if (sgn(x) != 0) return false;
    return true;
}

Vec RatMatrix::apply(const Vec& v) const {
    if (v.size() != cols_) throw std::invalid_argument("apply: dimension mismatch");
    Vec out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (sgn(v[c]) != 0) out[r] += (*this)(r, c) * v[c];
    return out;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    RatMatrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& x = a(i, k);
            if (sgn(x) == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += x * b(k, j);
        }
    return p;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
    RatMatrix s = a;
    for (std::size_t i = 0; i < s.data_.size(); ++i) s.data_[i] += b.data_[i];
    return s;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference: shape mismatch");
    RatMatrix s = a;
    for (std::size_t i = 0; i < s.data_.size(); ++i) s.data_[i] -= b.data_[i];
    return s;
}

RatMatrix operator-(const RatMatrix& a) {
    RatMatrix s = a;
    for (auto& x : s.data_) x = -x;
    return s;
}

bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string RatMatrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r ? ", [" : "[");
        for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c).get_str();
        os << ']';
    }
    os << ']';
    return os.str();
}

RatMatrix rref(RatMatrix m, std::vector<std::size_t>* pivots) {
    if (pivots) pivots->clear();
    std::size_t lead_row = 0;
    for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
        std::size_t p = lead_row;
        while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != lead_row)
            for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(lead_row, k));
        const Rational inv = 1 / m(lead_row, c);
        for (std::size_t k = c; k < m.cols(); ++k) m(lead_row, k) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == lead_row || sgn(m(r, c)) == 0) continue;
            const Rational f = m(r, c);
            for (std::size_t k = c; k < m.cols(); ++k) m(r, k) -= f * m(lead_row, k);
        }
        if (pivots) pivots->push_back(c);
        ++lead_row;
    }
    return m;
}

std::size_t rank(const RatMatrix& m) {
    std::vector<std::size_t> piv;
    rref(m, &piv);
    return piv.size();
}

std::vector<Vec> kernel_vectors(const RatMatrix& m) {
    std::vector<std::size_t> piv;
    const RatMatrix r = rref(m, &piv);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : piv) is_pivot[p] = true;
    std::vector<Vec> out;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec v(m.cols());
        v[free] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r(i, free);
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<RatMatrix> kernel_basis(const RatMatrix& m) {
    std::vector<RatMatrix> out;
    for (auto& v : kernel_vectors(m)) {
        RatMatrix col(v.size(), 1);
        for (std::size_t i = 0; i < v.size(); ++i) col(i, 0) = v[i];
        out.push_back(std::move(col));
    }
    return out;
}

std::optional<RatMatrix> solve(const RatMatrix& m, const RatMatrix& b) {
    if (b.rows() != m.rows()) throw std::invalid_argument("solve: right-hand side has wrong height");
    RatMatrix aug(m.rows(), m.cols() + b.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
        for (std::size_t c = 0; c < b.cols(); ++c) aug(r, m.cols() + c) = b(r, c);
    }
    std::vector<std::size_t> piv;
    const RatMatrix r = rref(aug, &piv);
    for (auto p : piv)
        if (p >= m.cols()) return std::nullopt;
    RatMatrix x(m.cols(), b.cols());
    for (std::size_t i = 0; i < piv.size(); ++i)
        for (std::size_t c = 0; c < b.cols(); ++c) x(piv[i], c) = r(i, m.cols() + c);
    return x;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    if (rank(m) != m.rows()) return std::nullopt;
    return solve(m, RatMatrix::identity(m.rows()));
}

Rational determinant(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    RatMatrix a = m;
    Rational det = 1;
    const std::size_t n = a.rows();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && sgn(a(p, c)) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (std::size_t k = 0; k < n; ++k) std::swap(a(p, k), a(c, k));
            det = -det;
        }
        det *= a(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (sgn(a(r, c)) == 0) continue;
            const Rational f = a(r, c) / a(c, c);
            for (std::size_t k = c; k < n; ++k) a(r, k) -= f * a(c, k);
        }
    }
    return det;
}

// Faddeev-LeVerrier recursion, exact over Q.
Vec characteristic_polynomial(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
    const std::size_t n = m.rows();
    Vec coeff(n + 1);
    coeff[n] = 1;
    RatMatrix acc(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        acc = m * acc;
        for (std::size_t i = 0; i < n; ++i) acc(i, i) += coeff[n - k + 1];
        const RatMatrix prod = m * acc;
        Rational tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += prod(i, i);
        coeff[n - k] = -tr / static_cast<long>(k);
    }
    return coeff;
}

bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (sgn(x) != 0) return false;
    return true;
}

Vec EchelonBasis::reduce(Vec v) const {
    if (v.size() != ambient_) throw std::invalid_argument("EchelonBasis::reduce: dimension mismatch");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rational f = v[pivots_[i]];
        if (sgn(f) == 0) continue;
        for (std::size_t k = 0; k < ambient_; ++k)
            if (sgn(rows_[i][k]) != 0) v[k] -= f * rows_[i][k];
    }
    return v;
}

bool EchelonBasis::contains(const Vec& v) const { return is_zero(reduce(v)); }

bool EchelonBasis::insert(Vec v) {
    v = reduce(std::move(v));
    std::size_t p = 0;
    while (p < ambient_ && sgn(v[p]) == 0) ++p;
    if (p == ambient_) return false;
    const Rational inv = 1 / v[p];
    for (auto& x : v) x *= inv;
    for (auto& row : rows_) {
        const Rational f = row[p];
        if (sgn(f) == 0) continue;
        for (std::size_t k = 0; k < ambient_; ++k)
            if (sgn(v[k]) != 0) row[k] -= f * v[k];
    }
    // Keep rows sorted by pivot column so that rows() is the RREF.
    std::size_t at = 0;
    while (at < pivots_.size() && pivots_[at] < p) ++at;
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(at), std::move(v));
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(at), p);
    return true;
}

std::optional<Vec> EchelonBasis::coordinates(const Vec& v) const {
    Vec c(rows_.size());
    Vec rest = v;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        c[i] = v[pivots_[i]];
        const Rational& f = c[i];
        if (sgn(f) == 0) continue;
        for (std::size_t k = 0; k < ambient_; ++k)
            if (sgn(rows_[i][k]) != 0) rest[k] -= f * rows_[i][k];
    }
    if (!is_zero(rest)) return std::nullopt;
    return c;
}

SpanCoordinates::SpanCoordinates(std::vector<Vec> basis, std::size_t ambient)
    : ambient_(ambient), basis_(std::move(basis)) {
    const std::size_t k = basis_.size();
    if (k == 0) return;
    // Independent rows of the (ambient x k) matrix are the pivot columns of
    // its transpose.
    RatMatrix t = RatMatrix::from_rows(basis_, ambient_);
    std::vector<std::size_t> piv;
    rref(t, &piv);
    if (piv.size() != k) throw std::invalid_argument("SpanCoordinates: basis is linearly dependent");
    rows_ = piv;
    RatMatrix square(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) square(i, j) = basis_[j][rows_[i]];
    solver_ = *inverse(square);
}

std::optional<Vec> SpanCoordinates::coordinates(const Vec& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("SpanCoordinates: dimension mismatch");
    const std::size_t k = basis_.size();
    Vec picked(k);
    for (std::size_t i = 0; i < k; ++i) picked[i] = v[rows_[i]];
    Vec c = k ? solver_.apply(picked) : Vec{};
    Vec check(ambient_);
    for (std::size_t j = 0; j < k; ++j) {
        if (sgn(c[j]) == 0) continue;
        for (std::size_t r = 0; r < ambient_; ++r)
            if (sgn(basis_[j][r]) != 0) check[r] += c[j] * basis_[j][r];
    }
    if (check != v) return std::nullopt;
    return c;
}

}  // namespace silted::linalg
