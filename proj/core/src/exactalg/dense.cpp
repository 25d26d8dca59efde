#include "liecoh/exactalg/dense.hpp"

#include "liecoh/errors.hpp"

#include <sstream>

namespace liecoh {

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
    if (i >= n) throw InvalidArgument("unit_vector: index out of range");
    Vector v(n);
    v[i] = Scalar(1);
    return v;
}

bool is_zero(const Vector& v) {
    for (const auto& s : v) {
        if (!s.is_zero()) return false;
    }
    return true;
}

Vector& add_to(Vector& acc, const Vector& v) {
    if (acc.size() != v.size()) throw DimensionMismatch("vector add: length mismatch");
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_zero()) acc[i] += v[i];
    }
    return acc;
}

Vector& add_scaled(Vector& acc, const Scalar& a, const Vector& v) {
    if (acc.size() != v.size()) throw DimensionMismatch("vector add: length mismatch");
    if (a.is_zero()) return acc;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_zero()) acc[i] += a * v[i];
    }
    return acc;
}

Vector operator+(const Vector& a, const Vector& b) {
    Vector r = a;
    return add_to(r, b);
}

Vector operator-(const Vector& a, const Vector& b) {
    Vector r = a;
    return add_scaled(r, Scalar(-1), b);
}

Vector operator-(const Vector& a) {
    Vector r = a;
    for (auto& s : r) s = -s;
    return r;
}

Vector operator*(const Scalar& a, const Vector& v) {
    Vector r(v.size());
    if (a.is_zero()) return r;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_zero()) r[i] = a * v[i];
    }
    return r;
}

Scalar dot(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("dot: length mismatch");
    Scalar s;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
    }
    return s;
}

std::string to_string(const Vector& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << v[i];
    }
    os << ')';
    return os.str();
}

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
    if (rows.empty()) return {};
    Matrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) throw DimensionMismatch("ragged matrix rows");
        for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw DimensionMismatch("ragged matrix columns");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

Vector Matrix::row(std::size_t i) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::column(std::size_t j) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
}

bool Matrix::is_zero() const { return liecoh::is_zero(data_); }

Vector Matrix::apply(const Vector& v) const {
    if (v.size() != cols_) throw DimensionMismatch("matrix-vector size mismatch");
    Vector r(rows_);
    for (std::size_t j = 0; j < cols_; ++j) {
        if (v[j].is_zero()) continue;
        for (std::size_t i = 0; i < rows_; ++i) {
            const Scalar& a = (*this)(i, j);
            if (!a.is_zero()) r[i] += a * v[j];
        }
    }
    return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product size mismatch");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Scalar& y = b(k, j);
                if (!y.is_zero()) r(i, j) += x * y;
            }
        }
    }
    return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sum size mismatch");
    Matrix r = a;
    for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
    return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix difference size mismatch");
    Matrix r = a;
    for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
    return r;
}

Matrix operator*(const Scalar& s, const Matrix& a) {
    Matrix r = a;
    for (auto& x : r.data_) x *= s;
    return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Scalar Matrix::trace() const {
    if (rows_ != cols_) throw DimensionMismatch("trace of non-square matrix");
    Scalar t;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

std::optional<Matrix> Matrix::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    const std::size_t n = rows_;
    Matrix a = *this;
    Matrix inv = identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c).is_zero()) ++p;
        if (p == n) return std::nullopt;
        if (p != c) {
            for (std::size_t k = 0; k < n; ++k) {
                std::swap(a(p, k), a(c, k));
                std::swap(inv(p, k), inv(c, k));
            }
        }
        Scalar f = a(c, c).inverse();
        for (std::size_t k = 0; k < n; ++k) {
            a(c, k) *= f;
            inv(c, k) *= f;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a(r, c).is_zero()) continue;
            Scalar g = a(r, c);
            for (std::size_t k = 0; k < n; ++k) {
                if (!a(c, k).is_zero()) a(r, k) -= g * a(c, k);
                if (!inv(c, k).is_zero()) inv(r, k) -= g * inv(c, k);
            }
        }
    }
    return inv;
}

Matrix Matrix::pow(unsigned long e) const {
    if (rows_ != cols_) throw DimensionMismatch("power of non-square matrix");
    Matrix result = identity(rows_);
    Matrix base = *this;
    while (e > 0) {
        if (e & 1UL) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

}  // namespace liecoh
