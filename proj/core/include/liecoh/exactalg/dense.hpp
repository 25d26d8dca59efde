#ifndef LIECOH_EXACTALG_DENSE_HPP
#define LIECOH_EXACTALG_DENSE_HPP

#include "liecoh/exactalg/scalar.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace liecoh {

/// Dense coordinate vector.
using Vector = std::vector<Scalar>;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector& add_to(Vector& acc, const Vector& v);
Vector& add_scaled(Vector& acc, const Scalar& a, const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator-(const Vector& a);
Vector operator*(const Scalar& a, const Vector& v);
Scalar dot(const Vector& a, const Vector& b);
std::string to_string(const Vector& v);

/// Dense row-major matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vector>& rows);
    static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vector row(std::size_t i) const;
    Vector column(std::size_t j) const;
    Matrix transpose() const;
    bool is_zero() const;

    Vector apply(const Vector& v) const;
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& s, const Matrix& a);
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Scalar trace() const;
    /// Empty when singular or non-square.
    std::optional<Matrix> inverse() const;
    Matrix pow(unsigned long e) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

/// [a, b] = ab - ba.
Matrix commutator(const Matrix& a, const Matrix& b);

}  // namespace liecoh

#endif
