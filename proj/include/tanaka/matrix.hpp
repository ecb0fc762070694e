#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "tanaka/scalar.hpp"

namespace tanaka {

using Vector = std::vector<Scalar>;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(const Scalar& s, const Vector& v);
/// y += s * x
void axpy(Vector& y, const Scalar& s, const Vector& x);
Scalar dot(const Vector& a, const Vector& b);
/// Kronecker product: index i * b.size() + j holds a[i] * b[j].
Vector kron(const Vector& a, const Vector& b);
std::string to_string(const Vector& v);

/// Dense row-major matrix of exact rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
    /// Matrix whose columns are the given vectors (all of length `rows`).
    static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
    /// Single 1 at (i, j).
    static Matrix elementary(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vector row(std::size_t i) const;
    Vector col(std::size_t j) const;
    void set_col(std::size_t j, const Vector& v);
    void set_row(std::size_t i, const Vector& v);

    Matrix transpose() const;
    bool is_zero() const;
    /// Row-major flattening, length rows * cols.
    const Vector& flat() const { return data_; }
    static Matrix unflatten(const Vector& v, std::size_t rows, std::size_t cols);

    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& b);

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const Scalar& s);

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    std::string to_string() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    Vector data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(const Scalar& s, Matrix a);
Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, const Vector& v);
Matrix commutator(const Matrix& a, const Matrix& b);
Matrix kron(const Matrix& a, const Matrix& b);
/// Block-diagonal matrix with the given square blocks.
Matrix direct_sum(const std::vector<Matrix>& blocks);

/// In-place reduced row-echelon form (pivots normalized to 1). Returns the
/// pivot columns in increasing order.
std::vector<std::size_t> rref_in_place(Matrix& a);

std::size_t rank(const Matrix& a);

} // namespace tanaka
