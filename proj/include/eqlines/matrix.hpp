#pragma once

#include <cstddef>
#include <vector>

#include "eqlines/scalar.hpp"

namespace eqlines {

class Vector {
public:
    Vector(Backend backend, std::vector<Scalar> entries);
    static Vector zero(Backend backend, std::size_t dim);

    std::size_t dim() const { return entries_.size(); }
    Backend backend() const { return backend_; }
    const Scalar& operator[](std::size_t k) const { return entries_[k]; }
    Scalar& operator[](std::size_t k) { return entries_[k]; }
    const std::vector<Scalar>& entries() const { return entries_; }

    bool is_zero(double tol = 0.0) const;

private:
    Backend backend_;
    std::vector<Scalar> entries_;
};

// Dense row-major complex matrix over a single scalar backend. Everything
// the constructions need stays at most 64x64, so no sparsity or lazy
// evaluation.
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, Backend backend, std::vector<Scalar> entries);
    static Matrix filled(std::size_t rows, std::size_t cols, const Scalar& value);
    static Matrix identity(std::size_t n, Backend backend);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Backend backend() const { return backend_; }

    const Scalar& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    Scalar& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const std::vector<Scalar>& entries() const { return entries_; }

    Vector row(std::size_t r) const;
    Matrix to_backend(Backend target) const;

private:
    std::size_t rows_;
    std::size_t cols_;
    Backend backend_;
    std::vector<Scalar> entries_;
};

// Hermitian inner product; conjugation applies to the second argument.
Scalar inner_product(const Vector& x, const Vector& y);

Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix conj_transpose(const Matrix& a);
Vector mat_vec(const Matrix& a, const Vector& x);
Matrix scale(const Matrix& a, const Scalar& c);
Vector scale(const Vector& x, const Scalar& c);

bool is_scaled_identity(const Matrix& a, const Scalar& c, double tol = 0.0);
bool matrices_equal(const Matrix& a, const Matrix& b, double tol = 0.0);

}  // namespace eqlines
