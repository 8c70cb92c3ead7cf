#include "eqlines/matrix.hpp"

#include "eqlines/errors.hpp"

namespace eqlines {

namespace {
void check_backend(Backend expected, const std::vector<Scalar>& entries) {
    for (const auto& e : entries)
        if (e.backend() != expected) throw BackendError("entries mix exact and float backends");
}
}  // namespace

Vector::Vector(Backend backend, std::vector<Scalar> entries)
    : backend_(backend), entries_(std::move(entries)) {
    if (entries_.empty()) throw DimensionError("vector must have positive dimension");
    check_backend(backend_, entries_);
}

Vector Vector::zero(Backend backend, std::size_t dim) {
    return Vector(backend, std::vector<Scalar>(dim, Scalar::zero(backend)));
}

bool Vector::is_zero(double tol) const {
    for (const auto& e : entries_)
        if (!e.is_zero(tol)) return false;
    return true;
}

Matrix::Matrix(std::size_t rows, std::size_t cols, Backend backend, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), backend_(backend), entries_(std::move(entries)) {
    if (rows_ == 0 || cols_ == 0) throw DimensionError("matrix dimensions must be positive");
    if (entries_.size() != rows_ * cols_) throw DimensionError("entry count does not match dimensions");
    check_backend(backend_, entries_);
}

Matrix Matrix::filled(std::size_t rows, std::size_t cols, const Scalar& value) {
    return Matrix(rows, cols, value.backend(), std::vector<Scalar>(rows * cols, value));
}

Matrix Matrix::identity(std::size_t n, Backend backend) {
    Matrix m = filled(n, n, Scalar::zero(backend));
    for (std::size_t k = 0; k < n; ++k) m.at(k, k) = Scalar::one(backend);
    return m;
}

Vector Matrix::row(std::size_t r) const {
    std::vector<Scalar> out(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                            entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
    return Vector(backend_, std::move(out));
}

Matrix Matrix::to_backend(Backend target) const {
    if (target == backend_) return *this;
    std::vector<Scalar> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(e.to_backend(target));
    return Matrix(rows_, cols_, target, std::move(out));
}

Scalar inner_product(const Vector& x, const Vector& y) {
    if (x.dim() != y.dim()) throw DimensionError("inner product of vectors with different dimensions");
    if (x.backend() != y.backend()) throw BackendError("inner product across backends");
    Scalar acc = Scalar::zero(x.backend());
    for (std::size_t k = 0; k < x.dim(); ++k) acc = acc + x[k] * y[k].conjugate();
    return acc;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw DimensionError("matrix product inner dimensions disagree");
    if (a.backend() != b.backend()) throw BackendError("matrix product across backends");
    Matrix out = Matrix::filled(a.rows(), b.cols(), Scalar::zero(a.backend()));
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Scalar& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                out.at(i, j) = out.at(i, j) + aik * b.at(k, j);
            }
        }
    }
    return out;
}

Matrix conj_transpose(const Matrix& a) {
    Matrix out = Matrix::filled(a.cols(), a.rows(), Scalar::zero(a.backend()));
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out.at(c, r) = a.at(r, c).conjugate();
    return out;
}

Vector mat_vec(const Matrix& a, const Vector& x) {
    if (a.cols() != x.dim()) throw DimensionError("matrix-vector dimensions disagree");
    if (a.backend() != x.backend()) throw BackendError("matrix-vector product across backends");
    std::vector<Scalar> out;
    out.reserve(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        Scalar acc = Scalar::zero(a.backend());
        for (std::size_t c = 0; c < a.cols(); ++c) acc = acc + a.at(r, c) * x[c];
        out.push_back(acc);
    }
    return Vector(a.backend(), std::move(out));
}

Matrix scale(const Matrix& a, const Scalar& c) {
    std::vector<Scalar> out;
    out.reserve(a.entries().size());
    for (const auto& e : a.entries()) out.push_back(e * c);
    return Matrix(a.rows(), a.cols(), a.backend(), std::move(out));
}

Vector scale(const Vector& x, const Scalar& c) {
    std::vector<Scalar> out;
    out.reserve(x.dim());
    for (const auto& e : x.entries()) out.push_back(e * c);
    return Vector(x.backend(), std::move(out));
}

bool is_scaled_identity(const Matrix& a, const Scalar& c, double tol) {
    if (a.rows() != a.cols()) throw DimensionError("scaled-identity test requires a square matrix");
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Scalar expected = r == k ? c : Scalar::zero(a.backend());
            if (!a.at(r, k).equals(expected.to_backend(a.backend()), tol)) return false;
        }
    }
    return true;
}

bool matrices_equal(const Matrix& a, const Matrix& b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || a.backend() != b.backend()) return false;
    for (std::size_t k = 0; k < a.entries().size(); ++k)
        if (!a.entries()[k].equals(b.entries()[k], tol)) return false;
    return true;
}

}  // namespace eqlines
