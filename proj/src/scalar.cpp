#include "eqlines/scalar.hpp"

#include "eqlines/errors.hpp"

namespace eqlines {

std::string backend_name(Backend b) { return b == Backend::exact ? "exact" : "float"; }

Backend backend_from_name(const std::string& name) {
    if (name == "exact") return Backend::exact;
    if (name == "float") return Backend::floating;
    throw FormatError("unknown backend '" + name + "'");
}

Scalar Scalar::one(Backend b) {
    return b == Backend::exact ? exact_integer(1) : Scalar(std::complex<double>(1.0, 0.0));
}

Scalar Scalar::zero(Backend b) {
    return b == Backend::exact ? Scalar() : Scalar(std::complex<double>(0.0, 0.0));
}

const Cyclotomic& Scalar::exact() const {
    if (!is_exact()) throw BackendError("expected an exact scalar");
    return std::get<Cyclotomic>(v_);
}

std::complex<double> Scalar::floating() const {
    if (is_exact()) throw BackendError("expected a floating scalar");
    return std::get<std::complex<double>>(v_);
}

std::complex<double> Scalar::approx() const {
    return is_exact() ? exact().to_complex() : floating();
}

Scalar Scalar::to_backend(Backend target) const {
    if (backend() == target) return *this;
    if (target == Backend::floating) return Scalar(exact().to_complex());
    throw BackendError("cannot promote a floating scalar to the exact backend");
}

namespace {
void require_same_backend(const Scalar& a, const Scalar& b) {
    if (a.backend() != b.backend()) throw BackendError("mixed exact/float operands");
}
}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
    require_same_backend(a, b);
    if (a.is_exact()) return Scalar(a.exact() + b.exact());
    return Scalar(a.floating() + b.floating());
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    require_same_backend(a, b);
    if (a.is_exact()) return Scalar(a.exact() - b.exact());
    return Scalar(a.floating() - b.floating());
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    require_same_backend(a, b);
    if (a.is_exact()) return Scalar(a.exact() * b.exact());
    return Scalar(a.floating() * b.floating());
}

Scalar Scalar::operator-() const {
    if (is_exact()) return Scalar(-exact());
    return Scalar(-floating());
}

Scalar Scalar::inverse() const {
    if (is_exact()) return Scalar(exact().inverse());
    std::complex<double> z = floating();
    if (z == std::complex<double>(0.0, 0.0)) throw DivisionByZeroError();
    return Scalar(1.0 / z);
}

Scalar Scalar::conjugate() const {
    if (is_exact()) return Scalar(exact().conjugate());
    return Scalar(std::conj(floating()));
}

bool Scalar::is_zero(double tol) const {
    if (is_exact()) return exact().is_zero();
    return std::abs(floating()) <= tol;
}

bool Scalar::equals(const Scalar& other, double tol) const {
    require_same_backend(*this, other);
    if (is_exact()) return exact() == other.exact();
    return std::abs(floating() - other.floating()) <= tol;
}

std::string Scalar::to_string() const {
    return is_exact() ? exact().to_string() : render_float_scalar(floating());
}

Scalar parse_scalar(const std::string& text, Backend backend) {
    if (backend == Backend::exact) return Scalar(parse_exact_scalar(text));
    // Floating input accepts both the decimal a+bi form and the exact
    // grammar (evaluated numerically), so generated documents with exact
    // entries can be consumed by the float backend.
    try {
        return Scalar(parse_float_scalar(text));
    } catch (const ParseError&) {
        return Scalar(parse_exact_scalar(text).to_complex());
    }
}

}  // namespace eqlines
