#pragma once

#include <complex>
#include <string>
#include <variant>

#include "eqlines/cyclotomic.hpp"
#include "eqlines/scalar_text.hpp"

namespace eqlines {

enum class Backend { exact, floating };

std::string backend_name(Backend b);
Backend backend_from_name(const std::string& name);

// A complex scalar carried by one of two backends: exact cyclotomic or
// floating complex. Arithmetic never mixes backends; converting exact to
// float is explicit and lossy, the reverse does not exist.
class Scalar {
public:
    Scalar() : v_(Cyclotomic()) {}
    explicit Scalar(Cyclotomic c) : v_(std::move(c)) {}
    explicit Scalar(std::complex<double> z) : v_(z) {}
    static Scalar exact_integer(long n) { return Scalar(Cyclotomic::from_integer(n)); }
    static Scalar one(Backend b);
    static Scalar zero(Backend b);

    Backend backend() const { return std::holds_alternative<Cyclotomic>(v_) ? Backend::exact : Backend::floating; }
    bool is_exact() const { return backend() == Backend::exact; }

    const Cyclotomic& exact() const;
    std::complex<double> floating() const;
    // Numeric view regardless of backend.
    std::complex<double> approx() const;
    Scalar to_backend(Backend target) const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    Scalar operator-() const;
    Scalar inverse() const;
    Scalar conjugate() const;
    Scalar abs_squared() const { return *this * conjugate(); }

    bool is_zero(double tol = 0.0) const;

    // Backend-aware equality: exact values compare exactly, floating values
    // within tol (absolute, on the complex difference).
    bool equals(const Scalar& other, double tol = 0.0) const;

    std::string to_string() const;

private:
    std::variant<Cyclotomic, std::complex<double>> v_;
};

Scalar parse_scalar(const std::string& text, Backend backend);

}  // namespace eqlines
