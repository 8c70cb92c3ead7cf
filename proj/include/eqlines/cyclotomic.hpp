#pragma once

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eqlines/rational.hpp"

namespace eqlines {

enum class Sign { negative, zero, positive };

// Exceeding this order (default 360) raises UnsupportedOrderError. The
// limit exists to bound the cost of cyclotomic-polynomial tables; it can
// be raised at startup for larger Butson inputs.
unsigned max_cyclotomic_order();
void set_max_cyclotomic_order(unsigned order);

struct RootOfUnity {
    unsigned order;     // value = zeta(order)^exponent
    unsigned exponent;  // in [0, order)
};

// Exact element of the cyclotomic field Q(zeta_n), stored as rational
// coefficients over the power basis {zeta_n^k : 0 <= k < phi(n)} after
// reduction modulo the n-th cyclotomic polynomial. The representation is
// canonical per order: two values at the same order are equal iff their
// coefficient vectors are identical. Values are immutable; arithmetic at
// mixed orders embeds both operands into the lcm order first.
class Cyclotomic {
public:
    // Zero at order 1.
    Cyclotomic();

    static Cyclotomic from_rational(const Rational& q);
    static Cyclotomic from_integer(long v) { return from_rational(Rational(v)); }
    // zeta(order)^exponent; exponent is reduced modulo order.
    static Cyclotomic root_of_unity(unsigned order, long exponent);
    // Sum of raw terms coeff * zeta(order)^exponent, canonically reduced.
    static Cyclotomic make(unsigned order, const std::vector<std::pair<long, Rational>>& terms);
    static Cyclotomic i() { return root_of_unity(4, 1); }
    // Exact sqrt(k) for k in {2, 3, 5}.
    static Cyclotomic sqrt_integer(unsigned k);

    unsigned order() const { return order_; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    std::optional<Rational> as_rational() const;
    // Fixed by complex conjugation (totally real).
    bool is_real() const;

    // Re-express at a multiple of the current order.
    Cyclotomic embedded(unsigned new_order) const;

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    Cyclotomic operator-() const;
    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

    Cyclotomic inverse() const;
    Cyclotomic conjugate() const;
    Cyclotomic abs_squared() const { return *this * conjugate(); }
    Cyclotomic pow(long e) const;

    // Structural equality of values; operands at different orders are
    // compared after embedding into the lcm order.
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    // Exact sign of a totally real value. Zero is decided on the canonical
    // form; otherwise a RationalInterval enclosure of the standard
    // embedding (zeta_n -> e^{2*pi*i/n}) is refined, doubling the working
    // precision from 64 bits until the interval excludes zero.
    Sign sign_real() const;

    // Decompose as zeta_N^k when the value is a root of unity. N is the
    // carrier order n, or 2n when the value is -zeta_n^k with n odd.
    std::optional<RootOfUnity> as_root_of_unity() const;

    // Square root of a root of unity: zeta_N^k -> zeta_{2N}^k. Values that
    // are not roots of unity are outside the exact backend.
    Cyclotomic sqrt_unimodular() const;

    // Certified enclosure of the (real part of the) standard embedding.
    RationalInterval real_enclosure(long precision_bits) const;

    std::complex<double> to_complex() const;

    // Canonical scalar-grammar rendering; see parse_exact_scalar.
    std::string to_string() const;

private:
    Cyclotomic(unsigned order, std::vector<Rational> coeffs)
        : order_(order), coeffs_(std::move(coeffs)) {}

    unsigned order_;
    std::vector<Rational> coeffs_;
};

// Euler's totient, used for basis sizes.
unsigned euler_phi(unsigned n);

inline int sign_to_int(Sign s) {
    return s == Sign::positive ? 1 : (s == Sign::negative ? -1 : 0);
}

}  // namespace eqlines
