#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

#include "eqlines/errors.hpp"

namespace eqlines {

// Arbitrary-precision rational number. Thin wrapper over GMP's mpq_class
// that keeps the value canonical: denominator > 0, gcd(|num|, den) = 1,
// zero is 0/1. All arithmetic preserves canonical form.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(long n, long d) : q_(n, d) {
        if (d == 0) throw DivisionByZeroError();
        q_.canonicalize();
    }
    Rational(const mpz_class& n, const mpz_class& d) : q_(n, d) {
        if (d == 0) throw DivisionByZeroError();
        q_.canonicalize();
    }
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    const mpq_class& value() const { return q_; }
    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational abs() const { return Rational(mpq_class(::abs(q_))); }
    Rational reciprocal() const {
        if (is_zero()) throw DivisionByZeroError();
        return Rational(mpq_class(1 / q_));
    }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw DivisionByZeroError();
        return Rational(mpq_class(a.q_ / b.q_));
    }
    Rational operator-() const { return Rational(mpq_class(-q_)); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    double to_double() const { return q_.get_d(); }

    // "p" for integers, "p/q" otherwise.
    std::string to_string() const { return q_.get_str(); }

private:
    mpq_class q_;
};

// Closed interval with exact rational endpoints. Used to certify the sign
// of real cyclotomic values: endpoint arithmetic is exact, so the only
// approximation in an enclosure comes from the transcendental seeds.
class RationalInterval {
public:
    RationalInterval() = default;
    RationalInterval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
        if (hi_ < lo_) throw Error("interval endpoints out of order");
    }

    const Rational& lower() const { return lo_; }
    const Rational& upper() const { return hi_; }

    bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
    bool strictly_positive() const { return lo_.sign() > 0; }
    bool strictly_negative() const { return hi_.sign() < 0; }

    RationalInterval operator+(const RationalInterval& o) const {
        return RationalInterval(lo_ + o.lo_, hi_ + o.hi_);
    }

    // Image of the interval under multiplication by an exact rational.
    RationalInterval scaled(const Rational& c) const {
        if (c.sign() >= 0) return RationalInterval(lo_ * c, hi_ * c);
        return RationalInterval(hi_ * c, lo_ * c);
    }

private:
    Rational lo_;
    Rational hi_;
};

}  // namespace eqlines
