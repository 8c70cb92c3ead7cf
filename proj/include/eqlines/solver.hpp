#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "eqlines/lines.hpp"

namespace eqlines {

// Quadratic irrational p + q*sqrt(radicand) with rational p, q. Kept only
// for radicands outside {2, 3, 5}; those inside convert to Cyclotomic.
struct Surd {
    Rational p;
    Rational q;           // nonzero
    mpz_class radicand;   // >= 2, square part removed
};

// A totally real exact value: cyclotomic, or a quadratic surd the
// cyclotomic backend does not carry.
class RealAlgebraic {
public:
    static RealAlgebraic from_cyclotomic(Cyclotomic value);
    static RealAlgebraic from_rational(const Rational& value);
    // p + q*sqrt(radicand), normalized: zero q or square radicand collapses
    // to a rational; radicands 2, 3, 5 convert to Cyclotomic.
    static RealAlgebraic make_surd(const Rational& p, const Rational& q, const mpz_class& radicand);

    bool is_cyclotomic() const { return std::holds_alternative<Cyclotomic>(v_); }
    const Cyclotomic& cyclotomic() const { return std::get<Cyclotomic>(v_); }
    const Surd& surd() const { return std::get<Surd>(v_); }

    double approx() const;
    std::string to_string() const;

    friend bool operator==(const RealAlgebraic& a, const RealAlgebraic& b);
    friend bool operator!=(const RealAlgebraic& a, const RealAlgebraic& b) { return !(a == b); }
    // Exact value order within a representation; cyclotomic sorts before
    // surd values of a different field.
    static bool value_less(const RealAlgebraic& a, const RealAlgebraic& b);

private:
    explicit RealAlgebraic(Cyclotomic c) : v_(std::move(c)) {}
    explicit RealAlgebraic(Surd s) : v_(std::move(s)) {}
    std::variant<Cyclotomic, Surd> v_;
};

// a_coef * a + b_coef * b + constant, with totally real coefficients.
struct LinearForm {
    Cyclotomic a_coef;
    Cyclotomic b_coef;
    Cyclotomic constant;
    Cyclotomic evaluate(const Cyclotomic& a, const Cyclotomic& b) const;
    bool is_rational() const;
    std::string to_string() const;
};

// The magnitude-equality system governing H(v):
//   |a^2 + b^2 - 1| = |rowline| = |L_mu| for every mu in mu_set(H).
// Each type-(iii) inner product (v-1)*eta + (conj(v)-1)*xi has magnitude
// |2 Re(sqrt(mu) (v-1))| with mu = eta * conj(xi), which is linear in
// (a, b); the identity is property-tested against InnerProductForm.
struct ConstraintSystem {
    unsigned order;
    LinearForm rowline;               // 2a + d - 2
    std::vector<LinearForm> linears;  // normalized, deduplicated, sorted
    std::vector<Cyclotomic> mu_values;
    Cyclotomic circle(const Cyclotomic& a, const Cyclotomic& b) const;  // a^2+b^2-1
};

// Requires a certified exact matrix with all entries roots of unity
// (Butson type) and order >= 2.
ConstraintSystem build_constraints(const HadamardMatrix& h);

enum class EmptinessCertificate { mu_set_too_large, sign_cases_exhausted };

struct Solution {
    RealAlgebraic a;
    RealAlgebraic b;
    std::optional<Cyclotomic> v;  // a + i*b when cyclotomic-representable
    std::string signs;            // one char per linear, then '|', then the circle sign
};

struct SolutionSet {
    unsigned order = 0;
    std::vector<Solution> values;
    std::optional<EmptinessCertificate> certificate;
};

// All v for which H(v) is a set of d^2 equiangular lines. Candidates come
// from exhaustive sign-pattern enumeration over the linear constraints,
// substitution into the circle constraint, and exact filtering against the
// full system; cyclotomic-representable survivors are re-verified through
// construct_hv + verify_equiangular.
SolutionSet solve_v(const HadamardMatrix& h);

struct TheoremTableRow {
    std::string label;
    unsigned order = 0;
    std::optional<SolutionSet> result;
    std::string error;
};

struct TheoremTable {
    std::vector<TheoremTableRow> rows;
};

TheoremTable theorem_table(const std::vector<std::pair<std::string, HadamardMatrix>>& battery);
std::vector<std::pair<std::string, HadamardMatrix>> default_battery();
std::string format_theorem_table(const TheoremTable& table);
std::string certificate_name(EmptinessCertificate c);

}  // namespace eqlines
