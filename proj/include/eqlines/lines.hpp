#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "eqlines/hadamard.hpp"

namespace eqlines {

// Where a constructed vector came from: row `row_index` of H with
// coordinate `set_index` scaled by v.
struct Provenance {
    unsigned set_index;
    unsigned row_index;
    friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct LineVector {
    Provenance prov;
    Vector vec;
};

// The d^2 vectors of H(v), in set-major order: index = set * d + row.
struct LineSet {
    unsigned dim;
    Backend backend;
    std::vector<LineVector> vectors;
};

LineSet construct_hv(const HadamardMatrix& h, const Scalar& v);

enum class PairClass {
    within_set,                // same set, distinct rows (type i)
    same_row_across_sets,      // distinct sets, same row (type ii)
    distinct_rows_across_sets  // distinct sets, distinct rows (type iii)
};

PairClass classify_pair(const Provenance& p, const Provenance& q);

// The inner product of the vectors built from provenances p, q as an
// affine form c0 + cv*v + cvbar*conj(v) + cvv*|v|^2. Evaluating the form
// at any v agrees exactly with the concrete inner product.
struct InnerProductForm {
    Scalar c0;
    Scalar cv;
    Scalar cvbar;
    Scalar cvv;
    Scalar evaluate(const Scalar& v) const;
};

InnerProductForm inner_product_form(const HadamardMatrix& h, const Provenance& p, const Provenance& q);

struct PairViolation {
    std::size_t first;
    std::size_t second;
    Scalar magnitude_squared;
};

// verdict true requires: >= 2 vectors, none zero, all norms equal, all
// pairwise |<x,y>|^2 equal, and pairwise distinct lines. Vector-level
// problems (zero vector, norm mismatch) are reported with first == second.
struct EquiangularityReport {
    bool verdict = false;
    bool distinct_lines = true;
    std::optional<Scalar> common_magnitude_squared;
    std::optional<Scalar> sic_ratio;  // |<x,y>|^2 / (norm^2)^2
    std::vector<PairViolation> violations;
};

EquiangularityReport verify_equiangular(const LineSet& lines, double tol = 1e-10);

// Per-vector multiset of entry |.|^2 values, each sorted ascending.
std::vector<std::vector<Scalar>> almost_flat_profile(const LineSet& lines);

// Maps every vector to scale * U * x, preserving provenance tags.
LineSet unitary_transform(const LineSet& lines, const Matrix& u, const Scalar& scale);

// Exact 8x8 unitary relating the order-8 construction to the classical
// Hoggar line set; satisfies U * U^dagger = I exactly.
Matrix hoggar_unitary();

}  // namespace eqlines
