#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "eqlines/matrix.hpp"

namespace eqlines {

// A certified complex Hadamard matrix: every entry has |h|^2 = 1 and
// H * H^dagger = d * I. Instances are only produced by certify_hadamard,
// the generators, and equivalence transforms, all of which preserve the
// defining properties.
struct HadamardMatrix {
    unsigned order;
    Matrix body;
    bool certified;
};

// Full check of unimodularity and row orthogonality. Exact matrices are
// checked exactly; floating matrices within tol.
HadamardMatrix certify_hadamard(const Matrix& m, double tol = 1e-10);

// Entry (j, k) = zeta_n^{jk}.
HadamardMatrix fourier(unsigned n);
// Order 2^k with +-1 entries via the doubling construction
// H_{2m} = [[H_m, H_m], [H_m, -H_m]].
HadamardMatrix sylvester(unsigned k);

// H' = D P H P' D': result(j, k) = left_phases[j] * H(row_perm[j],
// col_perm[k]) * right_phases[k].
struct EquivalenceWitness {
    std::vector<Scalar> left_phases;
    std::vector<std::size_t> row_perm;
    std::vector<std::size_t> col_perm;
    std::vector<Scalar> right_phases;
};

EquivalenceWitness identity_witness(unsigned d, Backend backend);
// Deterministic seeded witness: uniform permutations and phases drawn from
// the 24th roots of unity, so scrambles stay inside Q(zeta_24).
EquivalenceWitness random_equivalence_witness(unsigned d, std::uint64_t seed);

HadamardMatrix apply_equivalence(const HadamardMatrix& h, const EquivalenceWitness& w);

// Equivalence with all entries of the pivot row and pivot column mapped
// to 1; entry (j, k) of the result is h_jk * conj(h_pk) * conj(h_jq) * h_pq
// for pivot (p, q). The witness reproduces the output via apply_equivalence.
std::pair<HadamardMatrix, EquivalenceWitness> dephase(const HadamardMatrix& h,
                                                      std::size_t pivot_row = 0,
                                                      std::size_t pivot_col = 0);

// The set { h_rj * conj(h_sj) * conj(h_rk) * h_sk : r != s, j != k }.
// Invariant under equivalence and closed under conjugation; it governs the
// cross-row inner products of the H(v) construction.
struct MuSet {
    std::vector<Scalar> values;  // deduplicated, deterministic order
    bool contains(const Scalar& x, double tol = 0.0) const;
    bool subset_of_plus_minus_one(double tol = 0.0) const;
};

MuSet mu_set(const HadamardMatrix& h, double tol = 1e-10);

struct RealEquivalence {
    HadamardMatrix matrix;  // entries all +-1
    EquivalenceWitness witness;
};

// Decides whether H is equivalent to a real Hadamard matrix: dephasing at
// (0,0) yields +-1 entries iff mu_set(H) is contained in {1, -1}.
std::optional<RealEquivalence> real_equivalence(const HadamardMatrix& h, double tol = 1e-10);

}  // namespace eqlines
