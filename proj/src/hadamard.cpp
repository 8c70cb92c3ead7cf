#include "eqlines/hadamard.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <string>

#include "eqlines/errors.hpp"

namespace eqlines {

namespace {

bool is_unimodular(const Scalar& x, double tol) {
    return x.abs_squared().equals(Scalar::one(x.backend()), tol);
}

void require_certified(const HadamardMatrix& h) {
    if (!h.certified) throw CertifyError("matrix is not certified");
}

void check_permutation(const std::vector<std::size_t>& perm, unsigned d, const char* what) {
    if (perm.size() != d) throw DimensionError(std::string(what) + " has wrong length");
    std::vector<bool> seen(d, false);
    for (std::size_t p : perm) {
        if (p >= d || seen[p]) throw Error(std::string(what) + " is not a permutation");
        seen[p] = true;
    }
}

// Deterministic ordering for value sets: by numeric approximation, with the
// rendered form as an exact tiebreaker.
bool scalar_before(const Scalar& a, const Scalar& b) {
    auto za = a.approx();
    auto zb = b.approx();
    if (za.real() != zb.real()) return za.real() < zb.real();
    if (za.imag() != zb.imag()) return za.imag() < zb.imag();
    return a.to_string() < b.to_string();
}

}  // namespace

HadamardMatrix certify_hadamard(const Matrix& m, double tol) {
    if (m.rows() != m.cols()) throw CertifyError("matrix is not square");
    const std::size_t d = m.rows();
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            if (!is_unimodular(m.at(r, c), tol)) {
                throw CertifyError("entry (" + std::to_string(r) + "," + std::to_string(c) +
                                   ") is not unimodular");
            }
        }
    }
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t s = r + 1; s < d; ++s) {
            if (!inner_product(m.row(r), m.row(s)).is_zero(tol * static_cast<double>(d))) {
                throw CertifyError("rows " + std::to_string(r) + "," + std::to_string(s) +
                                   " are not orthogonal");
            }
        }
    }
    return HadamardMatrix{static_cast<unsigned>(d), m, true};
}

HadamardMatrix fourier(unsigned n) {
    if (n == 0) throw Error("order must be positive");
    std::vector<Scalar> entries;
    entries.reserve(static_cast<std::size_t>(n) * n);
    for (unsigned j = 0; j < n; ++j) {
        for (unsigned k = 0; k < n; ++k) {
            entries.emplace_back(Cyclotomic::root_of_unity(n, static_cast<long>(j) * k));
        }
    }
    return HadamardMatrix{n, Matrix(n, n, Backend::exact, std::move(entries)), true};
}

HadamardMatrix sylvester(unsigned k) {
    std::size_t d = 1ull << k;
    // entry (r, c) = (-1)^popcount(r & c)
    std::vector<Scalar> entries;
    entries.reserve(d * d);
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            int parity = std::popcount(r & c) & 1;
            entries.push_back(Scalar::exact_integer(parity ? -1 : 1));
        }
    }
    return HadamardMatrix{static_cast<unsigned>(d), Matrix(d, d, Backend::exact, std::move(entries)), true};
}

EquivalenceWitness identity_witness(unsigned d, Backend backend) {
    EquivalenceWitness w;
    w.left_phases.assign(d, Scalar::one(backend));
    w.right_phases.assign(d, Scalar::one(backend));
    w.row_perm.resize(d);
    w.col_perm.resize(d);
    std::iota(w.row_perm.begin(), w.row_perm.end(), 0);
    std::iota(w.col_perm.begin(), w.col_perm.end(), 0);
    return w;
}

EquivalenceWitness random_equivalence_witness(unsigned d, std::uint64_t seed) {
    std::mt19937_64 eng(seed);
    std::uniform_int_distribution<long> phase(0, 23);
    EquivalenceWitness w = identity_witness(d, Backend::exact);
    for (unsigned j = 0; j < d; ++j) {
        w.left_phases[j] = Scalar(Cyclotomic::root_of_unity(24, phase(eng)));
        w.right_phases[j] = Scalar(Cyclotomic::root_of_unity(24, phase(eng)));
    }
    std::shuffle(w.row_perm.begin(), w.row_perm.end(), eng);
    std::shuffle(w.col_perm.begin(), w.col_perm.end(), eng);
    return w;
}

HadamardMatrix apply_equivalence(const HadamardMatrix& h, const EquivalenceWitness& w) {
    const unsigned d = h.order;
    if (w.left_phases.size() != d || w.right_phases.size() != d)
        throw DimensionError("witness phase vectors have wrong length");
    check_permutation(w.row_perm, d, "row permutation");
    check_permutation(w.col_perm, d, "column permutation");
    for (const auto& p : w.left_phases)
        if (!is_unimodular(p, 1e-10)) throw Error("left phase is not unimodular");
    for (const auto& p : w.right_phases)
        if (!is_unimodular(p, 1e-10)) throw Error("right phase is not unimodular");
    std::vector<Scalar> entries;
    entries.reserve(static_cast<std::size_t>(d) * d);
    for (unsigned j = 0; j < d; ++j) {
        for (unsigned k = 0; k < d; ++k) {
            entries.push_back(w.left_phases[j] * h.body.at(w.row_perm[j], w.col_perm[k]) *
                              w.right_phases[k]);
        }
    }
    return HadamardMatrix{d, Matrix(d, d, h.body.backend(), std::move(entries)), h.certified};
}

std::pair<HadamardMatrix, EquivalenceWitness> dephase(const HadamardMatrix& h,
                                                      std::size_t pivot_row,
                                                      std::size_t pivot_col) {
    const unsigned d = h.order;
    if (pivot_row >= d || pivot_col >= d) throw DimensionError("pivot out of range");
    // Unimodular entries invert by conjugation, so the four-entry product
    // h_jk * conj(h_pk) * conj(h_jq) * h_pq is realized by row phases
    // conj(h_jq) and column phases conj(h_pk) * h_pq.
    EquivalenceWitness w = identity_witness(d, h.body.backend());
    const Scalar pivot = h.body.at(pivot_row, pivot_col);
    for (unsigned j = 0; j < d; ++j) w.left_phases[j] = h.body.at(j, pivot_col).conjugate();
    for (unsigned k = 0; k < d; ++k) w.right_phases[k] = h.body.at(pivot_row, k).conjugate() * pivot;
    return {apply_equivalence(h, w), w};
}

bool MuSet::contains(const Scalar& x, double tol) const {
    for (const auto& v : values)
        if (v.equals(x, tol)) return true;
    return false;
}

bool MuSet::subset_of_plus_minus_one(double tol) const {
    for (const auto& v : values) {
        const Scalar one = Scalar::one(v.backend());
        if (!v.equals(one, tol) && !v.equals(-one, tol)) return false;
    }
    return true;
}

MuSet mu_set(const HadamardMatrix& h, double tol) {
    require_certified(h);
    const unsigned d = h.order;
    MuSet out;
    for (unsigned r = 0; r < d; ++r) {
        for (unsigned s = 0; s < d; ++s) {
            if (s == r) continue;
            for (unsigned j = 0; j < d; ++j) {
                for (unsigned k = 0; k < d; ++k) {
                    if (k == j) continue;
                    Scalar mu = h.body.at(r, j) * h.body.at(s, j).conjugate() *
                                h.body.at(r, k).conjugate() * h.body.at(s, k);
                    if (!out.contains(mu, h.body.backend() == Backend::exact ? 0.0 : tol)) {
                        out.values.push_back(std::move(mu));
                    }
                }
            }
        }
    }
    std::sort(out.values.begin(), out.values.end(), scalar_before);
    return out;
}

std::optional<RealEquivalence> real_equivalence(const HadamardMatrix& h, double tol) {
    require_certified(h);
    auto [dephased, witness] = dephase(h, 0, 0);
    const Scalar one = Scalar::one(h.body.backend());
    for (std::size_t r = 0; r < h.order; ++r) {
        for (std::size_t c = 0; c < h.order; ++c) {
            const Scalar& e = dephased.body.at(r, c);
            if (!e.equals(one, tol) && !e.equals(-one, tol)) return std::nullopt;
        }
    }
    return RealEquivalence{std::move(dephased), std::move(witness)};
}

}  // namespace eqlines
