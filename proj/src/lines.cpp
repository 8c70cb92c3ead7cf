#include "eqlines/lines.hpp"

#include <algorithm>
#include <string>

#include "eqlines/errors.hpp"

namespace eqlines {

LineSet construct_hv(const HadamardMatrix& h, const Scalar& v) {
    if (!h.certified) throw CertifyError("construction requires a certified matrix");
    if (v.backend() != h.body.backend()) throw BackendError("v and H use different backends");
    const unsigned d = h.order;
    LineSet out{d, h.body.backend(), {}};
    out.vectors.reserve(static_cast<std::size_t>(d) * d);
    for (unsigned j = 0; j < d; ++j) {
        for (unsigned r = 0; r < d; ++r) {
            Vector row = h.body.row(r);
            row[j] = row[j] * v;
            out.vectors.push_back(LineVector{Provenance{j, r}, std::move(row)});
        }
    }
    return out;
}

PairClass classify_pair(const Provenance& p, const Provenance& q) {
    if (p == q) throw Error("pair classification requires distinct provenances");
    if (p.set_index == q.set_index) return PairClass::within_set;
    if (p.row_index == q.row_index) return PairClass::same_row_across_sets;
    return PairClass::distinct_rows_across_sets;
}

Scalar InnerProductForm::evaluate(const Scalar& v) const {
    return c0 + cv * v + cvbar * v.conjugate() + cvv * v * v.conjugate();
}

InnerProductForm inner_product_form(const HadamardMatrix& h, const Provenance& p, const Provenance& q) {
    if (p == q) throw Error("inner product form requires distinct provenances");
    const Scalar row_ip = inner_product(h.body.row(p.row_index), h.body.row(q.row_index));
    const Scalar zero = Scalar::zero(h.body.backend());
    if (p.set_index == q.set_index) {
        // both vectors scaled in the same coordinate:
        // <x,y> = S + (|v|^2 - 1) * u with u = h_rj * conj(h_sj)
        Scalar u = h.body.at(p.row_index, p.set_index) * h.body.at(q.row_index, q.set_index).conjugate();
        return InnerProductForm{row_ip - u, zero, zero, u};
    }
    // distinct coordinates: <x,y> = S + (v - 1) * eta + (conj(v) - 1) * xi
    Scalar eta = h.body.at(p.row_index, p.set_index) * h.body.at(q.row_index, p.set_index).conjugate();
    Scalar xi = h.body.at(p.row_index, q.set_index) * h.body.at(q.row_index, q.set_index).conjugate();
    return InnerProductForm{row_ip - eta - xi, eta, xi, zero};
}

namespace {

// x and y span the same line iff the coordinate cross products vanish.
bool proportional(const Vector& x, const Vector& y, double tol) {
    std::size_t t = 0;
    while (t < x.dim() && x[t].is_zero(tol)) ++t;
    if (t == x.dim()) return y.is_zero(tol);
    for (std::size_t m = 0; m < x.dim(); ++m) {
        if (!(x[m] * y[t]).equals(x[t] * y[m], tol)) return false;
    }
    return true;
}

bool scalar_before(const Scalar& a, const Scalar& b) {
    auto za = a.approx();
    auto zb = b.approx();
    if (za.real() != zb.real()) return za.real() < zb.real();
    if (za.imag() != zb.imag()) return za.imag() < zb.imag();
    return a.to_string() < b.to_string();
}

}  // namespace

EquiangularityReport verify_equiangular(const LineSet& lines, double tol) {
    EquiangularityReport report;
    const std::size_t n = lines.vectors.size();
    if (n < 2) return report;
    const bool exact = lines.backend == Backend::exact;
    const double eq_tol = exact ? 0.0 : tol;

    std::vector<Scalar> norms;
    norms.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        const Vector& x = lines.vectors[k].vec;
        if (x.is_zero(eq_tol)) {
            report.violations.push_back({k, k, Scalar::zero(lines.backend)});
        }
        norms.push_back(inner_product(x, x));
    }
    for (std::size_t k = 1; k < n; ++k) {
        if (!norms[k].equals(norms[0], eq_tol)) report.violations.push_back({k, k, norms[k]});
    }

    std::optional<Scalar> common;
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
            Scalar m2 = inner_product(lines.vectors[p].vec, lines.vectors[q].vec).abs_squared();
            if (!common) {
                common = m2;
            } else if (!m2.equals(*common, eq_tol)) {
                report.violations.push_back({p, q, m2});
            }
            if (report.distinct_lines && proportional(lines.vectors[p].vec, lines.vectors[q].vec, eq_tol)) {
                report.distinct_lines = false;
            }
        }
    }

    report.verdict = report.violations.empty() && report.distinct_lines;
    if (report.verdict) {
        report.common_magnitude_squared = common;
        report.sic_ratio = *common * (norms[0] * norms[0]).inverse();
    }
    return report;
}

std::vector<std::vector<Scalar>> almost_flat_profile(const LineSet& lines) {
    std::vector<std::vector<Scalar>> out;
    out.reserve(lines.vectors.size());
    for (const auto& lv : lines.vectors) {
        std::vector<Scalar> mags;
        mags.reserve(lv.vec.dim());
        for (const auto& e : lv.vec.entries()) mags.push_back(e.abs_squared());
        std::sort(mags.begin(), mags.end(), scalar_before);
        out.push_back(std::move(mags));
    }
    return out;
}

LineSet unitary_transform(const LineSet& lines, const Matrix& u, const Scalar& scale) {
    if (u.rows() != u.cols() || u.rows() != lines.dim) throw DimensionError("transform matrix must be dim x dim");
    if (u.backend() != lines.backend || scale.backend() != lines.backend)
        throw BackendError("transform backend mismatch");
    if (scale.is_zero()) throw Error("transform scale must be nonzero");
    LineSet out{lines.dim, lines.backend, {}};
    out.vectors.reserve(lines.vectors.size());
    for (const auto& lv : lines.vectors) {
        out.vectors.push_back(LineVector{lv.prov, eqlines::scale(mat_vec(u, lv.vec), scale)});
    }
    return out;
}

Matrix hoggar_unitary() {
    // entries encoded as 0, +-1, +-i, all halved
    const int code[8][8] = {
        {0, 0, 2, -1, 0, 0, 1, 2},  {0, 0, -1, 2, 0, 0, 2, 1},
        {-1, 2, 0, 0, -2, -1, 0, 0}, {-2, 1, 0, 0, 1, 2, 0, 0},
        {0, 0, -2, 1, 0, 0, 1, 2},  {0, 0, 1, -2, 0, 0, 2, 1},
        {1, -2, 0, 0, -2, -1, 0, 0}, {2, -1, 0, 0, 1, 2, 0, 0},
    };
    const Cyclotomic half = Cyclotomic::from_rational(Rational(1, 2));
    const Cyclotomic i = Cyclotomic::i();
    std::vector<Scalar> entries;
    entries.reserve(64);
    for (const auto& row : code) {
        for (int c : row) {
            Cyclotomic base;
            switch (c) {
                case 0: base = Cyclotomic(); break;
                case 1: base = Cyclotomic::from_integer(1); break;
                case -1: base = Cyclotomic::from_integer(-1); break;
                case 2: base = i; break;
                case -2: base = -i; break;
            }
            entries.emplace_back(base * half);
        }
    }
    return Matrix(8, 8, Backend::exact, std::move(entries));
}

}  // namespace eqlines
