#include "eqlines/solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "eqlines/errors.hpp"

namespace eqlines {

namespace {

// N = f^2 * d with d free of square factors (up to the trial-division
// bound; a residual prime-square factor would need N > 10^12).
void extract_square_part(mpz_class n, mpz_class& f, mpz_class& d) {
    f = 1;
    d = 1;
    for (unsigned long p = 2; p <= 10000; p == 2 ? p = 3 : p += 2) {
        if (n < static_cast<long>(p) * static_cast<long>(p)) break;
        unsigned count = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            ++count;
        }
        for (unsigned k = 0; k + 1 < count; k += 2) f *= static_cast<long>(p);
        if (count % 2) d *= static_cast<long>(p);
    }
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        mpz_class root;
        mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
        f *= root;
    } else {
        d *= n;
    }
}

int sign_of(const Cyclotomic& real_value) { return sign_to_int(real_value.sign_real()); }

}  // namespace

RealAlgebraic RealAlgebraic::from_cyclotomic(Cyclotomic value) {
    if (!value.is_real()) throw NotRealError();
    return RealAlgebraic(std::move(value));
}

RealAlgebraic RealAlgebraic::from_rational(const Rational& value) {
    return RealAlgebraic(Cyclotomic::from_rational(value));
}

RealAlgebraic RealAlgebraic::make_surd(const Rational& p, const Rational& q, const mpz_class& radicand) {
    if (radicand < 0) throw Error("internal: negative radicand");
    mpz_class f, d;
    extract_square_part(radicand, f, d);
    Rational q_scaled = q * Rational(f, mpz_class(1));
    if (d == 1) return from_rational(p + q_scaled);  // sqrt(1) folds into the rational part
    if (q_scaled.is_zero()) return from_rational(p);
    if (d == 2 || d == 3 || d == 5) {
        Cyclotomic root = Cyclotomic::sqrt_integer(static_cast<unsigned>(d.get_ui()));
        return RealAlgebraic(Cyclotomic::from_rational(p) + Cyclotomic::from_rational(q_scaled) * root);
    }
    return RealAlgebraic(Surd{p, q_scaled, d});
}

double RealAlgebraic::approx() const {
    if (is_cyclotomic()) return cyclotomic().to_complex().real();
    const Surd& s = surd();
    return s.p.to_double() + s.q.to_double() * std::sqrt(s.radicand.get_d());
}

std::string RealAlgebraic::to_string() const {
    if (is_cyclotomic()) return cyclotomic().to_string();
    const Surd& s = surd();
    std::string out = s.p.to_string();
    out += s.q.sign() < 0 ? "-" : "+";
    Rational mag = s.q.abs();
    if (mag != Rational(1)) out += mag.to_string() + "*";
    out += "sqrt(" + s.radicand.get_str() + ")";
    return out;
}

bool operator==(const RealAlgebraic& a, const RealAlgebraic& b) {
    if (a.is_cyclotomic() != b.is_cyclotomic()) return false;
    if (a.is_cyclotomic()) return a.cyclotomic() == b.cyclotomic();
    return a.surd().p == b.surd().p && a.surd().q == b.surd().q &&
           a.surd().radicand == b.surd().radicand;
}

bool RealAlgebraic::value_less(const RealAlgebraic& a, const RealAlgebraic& b) {
    if (a.is_cyclotomic() && b.is_cyclotomic())
        return (a.cyclotomic() - b.cyclotomic()).sign_real() == Sign::negative;
    if (a.is_cyclotomic() != b.is_cyclotomic()) return a.is_cyclotomic();
    const Surd& x = a.surd();
    const Surd& y = b.surd();
    if (x.radicand != y.radicand) return x.radicand < y.radicand;
    // sign of (dp + dq*sqrt(D))
    Rational dp = x.p - y.p;
    Rational dq = x.q - y.q;
    if (dq.is_zero()) return dp.sign() < 0;
    if (dp.is_zero()) return dq.sign() < 0;
    if (dp.sign() == dq.sign()) return dp.sign() < 0;
    Rational lhs = dp * dp - dq * dq * Rational(x.radicand, mpz_class(1));
    return dp.sign() * lhs.sign() < 0;
}

Cyclotomic LinearForm::evaluate(const Cyclotomic& a, const Cyclotomic& b) const {
    return a_coef * a + b_coef * b + constant;
}

bool LinearForm::is_rational() const {
    return a_coef.is_rational() && b_coef.is_rational() && constant.is_rational();
}

std::string LinearForm::to_string() const {
    return "(" + a_coef.to_string() + ")*a+(" + b_coef.to_string() + ")*b+(" +
           constant.to_string() + ")";
}

Cyclotomic ConstraintSystem::circle(const Cyclotomic& a, const Cyclotomic& b) const {
    return a * a + b * b - Cyclotomic::from_integer(1);
}

ConstraintSystem build_constraints(const HadamardMatrix& h) {
    if (!h.certified) throw CertifyError("constraints require a certified matrix");
    if (h.body.backend() != Backend::exact)
        throw UnsupportedScalarError("the exact solver requires the exact backend");
    if (h.order < 2) throw Error("the construction needs order >= 2");
    for (const auto& e : h.body.entries()) {
        if (!e.exact().as_root_of_unity())
            throw UnsupportedScalarError(
                "entry is not a root of unity; only Butson-type matrices are supported in exact mode");
    }

    ConstraintSystem cs;
    cs.order = h.order;
    cs.rowline = LinearForm{Cyclotomic::from_integer(2), Cyclotomic(),
                            Cyclotomic::from_integer(static_cast<long>(h.order) - 2)};
    for (const auto& mu : mu_set(h).values) cs.mu_values.push_back(mu.exact());

    const Cyclotomic i = Cyclotomic::i();
    for (const auto& mu : cs.mu_values) {
        Cyclotomic s = mu.sqrt_unimodular();
        // |(v-1)eta + (conj(v)-1)xi| = |2 Re(sqrt(mu) (v-1))|
        //                            = |2Re(s)(a-1) - 2Im(s) b|
        Cyclotomic a_coef = s + s.conjugate();
        Cyclotomic b_coef = i * (s - s.conjugate());
        LinearForm form{a_coef, b_coef, -a_coef};
        const Cyclotomic& lead = form.a_coef.is_zero() ? form.b_coef : form.a_coef;
        if (lead.sign_real() == Sign::negative) {
            form = LinearForm{-form.a_coef, -form.b_coef, -form.constant};
        }
        bool seen = false;
        for (const auto& existing : cs.linears) {
            if (existing.a_coef == form.a_coef && existing.b_coef == form.b_coef &&
                existing.constant == form.constant) {
                seen = true;
                break;
            }
        }
        if (!seen) cs.linears.push_back(std::move(form));
    }
    std::sort(cs.linears.begin(), cs.linears.end(), [](const LinearForm& x, const LinearForm& y) {
        int c = sign_of(x.a_coef - y.a_coef);
        if (c) return c < 0;
        c = sign_of(x.b_coef - y.b_coef);
        if (c) return c < 0;
        return sign_of(x.constant - y.constant) < 0;
    });
    return cs;
}

namespace {

// --- arithmetic in Q(sqrt(D)) for the exotic-radicand path ---

struct SurdVal {
    Rational p, q;
};

SurdVal surd_add(const SurdVal& x, const SurdVal& y) { return {x.p + y.p, x.q + y.q}; }
SurdVal surd_mul(const SurdVal& x, const SurdVal& y, const Rational& d) {
    return {x.p * y.p + x.q * y.q * d, x.p * y.q + x.q * y.p};
}
SurdVal surd_scale(const SurdVal& x, const Rational& c) { return {x.p * c, x.q * c}; }
bool surd_eq(const SurdVal& x, const SurdVal& y) { return x.p == y.p && x.q == y.q; }

// A solution candidate: a cyclotomic pair, or a pair in a common quadratic
// field Q(sqrt(radicand)) with a radicand the cyclotomic backend does not
// carry (one of the two coordinates may still be rational there).
struct Candidate {
    bool exact = true;
    Cyclotomic ca, cb;
    SurdVal sa{}, sb{};
    mpz_class radicand = 0;
    std::string signs;

    bool same_point(const Candidate& o) const {
        if (exact != o.exact) return false;
        if (exact) return ca == o.ca && cb == o.cb;
        return radicand == o.radicand && surd_eq(sa, o.sa) && surd_eq(sb, o.sb);
    }
};

struct EliminationRow {
    Cyclotomic a, b, c;  // a*x + b*y + c = 0
    bool trivial() const { return a.is_zero() && b.is_zero() && c.is_zero(); }
};

struct LinearOutcome {
    enum class Kind { inconsistent, point, line } kind = Kind::inconsistent;
    Cyclotomic pa, pb;                      // point
    Cyclotomic base_a, base_b, dir_a, dir_b;  // line: base + t * dir
};

LinearOutcome solve_rows(std::vector<EliminationRow> rows) {
    LinearOutcome out;
    std::erase_if(rows, [](const EliminationRow& r) { return r.trivial(); });
    if (rows.empty()) throw Error("internal: constraint rows reduced to nothing");

    auto pivot_a = std::find_if(rows.begin(), rows.end(),
                                [](const EliminationRow& r) { return !r.a.is_zero(); });
    if (pivot_a == rows.end()) {
        // every row is b*y + c = 0 with b or c nonzero
        auto pivot_b = std::find_if(rows.begin(), rows.end(),
                                    [](const EliminationRow& r) { return !r.b.is_zero(); });
        if (pivot_b == rows.end()) return out;  // some c != 0
        Cyclotomic y = -(pivot_b->c / pivot_b->b);
        for (const auto& r : rows) {
            if (!(r.b * y + r.c).is_zero()) return out;
        }
        out.kind = LinearOutcome::Kind::line;
        out.base_b = y;
        out.dir_a = Cyclotomic::from_integer(1);
        return out;
    }

    EliminationRow p = *pivot_a;
    std::vector<EliminationRow> rest;
    for (auto it = rows.begin(); it != rows.end(); ++it) {
        if (it == pivot_a) continue;
        Cyclotomic factor = it->a / p.a;
        EliminationRow r{Cyclotomic(), it->b - factor * p.b, it->c - factor * p.c};
        if (!r.trivial()) rest.push_back(std::move(r));
    }
    auto pivot_b = std::find_if(rest.begin(), rest.end(),
                                [](const EliminationRow& r) { return !r.b.is_zero(); });
    if (pivot_b == rest.end()) {
        for (const auto& r : rest) {
            if (!r.c.is_zero()) return out;
        }
        // one independent equation: b free, a = -(c + b*t) / a_p
        out.kind = LinearOutcome::Kind::line;
        out.base_a = -(p.c / p.a);
        out.dir_a = -(p.b / p.a);
        out.dir_b = Cyclotomic::from_integer(1);
        return out;
    }
    Cyclotomic y = -(pivot_b->c / pivot_b->b);
    for (const auto& r : rest) {
        if (!(r.b * y + r.c).is_zero()) return out;
    }
    out.kind = LinearOutcome::Kind::point;
    out.pb = y;
    out.pa = -((p.b * y + p.c) / p.a);
    return out;
}

bool filter_candidate(const ConstraintSystem& cs, const Candidate& cand) {
    if (cand.exact) {
        const Cyclotomic& a = cand.ca;
        const Cyclotomic& b = cand.cb;
        Cyclotomic r = cs.rowline.evaluate(a, b);
        Cyclotomic r2 = r * r;
        Cyclotomic x = cs.circle(a, b);
        if (x * x != r2) return false;
        for (const auto& l : cs.linears) {
            Cyclotomic lv = l.evaluate(a, b);
            if (lv * lv != r2) return false;
        }
        return true;
    }
    // Surd candidates only arise from rational solution lines, and a
    // rational line forces every linear form to be rational (an irrational
    // form is never rationally proportional to a rowline row), so the whole
    // check closes inside Q(sqrt(D)).
    const Rational d(cand.radicand, mpz_class(1));
    auto rational_of = [](const Cyclotomic& c) {
        auto q = c.as_rational();
        if (!q) throw UnsupportedScalarError("surd verification requires rational constraints");
        return *q;
    };
    const SurdVal one{Rational(1), Rational(0)};
    SurdVal x = surd_add(surd_add(surd_mul(cand.sa, cand.sa, d), surd_mul(cand.sb, cand.sb, d)),
                         surd_scale(one, Rational(-1)));
    SurdVal r = surd_add(surd_scale(cand.sa, Rational(2)),
                         SurdVal{rational_of(cs.rowline.constant), Rational(0)});
    SurdVal r2 = surd_mul(r, r, d);
    if (!surd_eq(surd_mul(x, x, d), r2)) return false;
    for (const auto& l : cs.linears) {
        SurdVal lv = surd_add(surd_add(surd_scale(cand.sa, rational_of(l.a_coef)),
                                       surd_scale(cand.sb, rational_of(l.b_coef))),
                              SurdVal{rational_of(l.constant), Rational(0)});
        if (!surd_eq(surd_mul(lv, lv, d), r2)) return false;
    }
    return true;
}

char circle_sign_char(const Cyclotomic& x, const Cyclotomic& r) {
    const bool plus = x == r;
    const bool minus = x == -r;
    if (plus && minus) return '0';
    return plus ? '+' : '-';
}

}  // namespace

SolutionSet solve_v(const HadamardMatrix& h) {
    SolutionSet out;
    out.order = h.order;

    MuSet mu = mu_set(h);
    if (mu.values.size() >= 3) {
        // Some row pair carries at least three distinct summand values,
        // which rules out equal type-(iii) magnitudes outright.
        out.certificate = EmptinessCertificate::mu_set_too_large;
        return out;
    }

    ConstraintSystem cs = build_constraints(h);
    const std::size_t m = cs.linears.size();

    std::vector<Candidate> candidates;
    auto add_candidate = [&](Candidate cand) {
        if (!filter_candidate(cs, cand)) return;
        for (const auto& seen : candidates) {
            if (seen.same_point(cand)) return;  // keep the first pattern found
        }
        candidates.push_back(std::move(cand));
    };

    for (std::size_t mask = 0; mask < (1ull << m); ++mask) {
        std::string pattern(m, '+');
        std::vector<EliminationRow> rows;
        for (std::size_t k = 0; k < m; ++k) {
            const bool negative = (mask >> (m - 1 - k)) & 1;  // lexicographic, '+' first
            if (negative) pattern[k] = '-';
            const Cyclotomic sg = Cyclotomic::from_integer(negative ? -1 : 1);
            rows.push_back(EliminationRow{cs.linears[k].a_coef - sg * cs.rowline.a_coef,
                                          cs.linears[k].b_coef - sg * cs.rowline.b_coef,
                                          cs.linears[k].constant - sg * cs.rowline.constant});
        }
        LinearOutcome outcome = solve_rows(std::move(rows));
        if (outcome.kind == LinearOutcome::Kind::inconsistent) continue;

        if (outcome.kind == LinearOutcome::Kind::point) {
            Cyclotomic x = cs.circle(outcome.pa, outcome.pb);
            Cyclotomic r = cs.rowline.evaluate(outcome.pa, outcome.pb);
            if (x * x != r * r) continue;
            Candidate cand;
            cand.exact = true;
            cand.ca = outcome.pa;
            cand.cb = outcome.pb;
            cand.signs = pattern + "|" + circle_sign_char(x, r);
            add_candidate(std::move(cand));
            continue;
        }

        // One-parameter family (a, b) = base + t * dir. Substituting into
        // the circle gives a genuine quadratic: the t^2 coefficient is
        // |dir|^2 > 0.
        auto pa = outcome.base_a.as_rational();
        auto pb = outcome.base_b.as_rational();
        auto ua = outcome.dir_a.as_rational();
        auto ub = outcome.dir_b.as_rational();
        if (!pa || !pb || !ua || !ub) {
            throw UnsupportedScalarError(
                "sign pattern produced an irrational solution line; not representable exactly");
        }
        const Rational d_const = *cs.rowline.constant.as_rational();
        for (int s = 0; s < 2; ++s) {
            const Rational sigma(s == 0 ? 1 : -1);
            const char circle_char = s == 0 ? '+' : '-';
            const Rational qa = *ua * *ua + *ub * *ub;
            const Rational qb = (*pa * *ua + *pb * *ub) * Rational(2) - sigma * Rational(2) * *ua;
            const Rational qc = *pa * *pa + *pb * *pb - Rational(1) -
                                sigma * (Rational(2) * *pa + d_const);
            const Rational disc = qb * qb - Rational(4) * qa * qc;
            if (disc.sign() < 0) continue;
            const Rational base_t = -qb / (Rational(2) * qa);
            std::vector<std::pair<Rational, Rational>> roots;  // t = first + second*sqrt(D)
            mpz_class radicand = 1;
            if (disc.is_zero()) {
                roots.emplace_back(base_t, Rational(0));
            } else {
                mpz_class n = disc.numerator() * disc.denominator();
                mpz_class f, dd;
                extract_square_part(n, f, dd);
                radicand = dd;
                Rational root_scale =
                    Rational(f, disc.denominator()) / (Rational(2) * qa);
                roots.emplace_back(base_t, root_scale);
                if (dd != 1) {
                    roots.emplace_back(base_t, -root_scale);
                } else {
                    // perfect-square discriminant: two rational roots
                    roots.back().first = base_t + root_scale;
                    roots.back().second = Rational(0);
                    roots.emplace_back(base_t - root_scale, Rational(0));
                }
            }
            for (const auto& [t0, t1] : roots) {
                // a = pa + t*ua, b = pb + t*ub
                const Rational ap = *pa + t0 * *ua;
                const Rational aq = t1 * *ua;
                const Rational bp = *pb + t0 * *ub;
                const Rational bq = t1 * *ub;
                Candidate cand;
                cand.signs = pattern + "|" + circle_char;
                // radicand is already square-free here
                const bool use_surd = !t1.is_zero() && radicand != 1 && radicand != 2 &&
                                      radicand != 3 && radicand != 5;
                if (use_surd) {
                    cand.exact = false;
                    cand.radicand = radicand;
                    cand.sa = SurdVal{ap, aq};
                    cand.sb = SurdVal{bp, bq};
                } else {
                    RealAlgebraic a = RealAlgebraic::make_surd(ap, aq, radicand);
                    RealAlgebraic b = RealAlgebraic::make_surd(bp, bq, radicand);
                    cand.exact = true;
                    cand.ca = a.cyclotomic();
                    cand.cb = b.cyclotomic();
                }
                add_candidate(std::move(cand));
            }
        }
    }

    std::vector<Solution> solutions;
    for (const auto& cand : candidates) {
        Solution sol{cand.exact ? RealAlgebraic::from_cyclotomic(cand.ca)
                                : RealAlgebraic::make_surd(cand.sa.p, cand.sa.q, cand.radicand),
                     cand.exact ? RealAlgebraic::from_cyclotomic(cand.cb)
                                : RealAlgebraic::make_surd(cand.sb.p, cand.sb.q, cand.radicand),
                     std::nullopt, cand.signs};
        if (cand.exact) {
            Cyclotomic v = cand.ca + Cyclotomic::i() * cand.cb;
            // Soundness invariant: every reported v re-verifies end to end.
            EquiangularityReport rep = verify_equiangular(construct_hv(h, Scalar(v)));
            if (!rep.verdict) throw Error("internal: solver produced a non-equiangular value");
            sol.v = std::move(v);
        }
        solutions.push_back(std::move(sol));
    }
    std::sort(solutions.begin(), solutions.end(), [](const Solution& x, const Solution& y) {
        if (x.a != y.a) return RealAlgebraic::value_less(x.a, y.a);
        return RealAlgebraic::value_less(x.b, y.b);
    });
    out.values = std::move(solutions);

    if (out.values.empty()) out.certificate = EmptinessCertificate::sign_cases_exhausted;
    return out;
}

std::vector<std::pair<std::string, HadamardMatrix>> default_battery() {
    std::vector<std::pair<std::string, HadamardMatrix>> battery;
    battery.emplace_back("fourier:2", fourier(2));
    battery.emplace_back("fourier:3", fourier(3));
    battery.emplace_back("sylvester:2", sylvester(2));
    battery.emplace_back("sylvester:3", sylvester(3));
    battery.emplace_back("sylvester:4", sylvester(4));
    for (unsigned n = 4; n <= 8; ++n) battery.emplace_back("fourier:" + std::to_string(n), fourier(n));
    return battery;
}

TheoremTable theorem_table(const std::vector<std::pair<std::string, HadamardMatrix>>& battery) {
    TheoremTable table;
    for (const auto& [label, h] : battery) {
        TheoremTableRow row;
        row.label = label;
        row.order = h.order;
        try {
            row.result = solve_v(h);
        } catch (const Error& e) {
            row.error = e.what();
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

std::string certificate_name(EmptinessCertificate c) {
    return c == EmptinessCertificate::mu_set_too_large ? "mu_set_too_large" : "sign_cases_exhausted";
}

std::string format_theorem_table(const TheoremTable& table) {
    std::ostringstream out;
    out << "label            order  admissible v\n";
    for (const auto& row : table.rows) {
        out << row.label;
        for (std::size_t k = row.label.size(); k < 17; ++k) out << ' ';
        std::string order = std::to_string(row.order);
        out << order;
        for (std::size_t k = order.size(); k < 7; ++k) out << ' ';
        if (!row.error.empty()) {
            out << "error: " << row.error;
        } else if (row.result->values.empty()) {
            out << "none (" << certificate_name(*row.result->certificate) << ")";
        } else {
            bool first = true;
            for (const auto& sol : row.result->values) {
                if (!first) out << ", ";
                first = false;
                if (sol.v) {
                    out << sol.v->to_string();
                } else {
                    out << "(" << sol.a.to_string() << ")+(" << sol.b.to_string() << ")*i";
                }
            }
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace eqlines
