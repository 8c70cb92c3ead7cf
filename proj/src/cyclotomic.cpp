#include "eqlines/cyclotomic.hpp"

#include <mpfr.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "eqlines/scalar_text.hpp"

namespace eqlines {

namespace {

std::atomic<unsigned> g_max_order{360};

// Per-order reduction data: the n-th cyclotomic polynomial (monic, integer
// coefficients) plus a rational copy used during reduction. Built once per
// order, read-only afterwards.
struct OrderTable {
    unsigned n = 0;
    unsigned phi = 0;
    std::vector<mpz_class> cyclo;    // size phi+1, cyclo[phi] == 1
    std::vector<Rational> cyclo_q;   // same coefficients as Rational
};

std::vector<unsigned> proper_divisors(unsigned n) {
    std::vector<unsigned> out;
    for (unsigned d = 1; d < n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

// Exact division of integer polynomials; the divisor must be monic and
// must divide exactly.
std::vector<mpz_class> divide_monic(std::vector<mpz_class> num, const std::vector<mpz_class>& den) {
    const std::size_t dn = den.size() - 1;
    if (num.size() - 1 < dn) throw Error("internal: bad cyclotomic division");
    std::vector<mpz_class> quot(num.size() - den.size() + 1);
    for (std::size_t i = quot.size(); i-- > 0;) {
        mpz_class c = num[i + dn];
        quot[i] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dn; ++j) num[i + j] -= c * den[j];
    }
    for (const auto& c : num)
        if (c != 0) throw Error("internal: cyclotomic division left a remainder");
    return quot;
}

const OrderTable& order_table(unsigned n);

std::unique_ptr<OrderTable> build_table(unsigned n) {
    auto t = std::make_unique<OrderTable>();
    t->n = n;
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
    std::vector<mpz_class> poly(n + 1);
    poly[0] = -1;
    poly[n] = 1;
    for (unsigned d : proper_divisors(n)) poly = divide_monic(std::move(poly), order_table(d).cyclo);
    t->cyclo = std::move(poly);
    t->phi = static_cast<unsigned>(t->cyclo.size() - 1);
    t->cyclo_q.reserve(t->cyclo.size());
    for (const auto& c : t->cyclo) t->cyclo_q.emplace_back(c, mpz_class(1));
    return t;
}

const OrderTable& order_table(unsigned n) {
    if (n == 0) throw Error("cyclotomic order must be positive");
    if (n > g_max_order.load()) throw UnsupportedOrderError(n, g_max_order.load());
    static std::mutex mu;
    static std::map<unsigned, std::unique_ptr<OrderTable>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return *it->second;
    }
    auto t = build_table(n);  // recurses into divisors without the lock held
    std::lock_guard<std::mutex> lock(mu);
    auto [it, inserted] = cache.try_emplace(n, std::move(t));
    return *it->second;
}

// Canonical reduction modulo Phi_n. Accepts any degree.
std::vector<Rational> reduce_mod_cyclo(std::vector<Rational> raw, const OrderTable& t) {
    if (raw.size() < t.phi) raw.resize(t.phi);
    for (std::size_t deg = raw.size(); deg-- > t.phi;) {
        if (raw[deg].is_zero()) continue;
        Rational c = raw[deg];
        raw[deg] = Rational(0);
        const std::size_t base = deg - t.phi;
        for (unsigned i = 0; i < t.phi; ++i) {
            if (t.cyclo[i] != 0) raw[base + i] -= c * t.cyclo_q[i];
        }
    }
    raw.resize(t.phi);
    return raw;
}

unsigned common_order(unsigned a, unsigned b) {
    unsigned long long l = std::lcm<unsigned long long>(a, b);
    unsigned max = g_max_order.load();
    if (l > max) throw UnsupportedOrderError(static_cast<unsigned>(std::min<unsigned long long>(l, ~0u)), max);
    return static_cast<unsigned>(l);
}

// --- dense rational polynomials for the inverse computation ---

using Poly = std::vector<Rational>;  // little-endian; empty == zero

void poly_trim(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    poly_trim(out);
    return out;
}

Poly poly_sub(Poly a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    poly_trim(a);
    return a;
}

std::pair<Poly, Poly> poly_divmod(Poly num, const Poly& den) {
    poly_trim(num);
    if (den.empty()) throw DivisionByZeroError();
    if (num.size() < den.size()) return {Poly{}, std::move(num)};
    Poly quot(num.size() - den.size() + 1);
    const Rational lead_inv = den.back().reciprocal();
    for (std::size_t i = quot.size(); i-- > 0;) {
        Rational c = num[i + den.size() - 1] * lead_inv;
        quot[i] = c;
        if (c.is_zero()) continue;
        for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }
    poly_trim(quot);
    poly_trim(num);
    return {std::move(quot), std::move(num)};
}

// --- certified trigonometric enclosures ---

class Mpfr {
public:
    explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(x_, prec); }
    ~Mpfr() { mpfr_clear(x_); }
    Mpfr(const Mpfr&) = delete;
    Mpfr& operator=(const Mpfr&) = delete;
    mpfr_ptr get() { return x_; }
    mpfr_srcptr get() const { return x_; }

private:
    mpfr_t x_;
};

Rational mpfr_to_rational(const Mpfr& x) {
    mpq_t q;
    mpq_init(q);
    mpfr_get_q(q, x.get());
    mpq_class out(q);
    mpq_clear(q);
    return Rational(out);
}

// Enclosure of cos(2*pi*k/n). The angle itself is enclosed with directed
// rounding; the cosine of the lower endpoint is then widened by the angle
// width (|cos'| <= 1), which keeps the bound rigorous.
RationalInterval cos_enclosure(unsigned n, unsigned k, mpfr_prec_t prec) {
    if (k == 0) return RationalInterval(Rational(1), Rational(1));
    Mpfr pi_lo(prec), pi_hi(prec), th_lo(prec), th_hi(prec), c_lo(prec), c_hi(prec), width(prec);
    mpfr_const_pi(pi_lo.get(), MPFR_RNDD);
    mpfr_const_pi(pi_hi.get(), MPFR_RNDU);
    mpq_class frac(2u * static_cast<unsigned long>(k), static_cast<unsigned long>(n));
    frac.canonicalize();
    mpfr_mul_q(th_lo.get(), pi_lo.get(), frac.get_mpq_t(), MPFR_RNDD);
    mpfr_mul_q(th_hi.get(), pi_hi.get(), frac.get_mpq_t(), MPFR_RNDU);
    mpfr_sub(width.get(), th_hi.get(), th_lo.get(), MPFR_RNDU);
    mpfr_cos(c_lo.get(), th_lo.get(), MPFR_RNDD);
    mpfr_cos(c_hi.get(), th_lo.get(), MPFR_RNDU);
    Rational w = mpfr_to_rational(width);
    return RationalInterval(mpfr_to_rational(c_lo) - w, mpfr_to_rational(c_hi) + w);
}

}  // namespace

unsigned max_cyclotomic_order() { return g_max_order.load(); }

void set_max_cyclotomic_order(unsigned order) {
    if (order == 0) throw Error("maximum order must be positive");
    g_max_order.store(order);
}

unsigned euler_phi(unsigned n) {
    unsigned result = n;
    unsigned m = n;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

Cyclotomic::Cyclotomic() : order_(1), coeffs_(1) {}

Cyclotomic Cyclotomic::from_rational(const Rational& q) {
    return Cyclotomic(1, {q});
}

Cyclotomic Cyclotomic::root_of_unity(unsigned order, long exponent) {
    return make(order, {{exponent, Rational(1)}});
}

Cyclotomic Cyclotomic::make(unsigned order, const std::vector<std::pair<long, Rational>>& terms) {
    const OrderTable& t = order_table(order);
    std::vector<Rational> raw(order);
    for (const auto& [e, c] : terms) {
        long r = e % static_cast<long>(order);
        if (r < 0) r += order;
        raw[static_cast<std::size_t>(r)] += c;
    }
    return Cyclotomic(order, reduce_mod_cyclo(std::move(raw), t));
}

Cyclotomic Cyclotomic::sqrt_integer(unsigned k) {
    switch (k) {
        case 2: return make(8, {{1, Rational(1)}, {7, Rational(1)}});
        case 3: return make(12, {{1, Rational(1)}, {11, Rational(1)}});
        case 5: return make(5, {{0, Rational(1)}, {1, Rational(2)}, {4, Rational(2)}});
        default: throw UnsupportedScalarError("sqrt(" + std::to_string(k) + ") is not supported; use k in {2,3,5}");
    }
}

bool Cyclotomic::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_zero(); });
}

bool Cyclotomic::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) return false;
    return true;
}

std::optional<Rational> Cyclotomic::as_rational() const {
    if (!is_rational()) return std::nullopt;
    return coeffs_[0];
}

bool Cyclotomic::is_real() const { return *this == conjugate(); }

Cyclotomic Cyclotomic::embedded(unsigned new_order) const {
    if (new_order == order_) return *this;
    if (new_order % order_ != 0) throw Error("embedding target must be a multiple of the order");
    const OrderTable& t = order_table(new_order);
    const unsigned stride = new_order / order_;
    std::vector<Rational> raw(new_order);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (!coeffs_[k].is_zero()) raw[k * stride] += coeffs_[k];
    }
    return Cyclotomic(new_order, reduce_mod_cyclo(std::move(raw), t));
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order_ == b.order_) {
        std::vector<Rational> out(a.coeffs_);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += b.coeffs_[i];
        return Cyclotomic(a.order_, std::move(out));
    }
    // a rational operand lands on the constant basis coefficient at any order
    if (a.is_rational()) {
        std::vector<Rational> out(b.coeffs_);
        out[0] += a.coeffs_[0];
        return Cyclotomic(b.order_, std::move(out));
    }
    if (b.is_rational()) return b + a;
    unsigned n = common_order(a.order_, b.order_);
    return a.embedded(n) + b.embedded(n);
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic Cyclotomic::operator-() const {
    std::vector<Rational> out(coeffs_);
    for (auto& c : out) c = -c;
    return Cyclotomic(order_, std::move(out));
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    // scaling by a rational never needs embedding or convolution
    if (a.is_rational()) {
        std::vector<Rational> out(b.coeffs_);
        for (auto& c : out) c *= a.coeffs_[0];
        return Cyclotomic(b.order_, std::move(out));
    }
    if (b.is_rational()) return b * a;
    if (a.order_ != b.order_) {
        unsigned n = common_order(a.order_, b.order_);
        return a.embedded(n) * b.embedded(n);
    }
    const OrderTable& t = order_table(a.order_);
    std::vector<Rational> conv(2 * t.phi > 0 ? 2 * t.phi - 1 : 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (!b.coeffs_[j].is_zero()) conv[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Cyclotomic(a.order_, reduce_mod_cyclo(std::move(conv), t));
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw DivisionByZeroError();
    if (auto q = as_rational()) return Cyclotomic(order_, [&] {
            std::vector<Rational> c(coeffs_.size());
            c[0] = q->reciprocal();
            return c;
        }());
    const OrderTable& t = order_table(order_);
    // Extended Euclid in Q[x]: t0 * this == gcd (a nonzero constant) mod Phi_n.
    Poly r0 = t.cyclo_q;
    Poly r1 = coeffs_;
    poly_trim(r1);
    Poly t0, t1{Rational(1)};
    while (!r1.empty()) {
        auto [q, r] = poly_divmod(std::move(r0), r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly tn = poly_sub(std::move(t0), poly_mul(q, t1));
        t0 = std::move(t1);
        t1 = std::move(tn);
    }
    if (r0.size() != 1) throw Error("internal: cyclotomic polynomial not coprime with value");
    const Rational scale = r0[0].reciprocal();
    for (auto& c : t0) c *= scale;
    return Cyclotomic(order_, reduce_mod_cyclo(std::move(t0), t));
}

Cyclotomic Cyclotomic::conjugate() const {
    std::vector<std::pair<long, Rational>> terms;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k].is_zero()) continue;
        long e = k == 0 ? 0 : static_cast<long>(order_ - k);
        terms.emplace_back(e, coeffs_[k]);
    }
    return make(order_, terms);
}

Cyclotomic Cyclotomic::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclotomic result = make(order_, {{0, Rational(1)}});
    Cyclotomic base = *this;
    unsigned long n = static_cast<unsigned long>(e);
    while (n) {
        if (n & 1) result = result * base;
        base = base * base;
        n >>= 1;
    }
    return result;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
    auto qa = a.as_rational();
    auto qb = b.as_rational();
    if (qa && qb) return *qa == *qb;
    if (static_cast<bool>(qa) != static_cast<bool>(qb)) {
        // One side is rational and the other is not; still embed, since
        // rationality of the coefficient vector is order-independent.
        return false;
    }
    unsigned n = common_order(a.order_, b.order_);
    return a.embedded(n).coeffs_ == b.embedded(n).coeffs_;
}

RationalInterval Cyclotomic::real_enclosure(long precision_bits) const {
    RationalInterval acc(Rational(0), Rational(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k].is_zero()) continue;
        acc = acc + cos_enclosure(order_, static_cast<unsigned>(k), precision_bits).scaled(coeffs_[k]);
    }
    return acc;
}

Sign Cyclotomic::sign_real() const {
    if (!is_real()) throw NotRealError();
    if (is_zero()) return Sign::zero;
    if (auto q = as_rational()) return q->sign() > 0 ? Sign::positive : Sign::negative;
    for (long prec = 64; prec <= (1L << 20); prec *= 2) {
        RationalInterval box = real_enclosure(prec);
        if (box.strictly_positive()) return Sign::positive;
        if (box.strictly_negative()) return Sign::negative;
    }
    throw Error("internal: sign refinement exceeded the precision cap");
}

std::optional<RootOfUnity> Cyclotomic::as_root_of_unity() const {
    if (is_zero()) return std::nullopt;
    const OrderTable& t = order_table(order_);
    std::vector<Rational> rep(t.phi);
    rep[0] = Rational(1);
    auto step = [&](std::vector<Rational> cur) {
        std::vector<Rational> raw(cur.size() + 1);
        for (std::size_t i = 0; i < cur.size(); ++i) raw[i + 1] = cur[i];
        return reduce_mod_cyclo(std::move(raw), t);
    };
    for (unsigned pass = 0; pass < 2; ++pass) {
        const bool negated = pass == 1;
        if (negated && order_ % 2 == 0) break;  // -1 already lies in <zeta_n> for even n
        std::vector<Rational> cur = rep;
        for (unsigned k = 0; k < order_; ++k) {
            bool match = true;
            for (std::size_t i = 0; i < cur.size() && match; ++i) {
                match = negated ? (coeffs_[i] == -cur[i]) : (coeffs_[i] == cur[i]);
            }
            if (match) {
                if (!negated) return RootOfUnity{order_, k};
                return RootOfUnity{2 * order_, (order_ + 2 * k) % (2 * order_)};
            }
            cur = step(std::move(cur));
        }
    }
    return std::nullopt;
}

Cyclotomic Cyclotomic::sqrt_unimodular() const {
    auto root = as_root_of_unity();
    if (!root) throw UnsupportedScalarError("exact sqrt is only available for roots of unity");
    return root_of_unity(2 * root->order, static_cast<long>(root->exponent));
}

std::complex<double> Cyclotomic::to_complex() const {
    std::complex<double> acc = 0.0;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k].is_zero()) continue;
        double angle = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(order_);
        acc += coeffs_[k].to_double() * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return acc;
}

std::string Cyclotomic::to_string() const { return render_exact_scalar(*this); }

}  // namespace eqlines
