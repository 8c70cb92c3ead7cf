#include "eqlines/scalar_text.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>

#include "eqlines/errors.hpp"

namespace eqlines {

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    Cyclotomic run() {
        Cyclotomic value = parse_expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return value;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    mpz_class parse_int() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < s_.size() && s_[pos_] == '-') ++pos_;
        std::size_t digits = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == digits) fail("expected an integer");
        return mpz_class(s_.substr(start, pos_ - start));
    }

    unsigned parse_order() {
        std::size_t at = pos_;
        mpz_class n = parse_int();
        if (n < 1 || !n.fits_uint_p()) throw ParseError("order must be a positive integer", at);
        return static_cast<unsigned>(n.get_ui());
    }

    Cyclotomic parse_rational() {
        mpz_class num = parse_int();
        if (pos_ < s_.size() && s_[pos_] == '/') {
            // Lookahead: a '/' directly followed by digits belongs to the
            // rational token; otherwise it is the term-level division.
            std::size_t next = pos_ + 1;
            if (next < s_.size() && std::isdigit(static_cast<unsigned char>(s_[next]))) {
                ++pos_;
                std::size_t at = pos_;
                mpz_class den = parse_int();
                if (den <= 0) throw ParseError("denominator must be positive", at);
                return Cyclotomic::from_rational(Rational(num, den));
            }
        }
        return Cyclotomic::from_rational(Rational(num, mpz_class(1)));
    }

    bool accept_keyword(const std::string& kw) {
        skip_ws();
        if (s_.compare(pos_, kw.size(), kw) != 0) return false;
        std::size_t end = pos_ + kw.size();
        if (end < s_.size() && std::isalnum(static_cast<unsigned char>(s_[end]))) return false;
        pos_ = end;
        return true;
    }

    Cyclotomic parse_factor() {
        char c = peek();
        if (c == '-') {
            ++pos_;
            return -parse_factor();
        }
        if (c == '(') {
            ++pos_;
            Cyclotomic inner = parse_expr();
            expect(')');
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_rational();
        if (accept_keyword("zeta")) {
            expect('(');
            unsigned order = parse_order();
            expect(')');
            long exponent = 1;
            if (accept('^')) {
                mpz_class e = parse_int();
                mpz_class r = e % order;
                if (r < 0) r += order;
                exponent = r.get_si();
            }
            return Cyclotomic::root_of_unity(order, exponent);
        }
        if (accept_keyword("sqrt")) {
            expect('(');
            std::size_t at = pos_;
            unsigned k = parse_order();
            expect(')');
            if (k != 2 && k != 3 && k != 5) throw ParseError("sqrt accepts only 2, 3 or 5", at);
            return Cyclotomic::sqrt_integer(k);
        }
        if (accept_keyword("i")) return Cyclotomic::i();
        fail("expected a factor");
    }

    Cyclotomic parse_term() {
        Cyclotomic value = parse_factor();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                value = value * parse_factor();
            } else if (c == '/') {
                ++pos_;
                std::size_t at = pos_;
                Cyclotomic rhs = parse_factor();
                if (rhs.is_zero()) throw ParseError("division by zero", at);
                value = value / rhs;
            } else {
                return value;
            }
        }
    }

    Cyclotomic parse_expr() {
        Cyclotomic value = parse_term();
        for (;;) {
            char c = peek();
            if (c == '+') {
                ++pos_;
                value = value + parse_term();
            } else if (c == '-') {
                ++pos_;
                value = value - parse_term();
            } else {
                return value;
            }
        }
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

std::string render_double(double d) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), d);
    return std::string(buf, res.ptr);
}

}  // namespace

Cyclotomic parse_exact_scalar(const std::string& text) { return Parser(text).run(); }

std::string render_exact_scalar(const Cyclotomic& value) {
    const auto& coeffs = value.coefficients();
    std::string out;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        const Rational& c = coeffs[k];
        if (c.is_zero()) continue;
        const bool negative = c.sign() < 0;
        if (out.empty()) {
            if (negative) out += '-';
        } else {
            out += negative ? '-' : '+';
        }
        const Rational mag = c.abs();
        if (k == 0) {
            out += mag.to_string();
            continue;
        }
        std::string base;
        if (value.order() == 4 && k == 1) {
            base = "i";
        } else {
            base = "zeta(" + std::to_string(value.order()) + ")";
            if (k > 1) base += "^" + std::to_string(k);
        }
        if (mag == Rational(1)) {
            out += base;
        } else {
            out += mag.to_string() + "*" + base;
        }
    }
    return out.empty() ? "0" : out;
}

std::complex<double> parse_float_scalar(const std::string& text) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    bool have_real = false, have_imag = false;
    double re = 0.0, im = 0.0;
    for (int part = 0; part < 2; ++part) {
        skip_ws();
        if (pos == text.size()) break;
        double sign = 1.0;
        if (text[pos] == '+' || text[pos] == '-') {
            if (text[pos] == '-') sign = -1.0;
            ++pos;
            skip_ws();
        } else if (part == 1) {
            throw ParseError("expected '+' or '-' between components", pos);
        }
        double mag = 1.0;
        bool had_number = false;
        if (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '.')) {
            auto res = std::from_chars(text.data() + pos, text.data() + text.size(), mag);
            if (res.ec != std::errc()) throw ParseError("malformed number", pos);
            pos = static_cast<std::size_t>(res.ptr - text.data());
            had_number = true;
        }
        const bool imag = pos < text.size() && text[pos] == 'i';
        if (imag) ++pos;
        if (!had_number && !imag) throw ParseError("expected a number", pos);
        if (imag) {
            if (have_imag) throw ParseError("duplicate imaginary component", pos);
            im = sign * mag;
            have_imag = true;
        } else {
            if (have_real) throw ParseError("duplicate real component", pos);
            re = sign * mag;
            have_real = true;
        }
    }
    skip_ws();
    if (pos != text.size()) throw ParseError("unexpected trailing input", pos);
    if (!have_real && !have_imag) throw ParseError("empty scalar", 0);
    return {re, im};
}

std::string render_float_scalar(const std::complex<double>& value) {
    if (value.imag() == 0.0) return render_double(value.real());
    std::string out;
    if (value.real() != 0.0) {
        out = render_double(value.real());
        out += value.imag() < 0 ? "-" : "+";
        out += render_double(std::fabs(value.imag()));
    } else {
        out = render_double(value.imag());
    }
    out += 'i';
    return out;
}

}  // namespace eqlines
