#include "qrw/angle.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <numeric>

namespace qrw {

double canonical_angle(double theta) {
    double r = std::fmod(theta, 2.0 * kPi);
    if (r <= -kPi) {
        r += 2.0 * kPi;
    } else if (r > kPi) {
        r -= 2.0 * kPi;
    }
    return r;
}

double angle_distance(double a, double b) {
    double d = std::fabs(canonical_angle(a) - canonical_angle(b));
    return std::min(d, 2.0 * kPi - d);
}

bool angles_close(double a, double b, double tol) {
    return angle_distance(a, b) <= tol;
}

Rational::Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) {
        throw std::invalid_argument("rational with zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num * o.den + o.num * den, den * o.den);
}

Rational Rational::operator-(const Rational& o) const {
    return Rational(num * o.den - o.num * den, den * o.den);
}

Rational Rational::operator*(const Rational& o) const {
    return Rational(num * o.num, den * o.den);
}

Rational Rational::operator-() const {
    return Rational(-num, den);
}

std::string Rational::str() const {
    if (den == 1) {
        return std::to_string(num);
    }
    return std::to_string(num) + "/" + std::to_string(den);
}

AngleExpr AngleExpr::constant(Rational c) {
    AngleExpr e;
    e.const_term = c;
    return e;
}

AngleExpr AngleExpr::pi_multiple(Rational c) {
    AngleExpr e;
    e.pi_coeff = c;
    return e;
}

AngleExpr AngleExpr::variable(const std::string& name, Rational coeff) {
    AngleExpr e;
    e.var_terms[name] = coeff;
    return e;
}

AngleExpr AngleExpr::operator+(const AngleExpr& o) const {
    AngleExpr r = *this;
    r.pi_coeff = r.pi_coeff + o.pi_coeff;
    r.const_term = r.const_term + o.const_term;
    for (const auto& [name, coeff] : o.var_terms) {
        auto it = r.var_terms.find(name);
        if (it == r.var_terms.end()) {
            r.var_terms[name] = coeff;
        } else {
            it->second = it->second + coeff;
            if (it->second.is_zero()) {
                r.var_terms.erase(it);
            }
        }
    }
    return r;
}

AngleExpr AngleExpr::operator-() const {
    AngleExpr r;
    r.pi_coeff = -pi_coeff;
    r.const_term = -const_term;
    for (const auto& [name, coeff] : var_terms) {
        r.var_terms[name] = -coeff;
    }
    return r;
}

bool AngleExpr::operator==(const AngleExpr& o) const {
    return var_terms == o.var_terms && pi_coeff == o.pi_coeff && const_term == o.const_term;
}

double AngleExpr::ground_value() const {
    if (!is_ground()) {
        throw std::invalid_argument("angle expression is not ground: " + str());
    }
    return pi_coeff.value() * kPi + const_term.value();
}

double AngleExpr::evaluate(const std::map<std::string, double>& bindings) const {
    double v = pi_coeff.value() * kPi + const_term.value();
    for (const auto& [name, coeff] : var_terms) {
        auto it = bindings.find(name);
        if (it == bindings.end()) {
            throw std::invalid_argument("unbound angle variable '" + name + "'");
        }
        v += coeff.value() * it->second;
    }
    return canonical_angle(v);
}

namespace {

struct ExprLexer {
    const std::string& text;
    size_t pos = 0;

    explicit ExprLexer(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
    }

    bool eof() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    bool consume(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    long long integer() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
        if (pos == start) {
            throw std::invalid_argument("expected integer in angle expression: " + text);
        }
        return std::stoll(text.substr(start, pos - start));
    }

    std::string ident() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
            ++pos;
        }
        return text.substr(start, pos - start);
    }
};

// term := rational | rational '*' 'pi' | 'pi' ['/' int] | ident
// (the sign has already been consumed by the expr loop)
AngleExpr parse_term(ExprLexer& lx) {
    char c = lx.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
        long long n = lx.integer();
        Rational r(n);
        if (lx.consume('/')) {
            r = Rational(n, lx.integer());
        }
        if (lx.consume('*')) {
            std::string id = lx.ident();
            if (id != "pi") {
                throw std::invalid_argument("only 'pi' may carry a rational coefficient: " + lx.text);
            }
            if (lx.consume('/')) {
                r = r * Rational(1, lx.integer());
            }
            return AngleExpr::pi_multiple(r);
        }
        return AngleExpr::constant(r);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string id = lx.ident();
        if (id == "pi") {
            Rational r(1);
            if (lx.consume('/')) {
                r = Rational(1, lx.integer());
            }
            return AngleExpr::pi_multiple(r);
        }
        return AngleExpr::variable(id);
    }
    throw std::invalid_argument("malformed angle expression: " + lx.text);
}

} // namespace

AngleExpr AngleExpr::parse(const std::string& text) {
    ExprLexer lx(text);
    if (lx.eof()) {
        throw std::invalid_argument("empty angle expression");
    }
    bool neg = lx.consume('-');
    AngleExpr acc = parse_term(lx);
    if (neg) {
        acc = -acc;
    }
    while (!lx.eof()) {
        if (lx.consume('+')) {
            acc = acc + parse_term(lx);
        } else if (lx.consume('-')) {
            acc = acc + (-parse_term(lx));
        } else {
            throw std::invalid_argument("trailing characters in angle expression: " + text);
        }
    }
    return acc;
}

namespace {

// Appends "+x" or "-x" with the leading '+' suppressed at the front.
void append_signed(std::string& out, const std::string& body, bool negative) {
    if (out.empty()) {
        if (negative) {
            out += "-";
        }
    } else {
        out += negative ? "-" : "+";
    }
    out += body;
}

std::string pi_term_str(const Rational& r) {
    long long p = r.num < 0 ? -r.num : r.num;
    std::string s;
    if (p == 1) {
        s = "pi";
    } else {
        s = std::to_string(p) + "*pi";
    }
    if (r.den != 1) {
        s += "/" + std::to_string(r.den);
    }
    return s;
}

} // namespace

std::string AngleExpr::str() const {
    std::string out;
    for (const auto& [name, coeff] : var_terms) {
        if (coeff == Rational(1)) {
            append_signed(out, name, false);
        } else if (coeff == Rational(-1)) {
            append_signed(out, name, true);
        } else {
            // Coefficients other than +-1 are outside the file grammar; they
            // only arise from programmatic construction.
            append_signed(out, coeff.str() + "*" + name, false);
        }
    }
    if (!pi_coeff.is_zero()) {
        append_signed(out, pi_term_str(pi_coeff), pi_coeff.num < 0);
    }
    if (!const_term.is_zero() || out.empty()) {
        append_signed(out, (const_term.num < 0 ? (-const_term).str() : const_term.str()),
                      const_term.num < 0);
    }
    return out;
}

std::string format_angle(double theta) {
    for (long long q = 1; q <= 96; ++q) {
        double scaled = theta * static_cast<double>(q) / kPi;
        long long p = std::llround(scaled);
        if (std::fabs(theta - static_cast<double>(p) * kPi / static_cast<double>(q)) <= 1e-12) {
            if (p == 0) {
                return "0";
            }
            return pi_term_str(Rational(p, q)).insert(0, p < 0 ? "-" : "");
        }
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", theta);
    return buf;
}

} // namespace qrw
