#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace qrw {

inline constexpr double kPi = 3.14159265358979323846;

/// Folds an angle into the canonical interval (-pi, pi] modulo 2*pi.
double canonical_angle(double theta);

/// Distance between two angles on the circle, in [0, pi].
double angle_distance(double a, double b);

/// True when two canonical angles coincide within `tol` on the circle.
bool angles_close(double a, double b, double tol = 1e-9);

/// Exact rational p/q with q > 0, normalized by gcd.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d = 1);

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator-() const;
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Rational& o) const { return !(*this == o); }

    bool is_zero() const { return num == 0; }
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const;
};

/// Linear symbolic angle: sum of coeff*var terms plus pi_coeff*pi plus const_term.
///
/// Rule files write these as strings, e.g. "a", "-a", "a+b", "pi/4",
/// "-1/2*pi", "3*pi/4". A ground expression has no variable terms.
struct AngleExpr {
    std::map<std::string, Rational> var_terms;
    Rational pi_coeff;
    Rational const_term;

    AngleExpr() = default;

    static AngleExpr constant(Rational c);
    static AngleExpr pi_multiple(Rational c);
    static AngleExpr variable(const std::string& name, Rational coeff = Rational(1));

    AngleExpr operator+(const AngleExpr& o) const;
    AngleExpr operator-() const;
    bool operator==(const AngleExpr& o) const;

    bool is_ground() const { return var_terms.empty(); }

    /// Value of a ground expression. Throws if variables remain.
    double ground_value() const;

    /// Value under a variable assignment, canonicalized into (-pi, pi].
    double evaluate(const std::map<std::string, double>& bindings) const;

    /// Parses the rule-file angle grammar:
    ///   expr := term (('+'|'-') term)*
    ///   term := rational | rational '*' 'pi' | 'pi' ['/' int] | ['-'] ident
    static AngleExpr parse(const std::string& text);

    /// Round-trippable text form compatible with parse().
    std::string str() const;
};

/// Prints a canonical angle as a rational multiple of pi ("pi/4", "-3*pi/4")
/// when it is within 1e-12 of p/q*pi with q <= 96; otherwise as a
/// 17-significant-digit decimal.
std::string format_angle(double theta);

} // namespace qrw
