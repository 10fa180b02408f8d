#pragma once

// Coefficient-ring contract shared by Series, Composita and the theorems.
//
// Ring<R> provides zero/one, embedding of exact rationals, an equality test
// (exact for Rational and MPoly, tolerance-based for double) and a partial
// inverse. Arithmetic itself uses the ordinary operators of R.

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "compositae/exact.hpp"

namespace compositae {

// Default relative tolerance for floating-point comparisons.
inline constexpr double default_tolerance = 1e-9;

// |a-b| <= tol * max(1, |a|, |b|). Near zero this degrades to an absolute
// bound of tol, so expected zeros compare sensibly.
inline bool approx_equal(double a, double b, double tol = default_tolerance) {
    if (!std::isfinite(a) || !std::isfinite(b)) return false;
    const double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
    return std::fabs(a - b) <= tol * scale;
}

template <class R>
struct Ring;

template <>
struct Ring<Rational> {
    static constexpr bool exact = true;
    static Rational zero() { return 0; }
    static Rational one() { return 1; }
    static Rational from_rational(const Rational& q) { return q; }
    static bool is_zero(const Rational& a) { return a == 0; }
    static bool equal(const Rational& a, const Rational& b, double = 0) { return a == b; }
    static std::optional<Rational> inverse(const Rational& a) {
        if (a == 0) return std::nullopt;
        return Rational(1 / a);
    }
    static std::string str(const Rational& a) { return to_string(a); }
};

template <>
struct Ring<double> {
    static constexpr bool exact = false;
    static double zero() { return 0.0; }
    static double one() { return 1.0; }
    static double from_rational(const Rational& q) { return q.get_d(); }
    static bool is_zero(double a) { return a == 0.0; }
    static bool equal(double a, double b, double tol = default_tolerance) { return approx_equal(a, b, tol); }
    static std::optional<double> inverse(double a) {
        if (a == 0.0 || !std::isfinite(a)) return std::nullopt;
        return 1.0 / a;
    }
    static std::string str(double a) { return to_decimal_string(a); }
};

}  // namespace compositae
