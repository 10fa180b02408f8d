#pragma once

// Sparse multivariate polynomials over Rational in indeterminates y1, y2, ...
//
// Terms live in a map keyed by exponent vectors (index i holds the exponent of
// y_{i+1}, trailing zeros trimmed). Zero coefficients are never stored, so two
// equal polynomials always have identical representations. Iteration order is
// graded-lexicographic, highest degree first, which is also the print order.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "compositae/exact.hpp"
#include "compositae/ring.hpp"

namespace compositae {

class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::uint32_t> exponents);

    // y_index^power, index >= 1
    static Monomial variable(std::size_t index, std::uint32_t power = 1);

    std::uint32_t exponent(std::size_t index) const;  // index >= 1
    std::size_t num_vars() const { return e_.size(); }
    std::uint64_t degree() const;
    const std::vector<std::uint32_t>& exponents() const { return e_; }

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    void trim();
    std::vector<std::uint32_t> e_;
};

// Graded-lex, larger first: higher total degree, then lexicographically
// larger exponent vector (y1 > y2 > ...).
struct GradedLexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

class UnboundIndeterminate : public std::out_of_range {
public:
    explicit UnboundIndeterminate(std::size_t index)
        : std::out_of_range("no value bound for indeterminate y" + std::to_string(index)), index_(index) {}
    std::size_t index() const { return index_; }

private:
    std::size_t index_;
};

class MPoly {
public:
    using Terms = std::map<Monomial, Rational, GradedLexGreater>;

    MPoly() = default;
    MPoly(const Rational& c);  // NOLINT: constants embed implicitly
    MPoly(long c) : MPoly(Rational(c)) {}  // NOLINT

    static MPoly variable(std::size_t index);  // y_index
    static MPoly term(const Monomial& m, const Rational& c);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    std::size_t num_vars() const;  // highest indeterminate index present
    bool has_integer_coefficients() const;
    Rational coefficient_sum() const;  // value at y = (1, 1, ...)

    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly& operator*=(const MPoly& o);
    MPoly& operator*=(const Rational& s);

    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(MPoly a, const MPoly& b) { return a *= b; }
    friend MPoly operator*(MPoly a, const Rational& s) { return a *= s; }
    friend MPoly operator*(const Rational& s, MPoly a) { return a *= s; }
    friend MPoly operator-(MPoly a);
    friend bool operator==(const MPoly&, const MPoly&) = default;

    MPoly pow(unsigned k) const;

    // Replaces every y_i by assignment[i-1]. The assignment must cover every
    // indeterminate that occurs; otherwise UnboundIndeterminate is thrown.
    MPoly substitute(std::span<const MPoly> assignment) const;
    MPoly substitute(std::span<const Rational> assignment) const;

    Rational eval(std::span<const Rational> point) const;
    double eval(std::span<const double> point) const;

    // e.g. "4*y1*y3 + 3*y2^2", "-1/2*y1^2", "0"
    std::string str() const;

private:
    void add_term(const Monomial& m, const Rational& c);
    Terms terms_;
};

template <>
struct Ring<MPoly> {
    static constexpr bool exact = true;
    static MPoly zero() { return MPoly(); }
    static MPoly one() { return MPoly(1); }
    static MPoly from_rational(const Rational& q) { return MPoly(q); }
    static bool is_zero(const MPoly& a) { return a.is_zero(); }
    static bool equal(const MPoly& a, const MPoly& b, double = 0) { return a == b; }
    static std::optional<MPoly> inverse(const MPoly& a) {
        if (!a.is_constant() || a.is_zero()) return std::nullopt;
        return MPoly(Rational(1 / a.constant_term()));
    }
    static std::string str(const MPoly& a) { return a.str(); }
};

}  // namespace compositae
