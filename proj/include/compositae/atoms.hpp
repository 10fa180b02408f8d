#pragma once

// Registry of named catalog functions ("atoms") used by the expression
// language. Each atom bundles its value at a point, the closed-form composita,
// and an independent Taylor oracle, with exact variants wherever the point
// admits them.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "compositae/composita.hpp"
#include "compositae/series.hpp"

namespace compositae {

// An evaluation point: always a double, plus the exact rational when known.
struct Point {
    std::optional<Rational> exact;
    double approx = 0;

    static Point of(const Rational& q) { return {q, q.get_d()}; }
    static Point of(double v) { return {std::nullopt, v}; }
    std::string str() const;
};

using Params = std::vector<Rational>;

struct AtomDef {
    std::string name;
    std::size_t min_params = 0;
    std::size_t max_params = 0;
    std::string summary;

    // Throws std::invalid_argument with a reason when a parameter is unusable.
    std::function<void(const Params&)> validate;
    // Throws DomainError naming the atom.
    std::function<void(double, const Params&)> check_domain;

    std::function<double(double, const Params&)> value;
    std::function<std::optional<Rational>(const Rational&, const Params&)> exact_value;

    std::function<Composita<double>(double, const Params&, std::size_t)> composita;
    std::function<std::optional<Composita<Rational>>(const Rational&, const Params&, std::size_t)> exact_composita;

    // Oracle: Taylor coefficients of y(x+z) - y(x).
    std::function<Series<double>(double, const Params&, std::size_t)> taylor;
    std::function<std::optional<Series<Rational>>(const Rational&, const Params&, std::size_t)> exact_taylor;

    // Solves y(t) = v; empty when no closed inverse exists.
    std::function<std::optional<double>(double, const Params&)> inverse;
    std::function<std::optional<Rational>(const Rational&, const Params&)> exact_inverse;

    // Valid evaluation points used by the oracle suite.
    std::vector<std::string> sample_points;
    Params default_params;
};

const std::vector<AtomDef>& atom_registry();
const AtomDef* find_atom(std::string_view name);

// Exact m-th root of a nonnegative rational, when it is rational.
std::optional<Rational> exact_root(const Rational& q, unsigned m);

}  // namespace compositae
