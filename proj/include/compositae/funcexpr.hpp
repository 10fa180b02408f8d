#pragma once

// Small expression language over the catalog atoms:
//
//   expr := atom | sum(expr, expr) | prod(expr, expr) | comp(outer, inner) | inv(expr)
//   atom := name (":" number)*
//
// e.g. "comp(recip, ln)" is 1/ln x, "sum(pow:2, ln)" is x^2 + ln x.

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "compositae/atoms.hpp"

namespace compositae {

struct FuncExpr;
using ExprPtr = std::shared_ptr<const FuncExpr>;

struct FuncExpr {
    enum class Kind { Atom, Sum, Prod, Comp, Inv };

    Kind kind = Kind::Atom;
    std::string name;  // atoms only
    Params params;     // atoms only
    std::vector<ExprPtr> args;

    static ExprPtr atom(std::string name, Params params = {});
    static ExprPtr sum(ExprPtr l, ExprPtr r);
    static ExprPtr prod(ExprPtr l, ExprPtr r);
    static ExprPtr comp(ExprPtr outer, ExprPtr inner);
    static ExprPtr inv(ExprPtr inner);

    std::size_t node_count() const;
    std::size_t depth() const;
};

bool operator==(const FuncExpr& a, const FuncExpr& b);

class ParseError : public std::runtime_error {
public:
    enum class Kind { Syntax, UnknownAtom, Arity, InvalidParameter, TooLarge };
    ParseError(Kind kind, std::size_t offset, const std::string& what);
    Kind kind() const { return kind_; }
    std::size_t offset() const { return offset_; }

private:
    Kind kind_;
    std::size_t offset_;
};

const char* to_string(ParseError::Kind k);

inline constexpr std::size_t default_node_limit = 64;

ExprPtr parse(std::string_view text, std::size_t node_limit = default_node_limit);
std::string print(const FuncExpr& e);

// Shortest decimal for a rational with a terminating expansion, otherwise p/q.
std::string decimal_string(const Rational& q);

struct Built {
    std::optional<Composita<Rational>> exact;
    Composita<double> approx;
    Point value;  // the function's value at the evaluation point
};

// Composita of e(x+z) - e(x) at x, order N. Exact whenever every node admits it.
Built build(const FuncExpr& e, const Point& x, std::size_t N);

// Value of e at x.
Point evaluate(const FuncExpr& e, const Point& x);

// Independent route: Taylor series of e(x+z) - e(x) by series arithmetic on the
// atoms' derivative oracles.
Series<double> oracle_series(const FuncExpr& e, const Point& x, std::size_t N);
std::optional<Series<Rational>> exact_oracle_series(const FuncExpr& e, const Point& x, std::size_t N);

}  // namespace compositae
