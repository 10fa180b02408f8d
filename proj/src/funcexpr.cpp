#include "compositae/funcexpr.hpp"

#include <cctype>
#include <cmath>

#include "compositae/errors.hpp"
#include "compositae/oracle.hpp"

namespace compositae {

// ---- AST

ExprPtr FuncExpr::atom(std::string name, Params params) {
    auto e = std::make_shared<FuncExpr>();
    e->kind = Kind::Atom;
    e->name = std::move(name);
    e->params = std::move(params);
    return e;
}

namespace {

ExprPtr node(FuncExpr::Kind kind, std::vector<ExprPtr> args) {
    for (const auto& a : args)
        if (!a) throw std::invalid_argument("FuncExpr: null child");
    auto e = std::make_shared<FuncExpr>();
    e->kind = kind;
    e->args = std::move(args);
    return e;
}

}  // namespace

ExprPtr FuncExpr::sum(ExprPtr l, ExprPtr r) { return node(Kind::Sum, {std::move(l), std::move(r)}); }
ExprPtr FuncExpr::prod(ExprPtr l, ExprPtr r) { return node(Kind::Prod, {std::move(l), std::move(r)}); }
ExprPtr FuncExpr::comp(ExprPtr outer, ExprPtr inner) { return node(Kind::Comp, {std::move(outer), std::move(inner)}); }
ExprPtr FuncExpr::inv(ExprPtr inner) { return node(Kind::Inv, {std::move(inner)}); }

std::size_t FuncExpr::node_count() const {
    std::size_t n = 1;
    for (const auto& a : args) n += a->node_count();
    return n;
}

std::size_t FuncExpr::depth() const {
    std::size_t d = 0;
    for (const auto& a : args) d = std::max(d, a->depth());
    return d + 1;
}

bool operator==(const FuncExpr& a, const FuncExpr& b) {
    if (a.kind != b.kind || a.name != b.name || a.params != b.params || a.args.size() != b.args.size()) return false;
    for (std::size_t i = 0; i < a.args.size(); ++i)
        if (!(*a.args[i] == *b.args[i])) return false;
    return true;
}

// ---- errors

ParseError::ParseError(Kind kind, std::size_t offset, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + " at byte " + std::to_string(offset) + ": " + what),
      kind_(kind),
      offset_(offset) {}

const char* to_string(ParseError::Kind k) {
    switch (k) {
        case ParseError::Kind::Syntax: return "syntax error";
        case ParseError::Kind::UnknownAtom: return "unknown atom";
        case ParseError::Kind::Arity: return "arity mismatch";
        case ParseError::Kind::InvalidParameter: return "invalid parameter";
        case ParseError::Kind::TooLarge: return "expression too large";
    }
    return "parse error";
}

// ---- parser

namespace {

class Parser {
public:
    Parser(std::string_view s, std::size_t limit) : s_(s), limit_(limit) {}

    ExprPtr run() {
        auto e = expr();
        skip();
        if (pos_ != s_.size()) fail(ParseError::Kind::Syntax, "unexpected trailing input");
        return e;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
    std::size_t limit_;
    std::size_t nodes_ = 0;

    [[noreturn]] void fail(ParseError::Kind k, const std::string& what, std::optional<std::size_t> at = {}) {
        throw ParseError(k, at.value_or(pos_), what);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    void expect(char c) {
        if (!peek(c)) {
            const std::string got = pos_ < s_.size() ? std::string("'") + s_[pos_] + "'" : "end of input";
            fail(ParseError::Kind::Syntax, std::string("expected '") + c + "', got " + got);
        }
        ++pos_;
    }

    std::string identifier() {
        skip();
        const std::size_t start = pos_;
        if (pos_ >= s_.size() || !(s_[pos_] >= 'a' && s_[pos_] <= 'z')) {
            const std::string got = pos_ < s_.size() ? std::string("'") + s_[pos_] + "'" : "end of input";
            fail(ParseError::Kind::Syntax, "expected a lowercase identifier, got " + got);
        }
        while (pos_ < s_.size() &&
               ((s_[pos_] >= 'a' && s_[pos_] <= 'z') || std::isdigit(static_cast<unsigned char>(s_[pos_])) ||
                s_[pos_] == '_'))
            ++pos_;
        return std::string(s_.substr(start, pos_ - start));
    }

    Rational number() {
        skip();
        const std::size_t start = pos_;
        auto digits = [&] {
            const std::size_t d = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return pos_ > d;
        };
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        if (!digits()) fail(ParseError::Kind::Syntax, "expected a number", start);
        if (pos_ < s_.size() && s_[pos_] == '.') {
            ++pos_;
            if (!digits()) fail(ParseError::Kind::Syntax, "expected digits after '.'");
        }
        if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
            ++pos_;
            if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
            if (!digits()) fail(ParseError::Kind::Syntax, "expected exponent digits");
        }
        const std::string text(s_.substr(start, pos_ - start));
        try {
            return parse_rational(text);
        } catch (const std::exception& ex) {
            fail(ParseError::Kind::InvalidParameter, ex.what(), start);
        }
    }

    ExprPtr expr() {
        skip();
        const std::size_t start = pos_;
        if (++nodes_ > limit_)
            fail(ParseError::Kind::TooLarge, "more than " + std::to_string(limit_) + " nodes", start);
        const std::string id = identifier();

        using K = FuncExpr::Kind;
        std::optional<K> comb;
        if (id == "sum") comb = K::Sum;
        if (id == "prod") comb = K::Prod;
        if (id == "comp") comb = K::Comp;
        if (id == "inv") comb = K::Inv;
        if (comb) {
            expect('(');
            auto first = expr();
            if (*comb == K::Inv) {
                expect(')');
                return FuncExpr::inv(first);
            }
            expect(',');
            auto second = expr();
            expect(')');
            if (*comb == K::Sum) return FuncExpr::sum(first, second);
            if (*comb == K::Prod) return FuncExpr::prod(first, second);
            return FuncExpr::comp(first, second);
        }

        const AtomDef* def = find_atom(id);
        if (!def) fail(ParseError::Kind::UnknownAtom, "'" + id + "' is not a catalog atom", start);
        Params params;
        while (peek(':')) {
            ++pos_;
            params.push_back(number());
        }
        if (params.size() < def->min_params || params.size() > def->max_params) {
            std::string want = std::to_string(def->min_params);
            if (def->max_params != def->min_params) want += ".." + std::to_string(def->max_params);
            fail(ParseError::Kind::Arity,
                 id + " takes " + want + " parameter(s), got " + std::to_string(params.size()), start);
        }
        try {
            def->validate(params);
        } catch (const std::invalid_argument& ex) {
            fail(ParseError::Kind::InvalidParameter, id + ": " + ex.what(), start);
        }
        return FuncExpr::atom(id, std::move(params));
    }
};

}  // namespace

ExprPtr parse(std::string_view text, std::size_t node_limit) { return Parser(text, node_limit).run(); }

std::string decimal_string(const Rational& q) {
    Integer den = q.get_den();
    long twos = 0, fives = 0;
    while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
        den /= 2;
        ++twos;
    }
    while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
        den /= 5;
        ++fives;
    }
    if (den != 1) return to_string(q);
    const long digits = std::max(twos, fives);
    if (digits == 0) return to_string(q);
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    Integer scaled_num = Integer(q.get_num() * scale) / q.get_den();
    const bool neg = scaled_num < 0;
    if (neg) scaled_num = -scaled_num;
    std::string s = scaled_num.get_str();
    if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
    return (neg ? "-" : "") + s;
}

std::string print(const FuncExpr& e) {
    switch (e.kind) {
        case FuncExpr::Kind::Atom: {
            std::string s = e.name;
            for (const auto& p : e.params) s += ":" + decimal_string(p);
            return s;
        }
        case FuncExpr::Kind::Sum: return "sum(" + print(*e.args[0]) + ", " + print(*e.args[1]) + ")";
        case FuncExpr::Kind::Prod: return "prod(" + print(*e.args[0]) + ", " + print(*e.args[1]) + ")";
        case FuncExpr::Kind::Comp: return "comp(" + print(*e.args[0]) + ", " + print(*e.args[1]) + ")";
        case FuncExpr::Kind::Inv: return "inv(" + print(*e.args[0]) + ")";
    }
    return {};
}

// ---- evaluation

namespace {

const AtomDef& atom_of(const FuncExpr& e) {
    const AtomDef* def = find_atom(e.name);
    if (!def) throw std::invalid_argument("unknown atom '" + e.name + "'");
    return *def;
}

Point atom_value(const FuncExpr& e, const Point& x) {
    const AtomDef& a = atom_of(e);
    a.check_domain(x.approx, e.params);
    if (x.exact)
        if (auto v = a.exact_value(*x.exact, e.params)) return Point::of(*v);
    return Point::of(a.value(x.approx, e.params));
}

Point add(const Point& a, const Point& b) {
    if (a.exact && b.exact) return Point::of(Rational(*a.exact + *b.exact));
    return Point::of(a.approx + b.approx);
}

Point mul(const Point& a, const Point& b) {
    if (a.exact && b.exact) return Point::of(Rational(*a.exact * *b.exact));
    return Point::of(a.approx * b.approx);
}

Point solve_inverse(const FuncExpr& f, const Point& target);

// f'(t), from the oracle so the solver does not lean on the composita code.
double slope(const FuncExpr& f, double t) { return oracle_series(f, Point::of(t), 1)[1]; }

Point newton(const FuncExpr& f, const Point& target) {
    double t = target.approx;
    const double goal = target.approx;
    for (int it = 0; it < 200; ++it) {
        const double d = slope(f, t);
        if (d == 0.0 || !std::isfinite(d)) throw NotInvertible("inv: derivative vanishes near x = " + to_decimal_string(t));
        const double step = (evaluate(f, Point::of(t)).approx - goal) / d;
        t -= step;
        if (std::fabs(step) <= 1e-15 * std::max(1.0, std::fabs(t))) return Point::of(t);
    }
    throw DomainError("inv", "no preimage of " + target.str() + " found");
}

Point solve_inverse(const FuncExpr& f, const Point& target) {
    switch (f.kind) {
        case FuncExpr::Kind::Atom: {
            const AtomDef& a = atom_of(f);
            if (target.exact)
                if (auto y = a.exact_inverse(*target.exact, f.params)) return Point::of(*y);
            if (auto y = a.inverse(target.approx, f.params)) return Point::of(*y);
            return newton(f, target);
        }
        case FuncExpr::Kind::Comp:
            // g(f(y)) = x  =>  y = f^-1(g^-1(x))
            return solve_inverse(*f.args[1], solve_inverse(*f.args[0], target));
        case FuncExpr::Kind::Inv: return evaluate(*f.args[0], target);
        default: return newton(f, target);
    }
}

}  // namespace

Point evaluate(const FuncExpr& e, const Point& x) {
    switch (e.kind) {
        case FuncExpr::Kind::Atom: return atom_value(e, x);
        case FuncExpr::Kind::Sum: return add(evaluate(*e.args[0], x), evaluate(*e.args[1], x));
        case FuncExpr::Kind::Prod: return mul(evaluate(*e.args[0], x), evaluate(*e.args[1], x));
        case FuncExpr::Kind::Comp: return evaluate(*e.args[0], evaluate(*e.args[1], x));
        case FuncExpr::Kind::Inv: return solve_inverse(*e.args[0], x);
    }
    throw std::logic_error("evaluate: bad node");
}

Built build(const FuncExpr& e, const Point& x, std::size_t N) {
    if (N == 0) throw std::invalid_argument("order must be at least 1");
    auto finish = [](std::optional<Composita<Rational>> exact, auto approx_fn, Point value) {
        if (exact) return Built{exact, to_double(*exact), value};
        return Built{std::nullopt, approx_fn(), value};
    };

    switch (e.kind) {
        case FuncExpr::Kind::Atom: {
            const AtomDef& a = atom_of(e);
            const Point v = atom_value(e, x);
            std::optional<Composita<Rational>> ex;
            if (x.exact) ex = a.exact_composita(*x.exact, e.params, N);
            return finish(ex, [&] { return a.composita(x.approx, e.params, N); }, v);
        }
        case FuncExpr::Kind::Sum: {
            const Built l = build(*e.args[0], x, N), r = build(*e.args[1], x, N);
            std::optional<Composita<Rational>> ex;
            if (l.exact && r.exact) ex = sum(*l.exact, *r.exact);
            return finish(ex, [&] { return sum(l.approx, r.approx); }, add(l.value, r.value));
        }
        case FuncExpr::Kind::Prod: {
            const Built l = build(*e.args[0], x, N), r = build(*e.args[1], x, N);
            const Point v = mul(l.value, r.value);
            std::optional<Composita<Rational>> ex;
            if (l.exact && r.exact && l.value.exact && r.value.exact)
                ex = product(power_coeffs(*l.exact, *l.value.exact), power_coeffs(*r.exact, *r.value.exact), *v.exact);
            return finish(ex,
                          [&] {
                              return product(power_coeffs(l.approx, l.value.approx),
                                             power_coeffs(r.approx, r.value.approx), v.approx);
                          },
                          v);
        }
        case FuncExpr::Kind::Comp: {
            const Built in = build(*e.args[1], x, N);
            const Built out = build(*e.args[0], in.value, N);
            std::optional<Composita<Rational>> ex;
            if (in.exact && out.exact) ex = compose(*in.exact, *out.exact);
            return finish(ex, [&] { return compose(in.approx, out.approx); }, out.value);
        }
        case FuncExpr::Kind::Inv: {
            const Point y = solve_inverse(*e.args[0], x);
            const Built f = build(*e.args[0], y, N);
            std::optional<Composita<Rational>> ex;
            if (f.exact) ex = invert_forward(*f.exact);
            return finish(ex, [&] { return invert_forward(f.approx); }, y);
        }
    }
    throw std::logic_error("build: bad node");
}

Series<double> oracle_series(const FuncExpr& e, const Point& x, std::size_t N) {
    switch (e.kind) {
        case FuncExpr::Kind::Atom: {
            const AtomDef& a = atom_of(e);
            a.check_domain(x.approx, e.params);
            return a.taylor(x.approx, e.params, N);
        }
        case FuncExpr::Kind::Sum: return oracle_series(*e.args[0], x, N) + oracle_series(*e.args[1], x, N);
        case FuncExpr::Kind::Prod: {
            const auto A = oracle_series(*e.args[0], x, N), B = oracle_series(*e.args[1], x, N);
            const double a0 = evaluate(*e.args[0], x).approx, b0 = evaluate(*e.args[1], x).approx;
            return B.scaled(a0) + A.scaled(b0) + A * B;
        }
        case FuncExpr::Kind::Comp: {
            const auto inner = oracle_series(*e.args[1], x, N);
            const Point v = evaluate(*e.args[1], x);
            return series_compose(oracle_series(*e.args[0], v, N), inner);
        }
        case FuncExpr::Kind::Inv: {
            const Point y = solve_inverse(*e.args[0], x);
            const auto f = oracle_series(*e.args[0], y, N);
            if (f[1] == 0.0) throw NotInvertible("inv: derivative vanishes at " + y.str());
            return oracle::reversion(f);
        }
    }
    throw std::logic_error("oracle_series: bad node");
}

std::optional<Series<Rational>> exact_oracle_series(const FuncExpr& e, const Point& x, std::size_t N) {
    if (!x.exact) return std::nullopt;
    switch (e.kind) {
        case FuncExpr::Kind::Atom: {
            const AtomDef& a = atom_of(e);
            a.check_domain(x.approx, e.params);
            return a.exact_taylor(*x.exact, e.params, N);
        }
        case FuncExpr::Kind::Sum: {
            auto A = exact_oracle_series(*e.args[0], x, N), B = exact_oracle_series(*e.args[1], x, N);
            if (!A || !B) return std::nullopt;
            return *A + *B;
        }
        case FuncExpr::Kind::Prod: {
            auto A = exact_oracle_series(*e.args[0], x, N), B = exact_oracle_series(*e.args[1], x, N);
            const Point a0 = evaluate(*e.args[0], x), b0 = evaluate(*e.args[1], x);
            if (!A || !B || !a0.exact || !b0.exact) return std::nullopt;
            return B->scaled(*a0.exact) + A->scaled(*b0.exact) + *A * *B;
        }
        case FuncExpr::Kind::Comp: {
            auto inner = exact_oracle_series(*e.args[1], x, N);
            if (!inner) return std::nullopt;
            auto outer = exact_oracle_series(*e.args[0], evaluate(*e.args[1], x), N);
            if (!outer) return std::nullopt;
            return series_compose(*outer, *inner);
        }
        case FuncExpr::Kind::Inv: {
            const Point y = solve_inverse(*e.args[0], x);
            auto f = exact_oracle_series(*e.args[0], y, N);
            if (!f) return std::nullopt;
            if ((*f)[1] == 0) throw NotInvertible("inv: derivative vanishes at " + y.str());
            return oracle::reversion(*f);
        }
    }
    throw std::logic_error("exact_oracle_series: bad node");
}

}  // namespace compositae
