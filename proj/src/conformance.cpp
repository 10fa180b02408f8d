#include "compositae/conformance.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "compositae/bellpoly.hpp"
#include "compositae/catalog.hpp"
#include "compositae/funcexpr.hpp"
#include "compositae/oracle.hpp"

namespace compositae {

namespace {

constexpr double kTol = 1e-9;

struct Meta {
    Meta(std::string e, std::string s, std::string f, std::string p, bool expect = true, std::string n = {})
        : entry(std::move(e)), source(std::move(s)), formula(std::move(f)), point(std::move(p)), expect_match(expect),
          note(std::move(n)) {}
    std::string entry, source, formula, point;
    bool expect_match = true;
    std::string note;
};

class Recorder {
public:
    Recorder(std::vector<ConformanceRecord>& out, std::string suite) : out_(out), suite_(std::move(suite)) {}

    template <class R>
    void value(const Meta& m, const std::string& row, const R& expected, const R& computed, double tol = kTol) {
        auto& r = start(m);
        r.row = row;
        r.exact = std::is_same_v<R, Rational>;
        r.expected = Ring<R>::str(expected);
        r.computed = Ring<R>::str(computed);
        r.matched = Ring<R>::equal(expected, computed, tol);
    }

    template <class R>
    void triangle(const Meta& m, const Composita<R>& expected, const Composita<R>& computed, double tol = kTol) {
        auto& r = start(m);
        r.exact = std::is_same_v<R, Rational>;
        const std::size_t N = std::min(expected.order(), computed.order());
        r.row = "n<=" + std::to_string(N);
        r.matched = expected.order() == computed.order();
        std::size_t count = 0;
        for (std::size_t n = 1; n <= N && r.matched; ++n)
            for (std::size_t k = 1; k <= n; ++k, ++count)
                if (!Ring<R>::equal(expected(n, k), computed(n, k), tol)) {
                    r.matched = false;
                    r.row = "Y(" + std::to_string(n) + "," + std::to_string(k) + ")";
                    r.expected = Ring<R>::str(expected(n, k));
                    r.computed = Ring<R>::str(computed(n, k));
                    break;
                }
        if (r.matched) r.expected = r.computed = std::to_string(count) + " entries agree";
    }

    // Records a check that could not run (exception) as a failure.
    void error(const Meta& m, const std::string& what) {
        auto& r = start(m);
        r.row = "-";
        r.expected = "-";
        r.computed = "error: " + what;
        r.expect_match = true;
        r.matched = false;
    }

    template <class Fn>
    void guarded(const Meta& m, Fn&& fn) {
        try {
            fn();
        } catch (const std::exception& ex) {
            error(m, ex.what());
        }
    }

private:
    ConformanceRecord& start(const Meta& m) {
        ConformanceRecord r;
        r.suite = suite_;
        r.entry = m.entry;
        r.source = m.source;
        r.formula = m.formula;
        r.point = m.point;
        r.expect_match = m.expect_match;
        r.note = m.note;
        out_.push_back(std::move(r));
        return out_.back();
    }

    std::vector<ConformanceRecord>& out_;
    std::string suite_;
};

std::string bell_label(std::size_t n, std::size_t k) {
    return "B(" + std::to_string(n) + "," + std::to_string(k) + ")";
}

// PowerCoeffs restricted to 1 <= k <= n, comparable with a composita.
template <class R>
Composita<R> lower_part(const PowerCoeffs<R>& p) {
    Composita<R> c(p.order());
    for (std::size_t n = 1; n <= p.order(); ++n)
        for (std::size_t k = 1; k <= n; ++k) c(n, k) = p(n, k);
    return c;
}

using FloatRow = std::vector<std::function<double(double)>>;

// Printed Bell table rows against to_bell of a composita, at a float point.
void bell_table(Recorder& rec, const std::string& entry, const std::string& source,
                const std::vector<std::vector<std::pair<std::string, std::function<double(double)>>>>& rows,
                const std::function<Composita<double>(double, std::size_t)>& build_at, double x,
                const std::string& point) {
    const std::size_t N = rows.size();
    Composita<double> c(N);
    try {
        c = build_at(x, N);
    } catch (const std::exception& ex) {
        rec.error({entry, source, "table", point}, ex.what());
        return;
    }
    for (std::size_t n = 1; n <= N; ++n)
        for (std::size_t k = 1; k <= n; ++k) {
            const auto& [text, fn] = rows[n - 1][k - 1];
            rec.value<double>({entry, source, text, point}, bell_label(n, k), fn(x), to_bell(c, n, k));
        }
}

void sin_tables(Recorder& rec) {
    auto S = [](double x) { return std::sin(x); };
    auto C = [](double x) { return std::cos(x); };
    const std::vector<std::vector<std::pair<std::string, std::function<double(double)>>>> rows = {
        {{"cos x", C}},
        {{"-sin x", [=](double x) { return -S(x); }}, {"cos^2 x", [=](double x) { return std::pow(C(x), 2); }}},
        {{"-cos x", [=](double x) { return -C(x); }},
         {"-3 cos x sin x", [=](double x) { return -3 * C(x) * S(x); }},
         {"cos^3 x", [=](double x) { return std::pow(C(x), 3); }}},
        {{"sin x", S},
         {"3 sin^2 x - 4 cos^2 x", [=](double x) { return 3 * std::pow(S(x), 2) - 4 * std::pow(C(x), 2); }},
         {"-6 cos^2 x sin x", [=](double x) { return -6 * std::pow(C(x), 2) * S(x); }},
         {"cos^4 x", [=](double x) { return std::pow(C(x), 4); }}},
        {{"cos x", C},
         {"15 cos x sin x", [=](double x) { return 15 * C(x) * S(x); }},
         {"15 cos x sin^2 x - 10 cos^3 x",
          [=](double x) { return 15 * C(x) * std::pow(S(x), 2) - 10 * std::pow(C(x), 3); }},
         {"-10 cos^3 x sin x", [=](double x) { return -10 * std::pow(C(x), 3) * S(x); }},
         {"cos^5 x", [=](double x) { return std::pow(C(x), 5); }}},
    };
    const std::pair<double, const char*> points[] = {{0.0, "0"}, {0.7, "0.7"}, {std::numbers::pi / 3, "pi/3"}};
    for (const auto& [x, label] : points)
        bell_table(rec, "sin", "Bell table of sin x, rows 1-5", rows,
                   [](double t, std::size_t N) { return catalog::sin_entry(t, N); }, x, label);

    // At 0 the whole pipeline is rational.
    const Meta m{"sin", "Bell table of sin x, rows 1-5", "table at x = 0, exact", "0"};
    const auto exact = catalog::sin_shift(Rational(0), Rational(1), 5);
    const Rational at0[5][5] = {{1}, {0, 1}, {-1, 0, 1}, {0, -4, 0, 1}, {1, 0, -10, 0, 1}};
    for (std::size_t n = 1; n <= 5; ++n)
        for (std::size_t k = 1; k <= n; ++k) rec.value<Rational>(m, bell_label(n, k), at0[n - 1][k - 1], to_bell(exact, n, k));
}

void tan_tables(Recorder& rec) {
    auto sec = [](double x) { return 1.0 / std::cos(x); };
    auto t = [](double x) { return std::tan(x); };
    auto P = [](double v, int e) { return std::pow(v, e); };
    const std::vector<std::vector<std::pair<std::string, std::function<double(double)>>>> rows = {
        {{"sec^2", [=](double x) { return P(sec(x), 2); }}},
        {{"2 sec^2 tan", [=](double x) { return 2 * P(sec(x), 2) * t(x); }},
         {"sec^4", [=](double x) { return P(sec(x), 4); }}},
        {{"6 sec^2 tan^2 + 2 sec^2", [=](double x) { return 6 * P(sec(x), 2) * P(t(x), 2) + 2 * P(sec(x), 2); }},
         {"6 sec^4 tan", [=](double x) { return 6 * P(sec(x), 4) * t(x); }},
         {"sec^6", [=](double x) { return P(sec(x), 6); }}},
        {{"24 sec^2 tan^3 + 16 sec^2 tan",
          [=](double x) { return 24 * P(sec(x), 2) * P(t(x), 3) + 16 * P(sec(x), 2) * t(x); }},
         {"36 sec^4 tan^2 + 8 sec^4", [=](double x) { return 36 * P(sec(x), 4) * P(t(x), 2) + 8 * P(sec(x), 4); }},
         {"12 sec^6 tan", [=](double x) { return 12 * P(sec(x), 6) * t(x); }},
         {"sec^8", [=](double x) { return P(sec(x), 8); }}},
    };
    for (const auto& [x, label] : {std::pair<double, const char*>{0.0, "0"}, {0.3, "0.3"}})
        bell_table(rec, "tan", "Bell table of tan x, rows 1-4", rows,
                   [](double v, std::size_t N) { return catalog::tan_entry(v, N); }, x, label);
}

void arctan_tables(Recorder& rec) {
    // Printed rows, evaluated exactly in Q.
    using Fn = std::function<Rational(const Rational&)>;
    auto D = [](const Rational& x) { return Rational(x * x + 1); };
    const std::vector<std::vector<std::pair<std::string, Fn>>> rows = {
        {{"1/(x^2+1)", [=](const Rational& x) { return Rational(1 / D(x)); }}},
        {{"-2x/(x^2+1)^2", [=](const Rational& x) { return Rational(-2 * x / pow(D(x), 2)); }},
         {"1/(x^2+1)^2", [=](const Rational& x) { return Rational(1 / pow(D(x), 2)); }}},
        {{"6(x^2/(x^2+1)^3 - 1/(3(x^2+1)^3))",
          [=](const Rational& x) { return Rational(6 * (x * x - make_rational(1, 3)) / pow(D(x), 3)); }},
         {"-6x/(x^2+1)^3", [=](const Rational& x) { return Rational(-6 * x / pow(D(x), 3)); }},
         {"1/(x^2+1)^3", [=](const Rational& x) { return Rational(1 / pow(D(x), 3)); }}},
        {{"24(x/(x^2+1)^4 - x^3/(x^2+1)^4)",
          [=](const Rational& x) { return Rational(24 * (x - x * x * x) / pow(D(x), 4)); }},
         {"12(3x^2/(x^2+1)^4 - 2/(3(x^2+1)^4))",
          [=](const Rational& x) { return Rational(12 * (3 * x * x - make_rational(2, 3)) / pow(D(x), 4)); }},
         {"-12x/(x^2+1)^4", [=](const Rational& x) { return Rational(-12 * x / pow(D(x), 4)); }},
         {"1/(x^2+1)^4", [=](const Rational& x) { return Rational(1 / pow(D(x), 4)); }}},
    };
    const std::string source = "Bell table of arctan x, rows 1-4";
    for (const Rational& x : {Rational(0), Rational(1)}) {
        const std::string point = to_string(x);
        rec.guarded({"arctan", source, "table", point}, [&] {
            const auto exact = catalog::arctan_shift(x, 4);
            const auto approx = catalog::arctan_entry(x.get_d(), 4);
            for (std::size_t n = 1; n <= 4; ++n)
                for (std::size_t k = 1; k <= n; ++k) {
                    const auto& [text, fn] = rows[n - 1][k - 1];
                    rec.value<Rational>({"arctan", source, text, point}, bell_label(n, k), fn(x), to_bell(exact, n, k));
                    rec.value<double>({"arctan", source, text + " (float path)", point}, bell_label(n, k),
                                      fn(x).get_d(), to_bell(approx, n, k));
                }
        });
    }
}

void cubic_tables(Recorder& rec) {
    using Fn = std::function<Rational(const Rational&)>;
    auto a = [](const Rational& x) { return Rational(3 * x * x + 2); };
    const std::vector<std::vector<std::pair<std::string, Fn>>> rows = {
        {{"3x^2+2", a}},
        {{"6x", [](const Rational& x) { return Rational(6 * x); }},
         {"(3x^2+2)^2", [=](const Rational& x) { return pow(a(x), 2); }}},
        {{"6", [](const Rational&) { return Rational(6); }},
         {"18x(3x^2+2)", [=](const Rational& x) { return Rational(18 * x * a(x)); }},
         {"(3x^2+2)^3", [=](const Rational& x) { return pow(a(x), 3); }}},
        {{"0", [](const Rational&) { return Rational(0); }},
         {"180x^2+48", [](const Rational& x) { return Rational(180 * x * x + 48); }},
         {"36x(3x^2+2)^2", [=](const Rational& x) { return Rational(36 * x * pow(a(x), 2)); }},
         {"(3x^2+2)^4", [=](const Rational& x) { return pow(a(x), 4); }}},
    };
    const std::string source = "Bell table of x^3+2x, rows 1-4";
    for (const Rational& x : {Rational(1), Rational(2), make_rational(-1, 2)}) {
        const std::string point = to_string(x);
        const auto c = catalog::cubic<Rational>(a(x), Rational(3 * x), Rational(1), 4);
        const auto via_expr = build(*parse("poly:0:2:0:1"), Point::of(x), 4);
        for (std::size_t n = 1; n <= 4; ++n)
            for (std::size_t k = 1; k <= n; ++k) {
                const auto& [text, fn] = rows[n - 1][k - 1];
                rec.value<Rational>({"x^3+2x", source, text, point}, bell_label(n, k), fn(x), to_bell(c, n, k));
            }
        rec.triangle<Rational>({"x^3+2x", source, "poly:0:2:0:1 through the expression builder", point}, c,
                               *via_expr.exact);
    }
}

void fibonacci_tables(Recorder& rec) {
    // 1/(1-x-x^2) = g(f(x)), g = 1/(1-x), f = x + x^2.
    using Fn = std::function<Rational(const Rational&)>;
    auto D = [](const Rational& x) { return Rational(1 - x - x * x); };
    auto u = [](const Rational& x) { return Rational(2 * x + 1); };
    const std::vector<std::vector<std::pair<std::string, Fn>>> rows = {
        {{"(2x+1)/D^2", [=](const Rational& x) { return Rational(u(x) / pow(D(x), 2)); }}},
        {{"2/D^2 + 2(2x+1)^2/D^3",
          [=](const Rational& x) { return Rational(2 / pow(D(x), 2) + 2 * pow(u(x), 2) / pow(D(x), 3)); }},
         {"(2x+1)^2/D^4", [=](const Rational& x) { return Rational(pow(u(x), 2) / pow(D(x), 4)); }}},
        {{"12(2x+1)/D^3 + 6(2x+1)^3/D^4",
          [=](const Rational& x) { return Rational(12 * u(x) / pow(D(x), 3) + 6 * pow(u(x), 3) / pow(D(x), 4)); }},
         {"6(2x+1)/D^4 + 6(2x+1)^3/D^5",
          [=](const Rational& x) { return Rational(6 * u(x) / pow(D(x), 4) + 6 * pow(u(x), 3) / pow(D(x), 5)); }},
         {"(2x+1)^3/D^6", [=](const Rational& x) { return Rational(pow(u(x), 3) / pow(D(x), 6)); }}},
    };
    const std::string entry = "1/(1-x-x^2)", source = "Bell table of 1/(1-x-x^2), rows 1-3, D = 1-x-x^2";
    const Rational x = make_rational(1, 4);
    const std::string point = to_string(x);
    const Rational fx = x + x * x;
    const auto c = compose(catalog::quad<Rational>(u(x), Rational(1), 3), catalog::geometric<Rational>(fx, 3));
    for (std::size_t n = 1; n <= 3; ++n)
        for (std::size_t k = 1; k <= n; ++k) {
            const auto& [text, fn] = rows[n - 1][k - 1];
            rec.value<Rational>({entry, source, text, point}, bell_label(n, k), fn(x), to_bell(c, n, k));
        }
    // Printed closed form: n!/m! sum_k C(k-1,m-1) C(k,n-k) (2x+1)^(2k-n) D^(-m-k).
    for (std::size_t n = 1; n <= 3; ++n)
        for (std::size_t m = 1; m <= n; ++m) {
            Rational acc = 0;
            for (long k = static_cast<long>(m); k <= static_cast<long>(n); ++k)
                acc += Rational(Integer(binomial(k - 1, static_cast<long>(m) - 1) * binomial(k, static_cast<long>(n) - k))) *
                       pow(u(x), 2 * k - static_cast<long>(n)) * pow(D(x), -static_cast<long>(m) - k);
            acc *= make_rational(factorial(static_cast<long>(n)), factorial(static_cast<long>(m)));
            rec.value<Rational>({entry, "closed form for B(n,m) of 1/(1-x-x^2)",
                                 "n!/m! sum C(k-1,m-1) C(k,n-k) (2x+1)^(2k-n) D^(-m-k)", point},
                                bell_label(n, m), acc, to_bell(c, n, m));
        }
    const auto via_expr = build(*parse("comp(geom, poly:0:1:1)"), Point::of(x), 3);
    rec.triangle<Rational>({entry, source, "comp(geom, poly:0:1:1) through the expression builder", point}, c,
                           *via_expr.exact);
}

void lambert_tables(Recorder& rec) {
    const std::string entry = "lambertw", source = "derivatives of W at x e^x, rows 1-5";
    // Constants at x = 0: (-1)^(n-1) n^(n-1).
    const auto W = invert_backward(catalog::xexp(Rational(0), Rational(1), 5));
    const long constants[5] = {1, -2, 9, -64, 625};
    for (std::size_t n = 1; n <= 5; ++n)
        rec.value<Rational>({entry, source, "numerator at x = 0", "0"}, "W^(" + std::to_string(n) + ")",
                            Rational(constants[n - 1]), Rational(Rational(factorial(static_cast<long>(n))) * W(n, 1)));

    using Fn = std::function<double(double)>;
    const std::vector<std::tuple<std::string, Fn, bool>> rows = {
        {"e^(-x)/(1+x)", [](double x) { return std::exp(-x) / (1 + x); }, true},
        {"(-x-2)/(1+x)^3 e^(-2x)", [](double x) { return (-x - 2) / std::pow(1 + x, 3) * std::exp(-2 * x); }, true},
        {"(2x^2+8x+9)/((1+x)^5 e^(-3x))  [as printed]",
         [](double x) { return (2 * x * x + 8 * x + 9) / (std::pow(1 + x, 5) * std::exp(-3 * x)); }, false},
        {"(-6x^3-36x^2-79x-64)/(1+x)^7 e^(-4x)",
         [](double x) { return (-6 * x * x * x - 36 * x * x - 79 * x - 64) / std::pow(1 + x, 7) * std::exp(-4 * x); },
         true},
        {"(24x^4+192x^3+622x^2+974x+625)/(1+x)^9 e^(-5x)",
         [](double x) {
             return (24 * std::pow(x, 4) + 192 * std::pow(x, 3) + 622 * x * x + 974 * x + 625) / std::pow(1 + x, 9) *
                    std::exp(-5 * x);
         },
         true},
    };
    const double x = 0.5;
    const auto d = catalog::lambert_w_derivs(5, x);
    for (std::size_t n = 1; n <= 5; ++n) {
        const auto& [text, fn, ok] = rows[n - 1];
        Meta m{entry, source, text, "0.5", ok};
        if (!ok) m.note = "e^(-3x) sits in the denominator; the row is right with it as a multiplier";
        rec.value<double>(m, "W^(" + std::to_string(n) + ")", fn(x), d[n]);
    }
    rec.value<double>({entry, source, "(2x^2+8x+9)/(1+x)^5 e^(-3x)  [corrected]", "0.5"}, "W^(3)",
                      (2 * x * x + 8 * x + 9) / std::pow(1 + x, 5) * std::exp(-3 * x), d[3]);
}

void faa_di_bruno_rows(Recorder& rec) {
    const std::string source = "Faa di Bruno examples";
    for (const double x : {0.0, 0.7}) {
        const std::string point = x == 0.0 ? "0" : "0.7";
        const double s = std::sin(x), c = std::cos(x), es = std::exp(s);
        const auto row4 = bell_row(catalog::sin_entry(x, 4), 4);
        const std::vector<double> g1(4, es);
        rec.value<double>({"exp(sin x)", source, "e^sin x (sin x + 3 sin^2 x - 4 cos^2 x - 6 cos^2 x sin x + cos^4 x)", point},
                          "f1^(4)", es * (s + 3 * s * s - 4 * c * c - 6 * c * c * s + std::pow(c, 4)),
                          faa_di_bruno<double>(4, g1, row4));
        const auto row5 = bell_row(catalog::sin_entry(x, 5), 5);
        const std::vector<double> g2 = {3 * s * s, 6 * s, 6, 0, 0};
        rec.value<double>({"sin^3 x", source, "183 sin^2 x cos x - 60 cos^3 x", point}, "f2^(5)",
                          183 * s * s * c - 60 * std::pow(c, 3), faa_di_bruno<double>(5, g2, row5));
    }
    // Exact at 0.
    const auto ex = catalog::sin_shift(Rational(0), Rational(1), 5);
    const auto r4 = bell_row(ex, 4), r5 = bell_row(ex, 5);
    const std::vector<Rational> g1(4, Rational(1));
    const std::vector<Rational> g2 = {0, 0, 6, 0, 0};
    rec.value<Rational>({"exp(sin x)", source, "value at 0", "0"}, "f1^(4)", Rational(-3), faa_di_bruno<Rational>(4, g1, r4));
    rec.value<Rational>({"sin^3 x", source, "value at 0", "0"}, "f2^(5)", Rational(-60), faa_di_bruno<Rational>(5, g2, r5));
}

void printed_compositae(Recorder& rec) {
    constexpr std::size_t N = 8;
    // Two-derivative function: C(k,n-k) y'^(2k-n) (y''/2)^(n-k).
    {
        const Rational a = make_rational(3, 2), b = make_rational(-2, 3);
        rec.triangle<Rational>({"a z + b z^2", "composita from two derivatives", "C(k,n-k) a^(2k-n) b^(n-k)", "a=3/2, b=-2/3"},
                               from_series(Series<Rational>(N, {0, a, b}), N), catalog::quad(a, b, N));
    }
    // sqrt: the printed composita lacks x^(-n).
    {
        const Rational x = 4, root = 2;
        const auto truth = from_series(oracle::sqrt(x, root, N), N);
        rec.triangle<Rational>({"sqrt", "composita of sqrt(x+z) - sqrt(x)",
                                "k/n C(2n-k-1,n-1) (-1)^(n-k) sqrt(x)^k 2^k 4^(-n)  [as printed]", "4", false,
                                "a factor x^(-n) is missing"},
                               truth, catalog::sqrt_catalan_as_printed(root, N));
        rec.triangle<Rational>({"sqrt", "composita of sqrt(x+z) - sqrt(x)", "same with x^(-n)  [corrected]", "4"}, truth,
                               catalog::sqrt_catalan(x, root, N));
        // The inversion of x^2, both recurrences.
        const auto sq = catalog::pow_m(root, 2, N);
        rec.triangle<Rational>({"sqrt", "inverse of x^2, row recurrence", "invert_forward(composita of x^2 at sqrt x)", "4"},
                               truth, invert_forward(sq));
        rec.triangle<Rational>({"sqrt", "inverse of x^2, column recurrence", "invert_backward(composita of x^2 at sqrt x)", "4"},
                               truth, invert_backward(sq));
    }
    // 1/ln x: the printed exponent of ln x is -n-k; it must be -k-m.
    {
        const double x = 3, lx = std::log(x);
        const auto truth = from_series(oracle_series(*parse("comp(recip, ln)"), Point::of(Rational(3)), N), N);
        auto literal = [&](bool corrected) {
            Composita<double> c(N);
            for (std::size_t n = 1; n <= N; ++n)
                for (std::size_t m = 1; m <= n; ++m) {
                    double acc = 0;
                    for (std::size_t k = m; k <= n; ++k) {
                        const long K = static_cast<long>(k), M = static_cast<long>(m), Nn = static_cast<long>(n);
                        const double coef = make_rational(factorial(K) * stirling1_signed(Nn, K) * binomial(K - 1, M - 1),
                                                          factorial(Nn))
                                                .get_d();
                        const double e = corrected ? -static_cast<double>(K + M) : -static_cast<double>(Nn + K);
                        acc += coef * std::pow(x, -static_cast<double>(Nn)) * (K % 2 == 0 ? 1.0 : -1.0) * std::pow(lx, e);
                    }
                    c(n, m) = acc;
                }
            return c;
        };
        rec.triangle<double>({"1/ln x", "composita of 1/ln x", "sum k!/n! s(n,k) x^(-n) C(k-1,m-1) (-1)^k (ln x)^(-n-k)  [as printed]",
                              "3", false, "exponent of ln x should be -k-m"},
                             truth, literal(false));
        rec.triangle<double>({"1/ln x", "composita of 1/ln x", "same with (ln x)^(-k-m)  [corrected]", "3"}, truth, literal(true));
    }
    // x e^x: the printed expression is the power coefficients of f(x+z)^k.
    for (const Rational& x : {Rational(0), Rational(1)}) {
        rec.guarded({"x e^x", "composita of x e^x", "printed", to_string(x)}, [&] {
            const bool at0 = x == 0;
            const double xd = x.get_d(), ex = std::exp(xd);
            const auto truth = from_series(oracle::xexp(xd, ex, N), N);
            Meta m{"x e^x", "composita of x e^x", "e^(kx) sum_i k^(n-i) C(k,i) x^(k-i)/(n-i)!  [as printed]", to_string(x),
                   at0};
            if (!at0) m.note = "coefficients of f(x+z)^k; they equal the composita only where f(x) = 0";
            rec.triangle<double>(m, truth, lower_part(catalog::xexp_power_coeffs_printed(xd, ex, N)));
            rec.triangle<double>({"x e^x", "composita of x e^x", "printed expression read as power coefficients",
                                  to_string(x)},
                                 lower_part(power_coeffs(truth, xd * ex)),
                                 lower_part(catalog::xexp_power_coeffs_printed(xd, ex, N)));
        });
    }
    // Closed forms for x^m, x^(-m), 1/x, ln x at rational points.
    rec.triangle<Rational>({"x^m", "composita of x^m", "x^(km) sum_j C(k,j) C(jm,n) x^(-n) (-1)^(k-j)", "2, m=3"},
                           from_series(oracle::power(Rational(2), 3, N), N), catalog::pow_m(Rational(2), 3, N));
    rec.triangle<Rational>({"x^(-m)", "composita of x^(-m)", "sum_j C(k,j) (-1)^(n+k-j) C(n+jm-1,jm-1) x^(-n-km)", "3, m=2"},
                           from_series(oracle::power(Rational(3), -2, N), N), catalog::neg_pow_m(Rational(3), 2, N));
    rec.triangle<Rational>({"1/x", "composita of 1/x", "C(n-1,k-1) (-1)^n x^(-n-k)", "-1/2"},
                           from_series(oracle::power(make_rational(-1, 2), -1, N), N), catalog::recip(make_rational(-1, 2), N));
    rec.triangle<Rational>({"ln x", "composita of ln x", "k!/n! s(n,k) x^(-n), s signed", "2"},
                           from_series(oracle::log(Rational(2), N), N), catalog::log_shift(Rational(2), N));
    rec.triangle<Rational>({"1/(1-x)", "composita of 1/(1-x)", "C(n-1,k-1) (1-x)^(-k-n)", "1/3"},
                           from_series(oracle::geometric(make_rational(1, 3), N), N),
                           catalog::geometric(make_rational(1, 3), N));
    rec.triangle<Rational>({"tan", "composita of tan", "G(n,k) sum over Stirling numbers of the second kind, composed", "0"},
                           from_series(oracle::reversion(oracle::arctan(Rational(0), N)), N),
                           catalog::tan_shift(Rational(0), N));
    rec.triangle<Rational>({"arctan", "composita of arctan", "sum_k C(n-1,k-1) (-x)^(n-k)/(1+x^2)^n ...", "1/2"},
                           from_series(oracle::arctan(make_rational(1, 2), N), N), catalog::arctan_shift(make_rational(1, 2), N));
    rec.triangle<double>({"x/sqrt(1-x^2)", "composita of x/sqrt(1-x^2)", "x^(m-n) sum_k ... (1-x^2)^(-m/2-k)", "0.5"},
                         from_series(oracle::x_over_sqrt_1mx2(0.5, N), N), catalog::x_over_sqrt_1mx2_closed_form(0.5, N));
}

void theorem_examples(Recorder& rec) {
    constexpr std::size_t N = 8;
    struct Case {
        const char* entry;
        const char* expr;
        Rational x;
        const char* source;
    };
    const Case cases[] = {
        {"x^2 + ln x", "sum(pow:2, ln)", Rational(2), "sum theorem example"},
        {"x ln x", "prod(identity, ln)", Rational(2), "product theorem example"},
        {"x ln x", "xlnx", Rational(2), "product theorem example, catalog entry"},
        {"1/ln x", "comp(recip, ln)", Rational(3), "composition theorem example"},
        {"x/(e^x - 1)", "bernoulli", Rational(1), "product theorem example (Bernoulli numbers)"},
    };
    for (const auto& c : cases) {
        const Meta m{c.entry, c.source, std::string(c.expr) + " vs series oracle", to_string(c.x)};
        rec.guarded(m, [&] {
            const auto e = parse(c.expr);
            const Point p = Point::of(c.x);
            const Built b = build(*e, p, N);
            const auto exact_truth = exact_oracle_series(*e, p, N);
            if (b.exact && exact_truth) {
                rec.triangle<Rational>(m, from_series(*exact_truth, N), *b.exact);
            } else {
                rec.triangle<double>(m, from_series(oracle_series(*e, p, N), N), b.approx, 1e-8);
            }
        });
    }
}

// ---- oracle suite

Rational random_rational(std::mt19937_64& rng, long span = 5, long maxden = 4) {
    std::uniform_int_distribution<long> num(-span, span), den(1, maxden);
    return make_rational(num(rng), den(rng));
}

Series<Rational> random_delta(std::mt19937_64& rng, std::size_t N) {
    Series<Rational> s(N);
    for (std::size_t i = 1; i <= N; ++i) s[i] = random_rational(rng);
    while (s[1] == 0) s[1] = random_rational(rng);
    return s;
}

void atom_sweep(Recorder& rec) {
    constexpr std::size_t N = 8;
    for (const auto& atom : atom_registry()) {
        std::vector<Params> param_sets = {atom.default_params};
        if (atom.name == "scale") param_sets.push_back({make_rational(-1, 2)});
        if (atom.name == "poly") {
            param_sets.push_back({Rational(0), Rational(1), Rational(1)});
            param_sets.push_back({Rational(1), Rational(-1), Rational(2), Rational(3), make_rational(1, 2)});
        }
        if (atom.name == "pow") param_sets = {{Rational(1)}, {Rational(2)}, {Rational(3)}, {Rational(5)}};
        if (atom.name == "npow") param_sets = {{Rational(1)}, {Rational(2)}, {Rational(3)}};
        for (const auto& params : param_sets) {
            std::string label = atom.name;
            for (const auto& q : params) label += ":" + decimal_string(q);
            for (const auto& pt : atom.sample_points) {
                const Rational x = parse_rational(pt);
                const Meta m{label, "closed form vs derivative oracle", "from_series(oracle)", pt};
                rec.guarded(m, [&] {
                    atom.check_domain(x.get_d(), params);
                    const auto ec = atom.exact_composita(x, params, N);
                    const auto et = atom.exact_taylor(x, params, N);
                    if (ec && et) rec.triangle<Rational>({label, m.source, "exact", pt}, from_series(*et, N), *ec);
                    rec.triangle<double>({label, m.source, "float", pt}, from_series(atom.taylor(x.get_d(), params, N), N),
                                         atom.composita(x.get_d(), params, N));
                });
            }
        }
    }
}

void bell_sweep(Recorder& rec, std::mt19937_64& rng) {
    constexpr std::size_t N = 8;
    const BellTriangle generic = bell_generic(N);
    for (int trial = 0; trial < 4; ++trial) {
        std::vector<Rational> y(N);
        for (auto& v : y) v = random_rational(rng);
        Series<Rational> s(N);
        for (std::size_t i = 1; i <= N; ++i) s[i] = y[i - 1] / Rational(factorial(static_cast<long>(i)));
        const auto c = from_series(s, N);
        Composita<Rational> bell(N);
        for (std::size_t n = 1; n <= N; ++n)
            for (std::size_t k = 1; k <= n; ++k) bell(n, k) = to_bell(c, n, k);
        rec.triangle<Rational>({"Bell polynomials", "generic triangle at random y", "n!/k! Y(n,k)", "trial " + std::to_string(trial)},
                               bell, generic.eval<Rational>(y));
    }
    const std::vector<Rational> ones(10, Rational(1));
    const auto at_ones = bell_generic(10).eval<Rational>(ones);
    Composita<Rational> s2(10);
    for (std::size_t n = 1; n <= 10; ++n)
        for (std::size_t k = 1; k <= n; ++k) s2(n, k) = Rational(stirling2(static_cast<long>(n), static_cast<long>(k)));
    rec.triangle<Rational>({"Bell polynomials", "all y_i = 1", "Stirling numbers of the second kind", "y = 1"}, s2, at_ones);
}

void theorem_sweep(Recorder& rec, std::mt19937_64& rng) {
    constexpr std::size_t N = 8;
    for (int trial = 0; trial < 6; ++trial) {
        const std::string tag = "trial " + std::to_string(trial);
        const auto F = random_delta(rng, N), G = random_delta(rng, N);
        const auto Fc = from_series(F, N), Gc = from_series(G, N);
        rec.triangle<Rational>({"sum theorem", "random series", "from_series(F + G)", tag}, from_series(F + G, N), sum(Fc, Gc));

        const Rational f0 = random_rational(rng), g0 = random_rational(rng);
        const auto full = (F + Series<Rational>::constant(N, f0)) * (G + Series<Rational>::constant(N, g0));
        rec.triangle<Rational>({"product theorem", "random series", "from_series((f0+F)(g0+G) - f0 g0)", tag},
                               from_series(delta_part(full), N),
                               product(power_coeffs(Fc, f0), power_coeffs(Gc, g0), Rational(f0 * g0)));

        rec.triangle<Rational>({"composition theorem", "random series", "from_series(G(F))", tag},
                               from_series(series_compose(G, F), N), compose(Fc, Gc));

        const auto R = from_series(oracle::reversion(F), N);
        rec.triangle<Rational>({"inversion theorem", "random series", "from_series(reversion F), row recurrence", tag}, R,
                               invert_forward(Fc));
        rec.triangle<Rational>({"inversion theorem", "random series", "from_series(reversion F), column recurrence", tag}, R,
                               invert_backward(Fc));
    }
}

void expression_sweep(Recorder& rec, std::mt19937_64& rng) {
    constexpr std::size_t N = 8;
    struct Case {
        const char* expr;
        const char* point;
    };
    const Case cases[] = {
        {"sum(pow:2, ln)", "2"},          {"prod(identity, ln)", "2"},     {"comp(recip, ln)", "3"},
        {"comp(exp, sin)", "0"},          {"comp(exp, sin)", "0.7"},       {"comp(pow:3, sin)", "0.4"},
        {"inv(pow:2)", "4"},              {"inv(pow:2)", "2"},             {"inv(xexp)", "0"},
        {"inv(xexp)", "1"},               {"inv(tan)", "0.5"},             {"comp(geom, poly:0:1:1)", "1/4"},
        {"prod(sin, exp)", "1/2"},        {"inv(sum(identity, exp))", "1"}, {"comp(inv(tan), tan)", "0.3"},
        {"prod(poly:1:1, recip)", "2"},   {"comp(recip, tan)", "0.7"},     {"inv(comp(pow:3, scale:2))", "1/8"},
    };
    std::uniform_real_distribution<double> jitter(-0.05, 0.05);
    for (const auto& c : cases) {
        const auto e = parse(c.expr);
        std::vector<Point> points = {Point::of(parse_rational(c.point))};
        points.push_back(Point::of(parse_rational(c.point).get_d() + jitter(rng)));
        for (const auto& p : points) {
            const Meta m{c.expr, "expression builder vs series arithmetic", "from_series(oracle_series)", p.str()};
            rec.guarded(m, [&] {
                const Built b = build(*e, p, N);
                const auto et = exact_oracle_series(*e, p, N);
                if (b.exact && et) rec.triangle<Rational>({c.expr, m.source, "exact", p.str()}, from_series(*et, N), *b.exact);
                rec.triangle<double>({c.expr, m.source, "float", p.str()}, from_series(oracle_series(*e, p, N), N), b.approx,
                                     1e-8);
            });
        }
    }
}

}  // namespace

std::vector<ConformanceRecord> run_table_suite() {
    std::vector<ConformanceRecord> out;
    Recorder rec(out, "paper-tables");
    sin_tables(rec);
    tan_tables(rec);
    arctan_tables(rec);
    cubic_tables(rec);
    fibonacci_tables(rec);
    lambert_tables(rec);
    faa_di_bruno_rows(rec);
    printed_compositae(rec);
    theorem_examples(rec);
    return out;
}

std::vector<ConformanceRecord> run_oracle_suite(std::uint64_t seed) {
    std::vector<ConformanceRecord> out;
    Recorder rec(out, "oracles");
    std::mt19937_64 rng(seed);
    atom_sweep(rec);
    bell_sweep(rec, rng);
    theorem_sweep(rec, rng);
    expression_sweep(rec, rng);
    return out;
}

SuiteSummary summarize(const std::vector<ConformanceRecord>& records) {
    SuiteSummary s;
    for (const auto& r : records) {
        ++s.total;
        (r.pass() ? s.passed : s.failed) += 1;
    }
    return s;
}

}  // namespace compositae
