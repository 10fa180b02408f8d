#include "compositae/atoms.hpp"

#include <algorithm>
#include <cmath>

#include "compositae/catalog.hpp"
#include "compositae/oracle.hpp"

namespace compositae {

std::string Point::str() const { return exact ? to_string(*exact) : to_decimal_string(approx); }

std::optional<Rational> exact_root(const Rational& q, unsigned m) {
    if (m == 0) return std::nullopt;
    if (q < 0) return std::nullopt;
    Integer num, den;
    if (mpz_root(num.get_mpz_t(), q.get_num_mpz_t(), m) == 0) return std::nullopt;
    if (mpz_root(den.get_mpz_t(), q.get_den_mpz_t(), m) == 0) return std::nullopt;
    return make_rational(num, den);
}

namespace {

using catalog::detail::ipow;

long int_param(const Params& p) { return p.at(0).get_num().get_si(); }

void require_positive_integer(const Params& p) {
    if (p.at(0).get_den() != 1 || p[0] < 1 || p[0] > 64)
        throw std::invalid_argument("exponent must be an integer in 1..64");
}

void none(const Params&) {}

template <class Pred>
std::function<void(double, const Params&)> domain(std::string atom, Pred pred, std::string what) {
    return [atom = std::move(atom), pred, what = std::move(what)](double x, const Params& p) {
        if (!std::isfinite(x) || !pred(x, p)) throw DomainError(atom, what + " (x = " + to_decimal_string(x) + ")");
    };
}

auto always = [](double, const Params&) { return true; };

std::optional<Rational> no_exact_value(const Rational&, const Params&) { return std::nullopt; }

std::vector<AtomDef> make_registry() {
    std::vector<AtomDef> r;

    {
        AtomDef a;
        a.name = "identity";
        a.summary = "y = x";
        a.validate = none;
        a.check_domain = domain("identity", always, "");
        a.value = [](double x, const Params&) { return x; };
        a.exact_value = [](const Rational& x, const Params&) -> std::optional<Rational> { return x; };
        a.composita = [](double, const Params&, std::size_t N) { return Composita<double>::identity(N); };
        a.exact_composita = [](const Rational&, const Params&, std::size_t N) -> std::optional<Composita<Rational>> {
            return Composita<Rational>::identity(N);
        };
        a.taylor = [](double, const Params&, std::size_t N) { return Series<double>::variable(N); };
        a.exact_taylor = [](const Rational&, const Params&, std::size_t N) -> std::optional<Series<Rational>> {
            return Series<Rational>::variable(N);
        };
        a.inverse = [](double y, const Params&) -> std::optional<double> { return y; };
        a.exact_inverse = [](const Rational& y, const Params&) -> std::optional<Rational> { return y; };
        a.sample_points = {"0", "1/3", "-2"};
        r.push_back(a);
    }
    {
        AtomDef a;
        a.name = "scale";
        a.summary = "y = a*x   (scale:a)";
        a.min_params = a.max_params = 1;
        a.validate = none;
        a.check_domain = domain("scale", always, "");
        a.value = [](double x, const Params& p) { return p[0].get_d() * x; };
        a.exact_value = [](const Rational& x, const Params& p) -> std::optional<Rational> { return p[0] * x; };
        a.composita = [](double, const Params& p, std::size_t N) { return catalog::scale(p[0].get_d(), N); };
        a.exact_composita = [](const Rational&, const Params& p, std::size_t N) -> std::optional<Composita<Rational>> {
            return catalog::scale(p[0], N);
        };
        a.taylor = [](double, const Params& p, std::size_t N) { return Series<double>::variable(N).scaled(p[0].get_d()); };
        a.exact_taylor = [](const Rational&, const Params& p, std::size_t N) -> std::optional<Series<Rational>> {
            return Series<Rational>::variable(N).scaled(p[0]);
        };
        a.inverse = [](double y, const Params& p) -> std::optional<double> {
            if (p[0] == 0) return std::nullopt;
            return y / p[0].get_d();
        };
        a.exact_inverse = [](const Rational& y, const Params& p) -> std::optional<Rational> {
            if (p[0] == 0) return std::nullopt;
            return Rational(y / p[0]);
        };
        a.sample_points = {"0", "1/2", "3"};
        a.default_params = {Rational(3)};
        r.push_back(a);
    }
    {
        AtomDef a;
        a.name = "poly";
        a.summary = "y = c0 + c1*x + c2*x^2 + ...   (poly:c0:c1:...)";
        a.min_params = 1;
        a.max_params = 16;
        a.validate = none;
        a.check_domain = domain("poly", always, "");
        a.value = [](double x, const Params& p) {
            double acc = 0;
            for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i].get_d();
            return acc;
        };
        a.exact_value = [](const Rational& x, const Params& p) -> std::optional<Rational> {
            Rational acc = 0;
            for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
            return acc;
        };
        auto taylor_exact = [](const Rational& x, const Params& p, std::size_t N) {
            return oracle::polynomial<Rational>(p, x, N);
        };
        auto taylor_double = [](double x, const Params& p, std::size_t N) {
            std::vector<double> c;
            for (const auto& q : p) c.push_back(q.get_d());
            return oracle::polynomial<double>(c, x, N);
        };
        // Up to degree three the shifted polynomial is a z + b z^2 + c z^3 and
        // the cubic closed form applies; higher degrees go through powering.
        auto build = [](const auto& shifted, std::size_t degree, std::size_t N) {
            using R = std::decay_t<decltype(shifted[0])>;
            if (degree <= 3) {
                auto coef = [&](std::size_t i) { return i <= shifted.order() ? shifted[i] : Ring<R>::zero(); };
                return catalog::cubic<R>(coef(1), coef(2), coef(3), N);
            }
            return from_series(shifted, N);
        };
        a.composita = [=](double x, const Params& p, std::size_t N) {
            return build(taylor_double(x, p, std::max<std::size_t>(N, 3)), p.size() - 1, N);
        };
        a.exact_composita = [=](const Rational& x, const Params& p,
                                std::size_t N) -> std::optional<Composita<Rational>> {
            return build(taylor_exact(x, p, std::max<std::size_t>(N, 3)), p.size() - 1, N);
        };
        a.taylor = taylor_double;
        a.exact_taylor = [=](const Rational& x, const Params& p, std::size_t N) -> std::optional<Series<Rational>> {
            return taylor_exact(x, p, N);
        };
        a.sample_points = {"0", "1", "-3/2"};
        a.default_params = {Rational(1), Rational(2), Rational(0), Rational(1)};
        r.push_back(a);
    }
    {
        AtomDef a;
        a.name = "pow";
        a.summary = "y = x^m   (pow:m, m a positive integer)";
        a.min_params = a.max_params = 1;
        a.validate = require_positive_integer;
        a.check_domain = domain("pow", always, "");
        a.value = [](double x, const Params& p) { return std::pow(x, static_cast<double>(int_param(p))); };
        a.exact_value = [](const Rational& x, const Params& p) -> std::optional<Rational> {
            return pow(x, int_param(p));
        };
        a.composita = [](double x, const Params& p, std::size_t N) { return catalog::pow_m(x, int_param(p), N); };
        a.exact_composita = [](const Rational& x, const Params& p, std::size_t N) -> std::optional<Composita<Rational>> {
            return catalog::pow_m(x, int_param(p), N);
        };
        a.taylor = [](double x, const Params& p, std::size_t N) { return oracle::power(x, int_param(p), N); };
        a.exact_taylor = [](const Rational& x, const Params& p, std::size_t N) -> std::optional<Series<Rational>> {
            return oracle::power(x, int_param(p), N);
        };
        a.inverse = [](double y, const Params& p) -> std::optional<double> {
            const long m = int_param(p);
            if (y < 0) {
                if (m % 2 == 0) return std::nullopt;
                return -std::pow(-y, 1.0 / static_cast<double>(m));
            }
            return std::pow(y, 1.0 / static_cast<double>(m));
        };
        a.exact_inverse = [](const Rational& y, const Params& p) -> std::optional<Rational> {
            const long m = int_param(p);
            if (y < 0) {
                if (m % 2 == 0) return std::nullopt;
                auto root = exact_root(Rational(-y), static_cast<unsigned>(m));
                if (!root) return std::nullopt;
                return Rational(-*root);
            }
            return exact_root(y, static_cast<unsigned>(m));
        };
        a.sample_points = {"1", "-1/2", "3"};
        a.default_params = {Rational(3)};
        r.push_back(a);
    }
    {
        AtomDef a;
        a.name = "npow";
        a.summary = "y = x^(-m)   (npow:m, m a positive integer)";
        a.min_params = a.max_params = 1;
        a.validate = require_positive_integer;
        a.check_domain = domain("npow", [](double x, const Params&) { return x != 0.0; }, "x must be nonzero");
        a.value = [](double x, const Params& p) { return std::pow(x, -static_cast<double>(int_param(p))); };
        a.exact_value = [](const Rational& x, const Params& p) -> std::optional<Rational> {
            return pow(x, -int_param(p));
        };
        a.composita = [](double x, const Params& p, std::size_t N) { return catalog::neg_pow_m(x, int_param(p), N); };
        a.exact_composita = [](const Rational& x, const Params& p, std::size_t N) -> std::optional<Composita<Rational>> {
            return catalog::neg_pow_m(x, int_param(p), N);
        };
        a.taylor = [](double x, const Params& p, std::size_t N) { return oracle::power(x, -int_param(p), N); };
        a.exact_taylor = [](const Rational& x, const Params& p, std::size_t N) -> std::optional<Series<Rational>> {
            return oracle::power(x, -int_param(p), N);
        };
        a.inverse = [](double y, const Params& p) -> std::optional<double> {
            if (y <= 0) return std::nullopt;
            return std::pow(y, -1.0 / static_cast<double>(int_param(p)));
        };
        a.exact_inverse = [](const Rational& y, const Params& p) -> std::optional<Rational> {
            if (y <= 0) return std::nullopt;
            auto root = exact_root(y, static_cast<unsigned>(int_param(p)));
            if (!root) return std::nullopt;
            return Rational(1 / *root);
        };
        a.sample_points = {"1", "2", "-1/3"};
        a.default_params = {Rational(2)};
        r.push_back(a);
    }
    {
        AtomDef a;
        a.name = "recip";
        a.summary = "y = 1/x";
        a.validate = none;
        a.check_domain = domain("recip", [](double x, const Params&) { return x != 0.0; }, "x must be nonzero");
        a.value = [](double x, const Params&) { return 1.0 / x; };
        a.exact_value = [](const Rational& x, const Params&) -> std::optional<Rational> { return Rational(1 / x); };
        a.composita = [](double x, const Params&, std::size_t N) { return catalog::recip(x, N); };
        a.exact_composita = [](const Rational& x, const Params&, std::size_t N) -> std::optional<Composita<Rational>> {
            return catalog::recip(x, N);
        };
        a.taylor = [](double x, const Params&, std::size_t N) { return oracle::power(x, -1, N); };
        a.exact_taylor = [](const Rational& x, const Params&, std::size_t N) -> std::optional<Series<Rational>> {
            return oracle::power(x, -1, N);
        };
        a.inverse = [](double y, const Params&) -> std::optional<double> {
            if (y == 0) return std::nullopt;
            return 1.0 / y;
        };
        a.exact_inverse = [](const Rational& y, const Params&) -> std::optional<Rational> {
            if (y == 0) return std::nullopt;
            return Rational(1 / y);
        };
        a.sample_points = {"1", "2", "3", "-1/4"};
        r.push_back(a);
    }
    {
        AtomDef a;
        a.name = "geom";
        a.summary = "y = 1/(1-x)";
        a.validate = none;
        a.check_domain = domain("geom", [](double x, const Params&) { return x != 1.0; }, "x must differ from 1");
        a.value = [](double x, const Params&) { return 1.0 / (1.0 - x); };
        a.exact_value = [](const Rational& x, const Params&) -> std::optional<Rational> { return Rational(1 / (1 - x)); };
        a.composita = [](double x, const Params&, std::size_t N) { return catalog::geometric(x, N); };
        a.exact_composita = [](const Rational& x, const Params&, std::size_t N) -> std::optional<Composita<Rational>> {
            return catalog::geometric(x, N);
        };
        a.taylor = [](double x, const Params&, std::size_t N) { return oracle::geometric(x, N); };
        a.exact_taylor = [](const Rational& x, const Params&, std::size_t N) -> std::optional<Series<Rational>> {
            return oracle::geometric(x, N);
        };
        a.inverse = [](double y, const Params&) -> std::optional<double> {
            if (y == 0) return std::nullopt;
            return 1.0 - 1.0 / y;
        };
        a.exact_inverse = [](const Rational& y, const Params&) -> std::optional<Rational> {
            if (y == 0) return std::nullopt;
            return Rational(1 - 1 / y);
        };
        a.sample_points = {"0", "5/16", "-2"};
        r.push_back(a);
    }
    {
        AtomDef a;
        a.name = "ln";
        a.summary = "y = ln(x), x > 0";
        a.validate = none;
        a.check_domain = domain("ln", [](double x, const Params&) { return x > 0.0; }, "x must be positive");
        a.value = [](double x, const Params&) { return std::log(x); };
        a.exact_value = [](const Rational& x, const Params&) -> std::optional<Rational> {
            if (x == 1) return Rational(0);
            return std::nullopt;
        };
        a.composita = [](double x, const Params&, std::size_t N) { return catalog::log_shift(x, N); };
        a.exact_composita = [](const Rational& x, const Params&, std::size_t N) -> std::optional<Composita<Rational>> {
            return catalog::log_shift(x, N);
        };
        a.taylor = [](double x, const Params&, std::size_t N) { return oracle::log(x, N); };
        a.exact_taylor = [](const Rational& x, const Params&, std::size_t N) -> std::optional<Series<Rational>> {
            return oracle::log(x, N);
        };
        a.inverse = [](double y, const Params&) -> std::optional<double> { return std::exp(y); };
        a.exact_inverse = [](const Rational& y, const Params&) -> std::optional<Rational> {
            if (y == 0) return Rational(1);
            return std::nullopt;
        };
        a.sample_points = {"1", "2", "1/3"};
        r.push_back(a);
    }
    {
        AtomDef a;
        a.name = "exp";
        a.summary = "y = e^x";
        a.validate = none;
        a.check_domain = domain("exp", always, "");
        a.value = [](double x, const Params&) { return std::exp(x); };
        a.exact_value = [](const Rational& x, const Params&) -> std::optional<Rational> {
            if (x == 0) return Rational(1);
            return std::nullopt;
        };
        a.composita = [](double x, const Params&, std::size_t N) { return catalog::exp_shift(std::exp(x), N); };
        a.exact_composita = [](const Rational& x, const Params&, std::size_t N) -> std::optional<Composita<Rational>> {
            if (x != 0) return std::nullopt;
            return catalog::exp_shift(Rational(1), N);
        };
        a.taylor = [](double x, const Params&, std::size_t N) { return oracle::exp(std::exp(x), N); };
        a.exact_taylor = [](const Rational& x, const Params&, std::size_t N) -> std::optional<Series<Rational>> {
            if (x != 0) return std::nullopt;
            return oracle::exp(Rational(1), N);
        };
        a.inverse = [](double y, const Params&) -> std::optional<double> {
            if (y <= 0) return std::nullopt;
            return std::log(y);
        };
        a.exact_inverse = [](const Rational& y, const Params&) -> std::optional<Rational> {
            if (y == 1) return Rational(0);
            return std::nullopt;
        };
        a.sample_points = {"0", "1/2", "-1"};
        r.push_back(a);
    }

    // sqrt, rsqrt and cbrt share the shape "closed form at (x, root)".
    struct RootAtom {
        const char* name;
        const char* summary;
        unsigned degree;
        bool reciprocal;
    };
    for (const RootAtom ra : {RootAtom{"sqrt", "y = sqrt(x), x > 0", 2, false},
                              RootAtom{"rsqrt", "y = 1/sqrt(x), x > 0", 2, true},
                              RootAtom{"cbrt", "y = cbrt(x), x > 0", 3, false}}) {
        AtomDef a;
        a.name = ra.name;
        a.summary = ra.summary;
        a.validate = none;
        a.check_domain = domain(ra.name, [](double x, const Params&) { return x > 0.0; }, "x must be positive");
        const unsigned deg = ra.degree;
        const bool rec = ra.reciprocal;
        const std::string nm = ra.name;
        auto droot = [deg](double x) { return deg == 2 ? std::sqrt(x) : std::cbrt(x); };
        a.value = [=](double x, const Params&) { return rec ? 1.0 / droot(x) : droot(x); };
        a.exact_value = [=](const Rational& x, const Params&) -> std::optional<Rational> {
            auto root = exact_root(x, deg);
            if (!root || *root == 0) return std::nullopt;
            return rec ? Rational(1 / *root) : *root;
        };
        auto closed = [=](const auto& x, const auto& root, std::size_t N) {
            if (nm == "sqrt") return catalog::sqrt_catalan(x, root, N);
            if (nm == "rsqrt") return catalog::rsqrt(x, root, N);
            return catalog::cbrt(x, root, N);
        };
        auto oracle_of = [=](const auto& x, const auto& root, std::size_t N) {
            if (nm == "sqrt") return oracle::sqrt(x, root, N);
            if (nm == "rsqrt") return oracle::rsqrt(x, root, N);
            return oracle::cbrt(x, root, N);
        };
        a.composita = [=](double x, const Params&, std::size_t N) { return closed(x, droot(x), N); };
        a.exact_composita = [=](const Rational& x, const Params&, std::size_t N) -> std::optional<Composita<Rational>> {
            auto root = exact_root(x, deg);
            if (!root || *root == 0) return std::nullopt;
            return closed(x, *root, N);
        };
        a.taylor = [=](double x, const Params&, std::size_t N) { return oracle_of(x, droot(x), N); };
        a.exact_taylor = [=](const Rational& x, const Params&, std::size_t N) -> std::optional<Series<Rational>> {
            auto root = exact_root(x, deg);
            if (!root || *root == 0) return std::nullopt;
            return oracle_of(x, *root, N);
        };
        a.inverse = [=](double y, const Params&) -> std::optional<double> {
            if (y <= 0) return std::nullopt;
            const double t = rec ? 1.0 / y : y;
            return deg == 2 ? t * t : t * t * t;
        };
        a.exact_inverse = [=](const Rational& y, const Params&) -> std::optional<Rational> {
            if (y <= 0) return std::nullopt;
            const Rational t = rec ? Rational(1 / y) : y;
            return pow(t, static_cast<long>(deg));
        };
        a.sample_points = deg == 2 ? std::vector<std::string>{"4", "1", "9/4", "2"}
                                   : std::vector<std::string>{"8", "1", "27/64", "2"};
        r.push_back(a);
    }

    {
        AtomDef a;
        a.name = "sin";
        a.summary = "y = sin(x)";
        a.validate = none;
        a.check_domain = domain("sin", always, "");
        a.value = [](double x, const Params&) { return std::sin(x); };
        a.exact_value = [](const Rational& x, const Params&) -> std::optional<Rational> {
            if (x == 0) return Rational(0);
            return std::nullopt;
        };
        a.composita = [](double x, const Params&, std::size_t N) { return catalog::sin_entry(x, N); };
        a.exact_composita = [](const Rational& x, const Params&, std::size_t N) -> std::optional<Composita<Rational>> {
            if (x != 0) return std::nullopt;
            return catalog::sin_shift(Rational(0), Rational(1), N);
        };
        a.taylor = [](double x, const Params&, std::size_t N) { return oracle::sin(std::sin(x), std::cos(x), N); };
        a.exact_taylor = [](const Rational& x, const Params&, std::size_t N) -> std::optional<Series<Rational>> {
            if (x != 0) return std::nullopt;
            return oracle::sin(Rational(0), Rational(1), N);
        };
        a.inverse = [](double y, const Params&) -> std::optional<double> {
            if (std::fabs(y) > 1) return std::nullopt;
            return std::asin(y);
        };
        a.exact_inverse = [](const Rational& y, const Params&) -> std::optional<Rational> {
            if (y == 0) return Rational(0);
            return std::nullopt;
        };
        a.sample_points = {"0", "0.7", "1.0471975511965976", "-2"};
        r.push_back(a);
    }
    {
        AtomDef a;
        a.name = "cos";
        a.summary = "y = cos(x)";
        a.validate = none;
        a.check_domain = domain("cos", always, "");
        a.value = [](double x, const Params&) { return std::cos(x); };
        a.exact_value = [](const Rational& x, const Params&) -> std::optional<Rational> {
            if (x == 0) return Rational(1);
            return std::nullopt;
        };
        a.composita = [](double x, const Params&, std::size_t N) { return catalog::cos_entry(x, N); };
        a.exact_composita = [](const Rational& x, const Params&, std::size_t N) -> std::optional<Composita<Rational>> {
            if (x != 0) return std::nullopt;
            return catalog::cos_shift(Rational(0), Rational(1), N);
        };
        a.taylor = [](double x, const Params&, std::size_t N) { return oracle::cos(std::sin(x), std::cos(x), N); };
        a.exact_taylor = [](const Rational& x, const Params&, std::size_t N) -> std::optional<Series<Rational>> {
            if (x != 0) return std::nullopt;
            return oracle::cos(Rational(0), Rational(1), N);
        };
        a.inverse = [](double y, const Params&) -> std::optional<double> {
            if (std::fabs(y) > 1) return std::nullopt;
            return std::acos(y);
        };
        a.sample_points = {"0.3", "0.7", "2.5"};
        r.push_back(a);
    }
    {
        AtomDef a;
        a.name = "tan";
        a.summary = "y = tan(x), cos x != 0";
        a.validate = none;
        a.check_domain = domain("tan", [](double x, const Params&) { return std::fabs(std::cos(x)) >= 1e-12; },
                                "cos x must be nonzero");
        a.value = [](double x, const Params&) { return std::tan(x); };
        a.exact_value = [](const Rational& x, const Params&) -> std::optional<Rational> {
            if (x == 0) return Rational(0);
            return std::nullopt;
        };
        a.composita = [](double x, const Params&, std::size_t N) { return catalog::tan_entry(x, N); };
        a.exact_composita = [](const Rational& x, const Params&, std::size_t N) -> std::optional<Composita<Rational>> {
            if (x != 0) return std::nullopt;
            return catalog::tan_shift(Rational(0), N);
        };
        a.taylor = [](double x, const Params&, std::size_t N) { return oracle::tan(x, N); };
        a.exact_taylor = [](const Rational&, const Params&, std::size_t) -> std::optional<Series<Rational>> {
            return std::nullopt;
        };
        a.inverse = [](double y, const Params&) -> std::optional<double> { return std::atan(y); };
        a.exact_inverse = [](const Rational& y, const Params&) -> std::optional<Rational> {
            if (y == 0) return Rational(0);
            return std::nullopt;
        };
        a.sample_points = {"0", "0.3", "-1.2"};
        r.push_back(a);
    }
    {
        AtomDef a;
        a.name = "arctan";
        a.summary = "y = arctan(x)";
        a.validate = none;
        a.check_domain = domain("arctan", always, "");
        a.value = [](double x, const Params&) { return std::atan(x); };
        a.exact_value = [](const Rational& x, const Params&) -> std::optional<Rational> {
            if (x == 0) return Rational(0);
            return std::nullopt;
        };
        a.composita = [](double x, const Params&, std::size_t N) { return catalog::arctan_entry(x, N); };
        a.exact_composita = [](const Rational& x, const Params&, std::size_t N) -> std::optional<Composita<Rational>> {
            return catalog::arctan_shift(x, N);
        };
        a.taylor = [](double x, const Params&, std::size_t N) { return oracle::arctan(x, N); };
        a.exact_taylor = [](const Rational& x, const Params&, std::size_t N) -> std::optional<Series<Rational>> {
            return oracle::arctan(x, N);
        };
        a.inverse = [](double y, const Params&) -> std::optional<double> {
            if (std::fabs(y) >= std::acos(0.0)) return std::nullopt;
            return std::tan(y);
        };
        a.exact_inverse = [](const Rational& y, const Params&) -> std::optional<Rational> {
            if (y == 0) return Rational(0);
            return std::nullopt;
        };
        a.sample_points = {"0", "1", "-1/2"};
        r.push_back(a);
    }
    {
        AtomDef a;
        a.name = "xlnx";
        a.summary = "y = x*ln(x), x > 0";
        a.validate = none;
        a.check_domain = domain("xlnx", [](double x, const Params&) { return x > 0.0; }, "x must be positive");
        a.value = [](double x, const Params&) { return x * std::log(x); };
        a.exact_value = [](const Rational& x, const Params&) -> std::optional<Rational> {
            if (x == 1) return Rational(0);
            return std::nullopt;
        };
        a.composita = [](double x, const Params&, std::size_t N) { return catalog::xlnx(x, std::log(x), N); };
        a.exact_composita = [](const Rational& x, const Params&, std::size_t N) -> std::optional<Composita<Rational>> {
            if (x != 1) return std::nullopt;
            return catalog::xlnx(Rational(1), Rational(0), N);
        };
        a.taylor = [](double x, const Params&, std::size_t N) { return oracle::xlnx(x, std::log(x), N); };
        a.exact_taylor = [](const Rational& x, const Params&, std::size_t N) -> std::optional<Series<Rational>> {
            if (x != 1) return std::nullopt;
            return oracle::xlnx(Rational(1), Rational(0), N);
        };
        a.sample_points = {"1", "2", "0.5"};
        r.push_back(a);
    }
    {
        AtomDef a;
        a.name = "xexp";
        a.summary = "y = x*e^x";
        a.validate = none;
        a.check_domain = domain("xexp", always, "");
        a.value = [](double x, const Params&) { return x * std::exp(x); };
        a.exact_value = [](const Rational& x, const Params&) -> std::optional<Rational> {
            if (x == 0) return Rational(0);
            return std::nullopt;
        };
        a.composita = [](double x, const Params&, std::size_t N) { return catalog::xexp(x, std::exp(x), N); };
        a.exact_composita = [](const Rational& x, const Params&, std::size_t N) -> std::optional<Composita<Rational>> {
            if (x != 0) return std::nullopt;
            return catalog::xexp(Rational(0), Rational(1), N);
        };
        a.taylor = [](double x, const Params&, std::size_t N) { return oracle::xexp(x, std::exp(x), N); };
        a.exact_taylor = [](const Rational& x, const Params&, std::size_t N) -> std::optional<Series<Rational>> {
            if (x != 0) return std::nullopt;
            return oracle::xexp(Rational(0), Rational(1), N);
        };
        a.inverse = [](double y, const Params&) -> std::optional<double> {
            if (y < -1.0 / std::exp(1.0)) return std::nullopt;
            return catalog::lambert_w(y);
        };
        a.exact_inverse = [](const Rational& y, const Params&) -> std::optional<Rational> {
            if (y == 0) return Rational(0);
            return std::nullopt;
        };
        a.sample_points = {"0", "0.5", "-0.5"};
        r.push_back(a);
    }
    {
        AtomDef a;
        a.name = "lambertw";
        a.summary = "y = W(x), principal branch, x > -1/e";
        a.validate = none;
        a.check_domain = domain("lambertw", [](double x, const Params&) { return x > -1.0 / std::exp(1.0); },
                                "x must exceed -1/e");
        a.value = [](double x, const Params&) { return catalog::lambert_w(x); };
        a.exact_value = [](const Rational& x, const Params&) -> std::optional<Rational> {
            if (x == 0) return Rational(0);
            return std::nullopt;
        };
        a.composita = [](double x, const Params&, std::size_t N) {
            const double w = catalog::lambert_w(x);
            return invert_backward(catalog::xexp(w, std::exp(w), N));
        };
        a.exact_composita = [](const Rational& x, const Params&, std::size_t N) -> std::optional<Composita<Rational>> {
            if (x != 0) return std::nullopt;
            return invert_backward(catalog::xexp(Rational(0), Rational(1), N));
        };
        a.taylor = [](double x, const Params&, std::size_t N) {
            return delta_part(oracle::lambert_w(catalog::lambert_w(x), N));
        };
        a.exact_taylor = [](const Rational&, const Params&, std::size_t) -> std::optional<Series<Rational>> {
            return std::nullopt;
        };
        a.inverse = [](double y, const Params&) -> std::optional<double> {
            if (y <= -1.0) return std::nullopt;
            return y * std::exp(y);
        };
        a.exact_inverse = [](const Rational& y, const Params&) -> std::optional<Rational> {
            if (y == 0) return Rational(0);
            return std::nullopt;
        };
        a.sample_points = {"0", "1", "-0.2"};
        r.push_back(a);
    }
    {
        AtomDef a;
        a.name = "bernoulli";
        a.summary = "y = x/(e^x - 1), x != 0";
        a.validate = none;
        a.check_domain = domain("bernoulli", [](double x, const Params&) { return x != 0.0; }, "x must be nonzero");
        a.value = [](double x, const Params&) { return x / std::expm1(x); };
        a.exact_value = no_exact_value;
        a.composita = [](double x, const Params&, std::size_t N) { return catalog::bernoulli_gf(x, N); };
        a.exact_composita = [](const Rational&, const Params&, std::size_t) -> std::optional<Composita<Rational>> {
            return std::nullopt;
        };
        a.taylor = [](double x, const Params&, std::size_t N) { return oracle::bernoulli_gf(x, N); };
        a.exact_taylor = [](const Rational&, const Params&, std::size_t) -> std::optional<Series<Rational>> {
            return std::nullopt;
        };
        a.sample_points = {"1", "-0.5", "2"};
        r.push_back(a);
    }
    {
        AtomDef a;
        a.name = "x_over_sqrt_1mx2";
        a.summary = "y = x/sqrt(1 - x^2), 0 < |x| < 1";
        a.validate = none;
        a.check_domain = domain("x_over_sqrt_1mx2",
                                [](double x, const Params&) { return std::fabs(x) < 1.0 && x != 0.0; },
                                "need 0 < |x| < 1");
        a.value = [](double x, const Params&) { return x / std::sqrt(1.0 - x * x); };
        a.exact_value = no_exact_value;
        a.composita = [](double x, const Params&, std::size_t N) { return catalog::x_over_sqrt_1mx2(x, N); };
        a.exact_composita = [](const Rational&, const Params&, std::size_t) -> std::optional<Composita<Rational>> {
            return std::nullopt;
        };
        a.taylor = [](double x, const Params&, std::size_t N) { return oracle::x_over_sqrt_1mx2(x, N); };
        a.exact_taylor = [](const Rational&, const Params&, std::size_t) -> std::optional<Series<Rational>> {
            return std::nullopt;
        };
        a.inverse = [](double y, const Params&) -> std::optional<double> { return y / std::sqrt(1.0 + y * y); };
        a.sample_points = {"0.5", "-0.3", "0.8"};
        r.push_back(a);
    }

    for (auto& a : r) {
        if (!a.inverse) a.inverse = [](double, const Params&) -> std::optional<double> { return std::nullopt; };
        if (!a.exact_inverse)
            a.exact_inverse = [](const Rational&, const Params&) -> std::optional<Rational> { return std::nullopt; };
    }
    return r;
}

}  // namespace

const std::vector<AtomDef>& atom_registry() {
    static const std::vector<AtomDef> registry = make_registry();
    return registry;
}

const AtomDef* find_atom(std::string_view name) {
    const auto& reg = atom_registry();
    auto it = std::find_if(reg.begin(), reg.end(), [&](const AtomDef& a) { return a.name == name; });
    return it == reg.end() ? nullptr : &*it;
}

}  // namespace compositae
