// compositae: compositae and Bell polynomial triangles from the command line.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>

#include "CLI11.hpp"

#include "compositae/bellpoly.hpp"
#include "compositae/conformance.hpp"
#include "compositae/errors.hpp"
#include "compositae/funcexpr.hpp"
#include "compositae/report.hpp"

using namespace compositae;

namespace {

constexpr int kOk = 0, kFailure = 1, kUsage = 2;
constexpr std::size_t kMaxDerivativeOrder = 20;
constexpr std::size_t kMaxOrder = 60;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Carries an exit status with a message for stderr.
struct Failure : std::runtime_error {
    Failure(const std::string& prefix, const std::string& what) : std::runtime_error(prefix + ": " + what) {}
};

Point parse_point(const std::string& at) {
    try {
        return Point::of(parse_rational(at));
    } catch (const std::exception& ex) {
        throw UsageError("--at: " + std::string(ex.what()));
    }
}

void emit(const report::json& doc, const std::string& format) {
    if (format == "json")
        std::cout << doc.dump(2) << '\n';
    else
        std::cout << report::render_text(doc);
}

// Composita (or Bell triangle) of an expression, cross-checked against the
// series oracle unless told otherwise.
report::json numeric_triangle(const std::string& mode, const std::string& text, std::size_t N, const std::string& at,
                              bool check) {
    const auto e = parse(text);
    const Point x = parse_point(at);
    const Built b = build(*e, x, N);
    if (check) {
        const auto truth = from_series(oracle_series(*e, x, N), N);
        for (std::size_t n = 1; n <= N; ++n)
            for (std::size_t k = 1; k <= n; ++k)
                if (!approx_equal(truth(n, k), b.approx(n, k), 1e-8))
                    throw Failure("oracle mismatch", "Y(" + std::to_string(n) + "," + std::to_string(k) + ") = " +
                                                         to_decimal_string(b.approx(n, k)) + ", series oracle gives " +
                                                         to_decimal_string(truth(n, k)));
        if (b.exact)
            if (auto et = exact_oracle_series(*e, x, N); et && !(from_series(*et, N) == *b.exact))
                throw Failure("oracle mismatch", "exact triangle differs from the exact series oracle");
    }
    const bool bell = mode == "bell";
    std::vector<report::Entry> entries;
    for (std::size_t n = 1; n <= N; ++n)
        for (std::size_t k = 1; k <= n; ++k) {
            std::string v;
            if (b.exact)
                v = to_string(bell ? to_bell(*b.exact, n, k) : (*b.exact)(n, k));
            else
                v = to_decimal_string(bell ? to_bell(b.approx, n, k) : b.approx(n, k));
            entries.push_back({n, k, v});
        }
    return report::triangle_document(mode, print(*e), N, x.str(), b.exact.has_value(), entries);
}

report::json symbolic_bell(std::size_t N) {
    const BellTriangle t = bell_generic(N);
    std::vector<report::Entry> entries;
    for (std::size_t n = 1; n <= N; ++n)
        for (std::size_t k = 1; k <= n; ++k) entries.push_back({n, k, t(n, k).str()});
    return report::triangle_document("bell", "generic", N, "symbolic", true, entries);
}

report::json derivative(const std::string& outer_text, const std::string& inner_text, std::size_t n,
                        const std::string& at) {
    const auto outer = parse(outer_text), inner = parse(inner_text);
    const Point x = parse_point(at);
    const Built in = build(*inner, x, n);
    const Built out = build(*outer, in.value, n);
    // g^(k)(y) = k! G(k,1); B(n,k) from the inner composita.
    std::string value;
    bool exact = false;
    if (in.exact && out.exact) {
        std::vector<Rational> g;
        for (std::size_t k = 1; k <= n; ++k) g.push_back(to_bell(*out.exact, k, 1));
        value = to_string(faa_di_bruno<Rational>(n, g, bell_row(*in.exact, n)));
        exact = true;
    } else {
        std::vector<double> g;
        for (std::size_t k = 1; k <= n; ++k) g.push_back(to_bell(out.approx, k, 1));
        value = to_decimal_string(faa_di_bruno<double>(n, g, bell_row(in.approx, n)));
    }
    return report::derivative_document(print(*outer), print(*inner), n, x.str(), exact, value);
}

int run(int argc, char** argv) {
    CLI::App app{"compositae: compositae, Bell polynomials and derivatives in exact arithmetic"};
    app.require_subcommand(1);

    std::string default_format = "text";
    if (const char* env = std::getenv("COMPOSITAE_FORMAT")) default_format = env;
    std::string format = default_format;
    const auto format_check = CLI::IsMember({"json", "text"});

    std::string expr, at = "0";
    std::size_t order = 5;
    bool symbolic = false, no_check = false;

    auto* bell = app.add_subcommand("bell", "Bell polynomials B(n,k) of an expression at a point");
    auto* comp = app.add_subcommand("composita", "composita Y(n,k) of an expression at a point");
    for (auto* sc : {bell, comp}) {
        sc->add_option("--expr", expr, "expression, e.g. \"comp(recip, ln)\"")->required();
        sc->add_option("--n", order, "largest n")->check(CLI::Range(std::size_t{1}, kMaxOrder));
        sc->add_option("--at", at, "evaluation point: integer, p/q or decimal")->capture_default_str();
        sc->add_option("--format", format, "json or text")->check(format_check);
        sc->add_flag("--no-check", no_check, "skip the series-oracle cross-check");
    }
    bell->add_flag("--symbolic", symbolic, "polynomials in y1..yn (requires --expr generic)");

    std::string outer, inner = "identity";
    auto* deriv = app.add_subcommand("derivative", "n-th derivative of outer(inner(x)) by Faa di Bruno");
    deriv->add_option("--outer", outer, "outer expression")->required();
    deriv->add_option("--inner", inner, "inner expression")->capture_default_str();
    deriv->add_option("--n", order, "derivative order")->required()->check(CLI::Range(std::size_t{1}, kMaxDerivativeOrder));
    deriv->add_option("--at", at, "evaluation point")->capture_default_str();
    deriv->add_option("--format", format, "json or text")->check(format_check);

    std::string suite = "all", csv;
    std::uint64_t seed = 1;
    auto* verify = app.add_subcommand("verify", "run the conformance suites");
    verify->add_option("--suite", suite, "paper-tables, oracles or all")
        ->check(CLI::IsMember({"paper-tables", "oracles", "all"}))
        ->capture_default_str();
    verify->add_option("--seed", seed, "seed for the randomized oracle checks")->capture_default_str();
    verify->add_option("--csv", csv, "also write the report as CSV to this file");
    verify->add_option("--format", format, "json or text")->check(format_check);

    auto* render = app.add_subcommand("render", "render a JSON document from stdin as text");
    render->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kUsage;
    }
    if (format != "json" && format != "text") {
        std::cerr << "usage error: COMPOSITAE_FORMAT must be json or text\n";
        return kUsage;
    }

    try {
        if (*bell && symbolic) {
            if (expr != "generic") throw UsageError("--symbolic requires --expr generic");
            emit(symbolic_bell(order), format);
        } else if (*bell || *comp) {
            if (expr == "generic") throw UsageError("--expr generic requires --symbolic");
            emit(numeric_triangle(*bell ? "bell" : "composita", expr, order, at, !no_check), format);
        } else if (*deriv) {
            emit(derivative(outer, inner, order, at), format);
        } else if (*verify) {
            std::vector<ConformanceRecord> records;
            if (suite != "oracles") records = run_table_suite();
            if (suite != "paper-tables") {
                auto more = run_oracle_suite(seed);
                records.insert(records.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
            }
            emit(report::conformance_document(suite, seed, records), format);
            if (!csv.empty()) {
                std::ofstream os(csv);
                if (!os) throw Failure("error", "cannot write " + csv);
                os << report::conformance_csv(records);
            }
            const auto s = summarize(records);
            if (s.failed) {
                std::cerr << "conformance failure: " << s.failed << " of " << s.total << " records failed\n";
                return kFailure;
            }
        } else if (*render) {
            const std::string input{std::istreambuf_iterator<char>(std::cin), {}};
            std::cout << report::render_text(report::json::parse(input));
        }
    } catch (const UsageError& ex) {
        std::cerr << "usage error: " << ex.what() << '\n';
        return kUsage;
    } catch (const ParseError& ex) {
        std::cerr << "parse error: " << ex.what() << '\n';
        return kUsage;
    } catch (const report::json::exception& ex) {
        std::cerr << "usage error: bad JSON document: " << ex.what() << '\n';
        return kUsage;
    } catch (const DomainError& ex) {
        std::cerr << "domain error: " << ex.what() << '\n';
        return kFailure;
    } catch (const NotInvertible& ex) {
        std::cerr << "not invertible: " << ex.what() << '\n';
        return kFailure;
    } catch (const Failure& ex) {
        std::cerr << ex.what() << '\n';
        return kFailure;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return kFailure;
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
