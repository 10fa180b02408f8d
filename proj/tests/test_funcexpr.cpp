#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <thread>

#include "compositae/catalog.hpp"
#include "compositae/errors.hpp"
#include "compositae/funcexpr.hpp"
#include "compositae/oracle.hpp"

using namespace compositae;

using K = FuncExpr::Kind;

namespace {

ParseError::Kind parse_error_kind(const std::string& text) {
    try {
        parse(text);
    } catch (const ParseError& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error for " << text;
    return ParseError::Kind::Syntax;
}

std::size_t parse_error_offset(const std::string& text) {
    try {
        parse(text);
    } catch (const ParseError& e) {
        return e.offset();
    }
    return std::string::npos;
}

ExprPtr random_expr(std::mt19937_64& rng, int depth) {
    static const char* atoms[] = {"identity", "ln", "exp", "sin", "recip", "geom", "tan", "arctan", "xexp"};
    std::uniform_int_distribution<int> pick(0, depth > 0 ? 7 : 2);
    switch (pick(rng)) {
        case 0: return FuncExpr::atom(atoms[rng() % 9]);
        case 1: return FuncExpr::atom("pow", {Rational(static_cast<long>(rng() % 5 + 1))});
        case 2: return FuncExpr::atom("scale", {make_rational(static_cast<long>(rng() % 41) - 20, 8)});
        case 3: return FuncExpr::sum(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
        case 4: return FuncExpr::prod(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
        case 5: return FuncExpr::comp(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
        case 6: return FuncExpr::inv(random_expr(rng, depth - 1));
        default: return FuncExpr::atom("poly", {Rational(1), make_rational(-3, 4), make_rational(1, 5)});
    }
}

}  // namespace

TEST(Parse, Examples) {
    const auto a = parse("comp(recip, ln)");
    ASSERT_EQ(a->kind, K::Comp);
    EXPECT_EQ(a->args[0]->name, "recip");
    EXPECT_EQ(a->args[1]->name, "ln");
    const auto b = parse("pow:3");
    EXPECT_EQ(*b, *FuncExpr::atom("pow", {Rational(3)}));
    const auto c = parse("sum(pow:2, ln)");
    EXPECT_EQ(*c, *FuncExpr::sum(FuncExpr::atom("pow", {Rational(2)}), FuncExpr::atom("ln")));
    EXPECT_EQ(*parse("  inv( pow : 2 )  "), *FuncExpr::inv(FuncExpr::atom("pow", {Rational(2)})));
    EXPECT_EQ(parse("scale:-0.25")->params[0], make_rational(-1, 4));
    EXPECT_EQ(parse("poly:1:2.5e1")->params[1], Rational(25));
}

TEST(Parse, ErrorCategories) {
    EXPECT_EQ(parse_error_kind("comp(recip ln)"), ParseError::Kind::Syntax);
    EXPECT_EQ(parse_error_kind("sum(ln)"), ParseError::Kind::Syntax);
    EXPECT_EQ(parse_error_kind("ln)"), ParseError::Kind::Syntax);
    EXPECT_EQ(parse_error_kind(""), ParseError::Kind::Syntax);
    EXPECT_EQ(parse_error_kind("Sin"), ParseError::Kind::Syntax);
    EXPECT_EQ(parse_error_kind("pow:"), ParseError::Kind::Syntax);
    EXPECT_EQ(parse_error_kind("cosh"), ParseError::Kind::UnknownAtom);
    EXPECT_EQ(parse_error_kind("pow"), ParseError::Kind::Arity);
    EXPECT_EQ(parse_error_kind("ln:2"), ParseError::Kind::Arity);
    EXPECT_EQ(parse_error_kind("pow:2.5"), ParseError::Kind::InvalidParameter);
    EXPECT_EQ(parse_error_kind("pow:0"), ParseError::Kind::InvalidParameter);
}

TEST(Parse, ByteOffsets) {
    EXPECT_EQ(parse_error_offset("comp(recip ln)"), 11u);
    EXPECT_EQ(parse_error_offset("sum(ln, cosh)"), 8u);
    EXPECT_EQ(parse_error_offset("inv(pow)"), 4u);
    EXPECT_EQ(parse_error_offset("ln  x"), 4u);
}

TEST(Parse, NodeLimit) {
    std::string deep = "identity";
    for (int i = 0; i < 63; ++i) deep = "inv(" + deep + ")";
    EXPECT_EQ(parse(deep)->node_count(), 64u);
    EXPECT_EQ(parse_error_kind("inv(" + deep + ")"), ParseError::Kind::TooLarge);
    EXPECT_THROW(parse("sum(ln, ln)", 2), ParseError);
}

TEST(Parse, PrintRoundTrips) {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 300; ++i) {
        const auto e = random_expr(rng, 4);
        const std::string text = print(*e);
        const auto back = parse(text);
        EXPECT_EQ(*back, *e) << text;
        EXPECT_EQ(print(*back), text);
    }
    EXPECT_EQ(print(*parse("scale:-2.50")), "scale:-2.5");
    EXPECT_EQ(decimal_string(make_rational(1, 3)), "1/3");
    EXPECT_EQ(decimal_string(make_rational(-3, 40)), "-0.075");
}

TEST(Build, IdentityAndInverseOfSquare) {
    const Built id = build(*parse("identity"), Point::of(make_rational(7, 3)), 5);
    ASSERT_TRUE(id.exact);
    EXPECT_EQ(*id.exact, Composita<Rational>::identity(5));

    const Built r = build(*parse("inv(pow:2)"), Point::of(Rational(4)), 5);
    ASSERT_TRUE(r.exact);
    EXPECT_EQ(*r.exact, catalog::sqrt_catalan(Rational(4), Rational(2), 5));
    EXPECT_EQ((*r.exact)(1, 1), make_rational(1, 4));
    EXPECT_EQ(*r.value.exact, 2);
}

TEST(Build, Invariants) {
    struct Case {
        const char* a;
        const char* x;
    };
    const Case cases[] = {{"ln", "2"}, {"sin", "0.4"}, {"xexp", "0.3"}, {"pow:3", "-1/2"}, {"tan", "0.2"},
                          {"arctan", "3"}, {"exp", "0"}, {"geom", "1/5"}, {"sqrt", "9/4"}};
    for (const auto& c : cases) {
        const auto a = parse(c.a);
        const Point x = Point::of(parse_rational(c.x));
        const auto base = build(*a, x, 6);
        const auto id = FuncExpr::atom("identity");
        EXPECT_TRUE(equal(build(*FuncExpr::comp(a, id), x, 6).approx, base.approx)) << c.a;
        EXPECT_TRUE(equal(build(*FuncExpr::comp(id, a), x, 6).approx, base.approx)) << c.a;
        const auto b = parse("sum(exp, pow:2)");
        EXPECT_TRUE(equal(build(*FuncExpr::sum(a, b), x, 6).approx, build(*FuncExpr::sum(b, a), x, 6).approx));
        // comp(inv(a), a) is the identity at x.
        const auto round = build(*FuncExpr::comp(FuncExpr::inv(a), a), x, 6);
        EXPECT_TRUE(delta_check(round.approx, Composita<double>::identity(6))) << c.a;
        EXPECT_TRUE(equal(base.approx, from_series(oracle_series(*a, x, 6), 6), 1e-9)) << c.a;
    }
}

TEST(Build, ExactWhereverPossible) {
    EXPECT_TRUE(build(*parse("sum(pow:2, ln)"), Point::of(Rational(2)), 5).exact);
    EXPECT_TRUE(build(*parse("comp(geom, poly:0:1:1)"), Point::of(make_rational(1, 4)), 5).exact);
    EXPECT_TRUE(build(*parse("comp(exp, sin)"), Point::of(Rational(0)), 5).exact);
    EXPECT_FALSE(build(*parse("comp(recip, ln)"), Point::of(Rational(3)), 5).exact);
    EXPECT_FALSE(build(*parse("sin"), Point::of(0.5), 5).exact);
}

TEST(Build, CotangentAndNewtonInverse) {
    const Point x = Point::of(0.7);
    const auto cot = build(*parse("comp(recip, tan)"), x, 6);
    EXPECT_NEAR(cot.approx(1, 1), -1.0 / std::pow(std::sin(0.7), 2), 1e-12);
    // y + e^y = 1 has y = 0; the inverse's derivative there is 1/2.
    const auto inv = build(*parse("inv(sum(identity, exp))"), Point::of(Rational(1)), 6);
    EXPECT_NEAR(inv.value.approx, 0.0, 1e-14);
    EXPECT_NEAR(inv.approx(1, 1), 0.5, 1e-12);
    EXPECT_TRUE(equal(inv.approx, from_series(oracle_series(*parse("inv(sum(identity, exp))"), Point::of(1.0), 6), 6)));
}

TEST(Build, Errors) {
    try {
        build(*parse("sum(identity, ln)"), Point::of(Rational(-1)), 4);
        FAIL();
    } catch (const DomainError& e) {
        EXPECT_EQ(e.atom(), "ln");
    }
    EXPECT_THROW(build(*parse("inv(pow:2)"), Point::of(Rational(0)), 4), NotInvertible);
    EXPECT_THROW(build(*parse("inv(pow:2)"), Point::of(Rational(-1)), 4), std::exception);
    EXPECT_THROW(build(*parse("ln"), Point::of(Rational(2)), 0), std::invalid_argument);
}

TEST(Build, ConcurrentUse) {
    const auto e = parse("comp(exp, sum(sin, pow:2))");
    const auto want = build(*e, Point::of(make_rational(1, 3)), 7).approx;
    std::vector<std::thread> pool;
    std::atomic<int> bad{0};
    for (int t = 0; t < 6; ++t)
        pool.emplace_back([&] {
            for (int i = 0; i < 20; ++i) {
                const auto mine = parse(print(*e));
                if (!equal(build(*mine, Point::of(make_rational(1, 3)), 7).approx, want)) ++bad;
            }
        });
    for (auto& th : pool) th.join();
    EXPECT_EQ(bad.load(), 0);
}
