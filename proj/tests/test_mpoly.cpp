#include <gtest/gtest.h>

#include "compositae/mpoly.hpp"

using namespace compositae;

namespace {
MPoly y(std::size_t i) { return MPoly::variable(i); }
}  // namespace

TEST(MPoly, PrintsGradedLex) {
    const MPoly p = Rational(4) * y(1) * y(3) + Rational(3) * y(2).pow(2);
    EXPECT_EQ(p.str(), "4*y1*y3 + 3*y2^2");
    EXPECT_EQ((make_rational(-1, 2) * y(1).pow(2)).str(), "-1/2*y1^2");
    EXPECT_EQ(MPoly().str(), "0");
    EXPECT_EQ((y(3) + y(1).pow(3) + MPoly(Rational(2))).str(), "y1^3 + y3 + 2");
}

TEST(MPoly, RingLaws) {
    const MPoly a = y(1) + Rational(2) * y(2), b = y(1) - y(3);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) * (a + b), a * a + Rational(2) * a * b + b * b);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(a.pow(0), MPoly(Rational(1)));
    EXPECT_EQ(a.pow(3), a * a * a);
}

TEST(MPoly, EvalAndSubstitute) {
    const MPoly p = Rational(3) * y(1) * y(2) + y(3);
    const Rational pt[] = {Rational(2), make_rational(1, 3), Rational(-5)};
    EXPECT_EQ(p.eval(std::span<const Rational>(pt)), Rational(-3));
    const double dp[] = {2.0, 0.5, 1.0};
    EXPECT_DOUBLE_EQ(p.eval(std::span<const double>(dp)), 4.0);
    const Rational short_pt[] = {Rational(1)};
    EXPECT_THROW(p.eval(std::span<const Rational>(short_pt)), UnboundIndeterminate);
    const MPoly subs[] = {y(1) + y(2), MPoly(Rational(2)), y(1)};
    EXPECT_EQ(p.substitute(std::span<const MPoly>(subs)), Rational(7) * y(1) + Rational(6) * y(2));
}

TEST(MPoly, Queries) {
    const MPoly p = Rational(6) * y(1) * y(5) + Rational(15) * y(2) * y(4) + Rational(10) * y(3).pow(2);
    EXPECT_EQ(p.num_vars(), 5u);
    EXPECT_TRUE(p.has_integer_coefficients());
    EXPECT_EQ(p.coefficient_sum(), 31);
    EXPECT_FALSE((make_rational(1, 2) * y(1)).has_integer_coefficients());
    EXPECT_TRUE(MPoly(Rational(3)).is_constant());
}
