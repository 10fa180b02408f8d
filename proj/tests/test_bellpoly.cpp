#include <gtest/gtest.h>

#include <chrono>

#include "compositae/bellpoly.hpp"

using namespace compositae;

TEST(Compositions, LexicographicAndComplete) {
    const auto all = enumerate_compositions(5, 3);
    ASSERT_EQ(all.size(), static_cast<std::size_t>(binomial(4, 2).get_si()));
    EXPECT_EQ(all.front(), (std::vector<long>{1, 1, 3}));
    EXPECT_EQ(all.back(), (std::vector<long>{3, 1, 1}));
    for (std::size_t i = 1; i < all.size(); ++i) EXPECT_LT(all[i - 1], all[i]);
    for (long n = 1; n <= 9; ++n)
        for (long k = 1; k <= n; ++k)
            EXPECT_EQ(static_cast<long>(enumerate_compositions(n, k).size()), binomial(n - 1, k - 1).get_si());
    EXPECT_TRUE(enumerate_compositions(2, 3).empty());
}

// Row 6 from an independent CAS.
TEST(Bell, GenericRowSixFrozen) {
    const BellTriangle t = bell_generic(6);
    EXPECT_EQ(t(6, 1).str(), "y6");
    EXPECT_EQ(t(6, 2).str(), "6*y1*y5 + 15*y2*y4 + 10*y3^2");
    EXPECT_EQ(t(6, 3).str(), "15*y1^2*y4 + 60*y1*y2*y3 + 15*y2^3");
    EXPECT_EQ(t(6, 4).str(), "20*y1^3*y3 + 45*y1^2*y2^2");
    EXPECT_EQ(t(6, 5).str(), "15*y1^4*y2");
    EXPECT_EQ(t(6, 6).str(), "y1^6");
    EXPECT_EQ(t(3, 2).str(), "3*y1*y2");
}

TEST(Bell, GenericEqualsBruteForce) {
    const BellTriangle t = bell_generic(8);
    for (long n = 1; n <= 8; ++n)
        for (long k = 1; k <= n; ++k) {
            EXPECT_EQ(t(n, k), bell_bruteforce(n, k)) << n << "," << k;
            EXPECT_TRUE(t(n, k).has_integer_coefficients());
        }
}

TEST(Bell, RowInvariants) {
    const BellTriangle t = bell_generic(9);
    for (long n = 1; n <= 9; ++n)
        for (long k = 1; k <= n; ++k) {
            EXPECT_EQ(t(n, k).coefficient_sum(), Rational(stirling2(n, k)));
            EXPECT_LE(t(n, k).num_vars(), static_cast<std::size_t>(n - k + 1));
        }
}

TEST(Bell, StirlingAtOnes) {
    const std::vector<Rational> ones(10, Rational(1));
    const auto c = bell_generic(10).eval<Rational>(ones);
    for (long n = 1; n <= 10; ++n)
        for (long k = 1; k <= n; ++k) EXPECT_EQ(c(n, k), Rational(stirling2(n, k)));
    // y_i = (i-1)! gives unsigned Stirling numbers of the first kind.
    std::vector<Rational> fact;
    for (long i = 1; i <= 10; ++i) fact.push_back(Rational(factorial(i - 1)));
    const auto f = bell_generic(10).eval<Rational>(fact);
    for (long n = 1; n <= 10; ++n)
        for (long k = 1; k <= n; ++k) EXPECT_EQ(f(n, k), Rational(stirling1_unsigned(n, k)));
}

TEST(Bell, FaaDiBruno) {
    // (e^(e^x))^(n) at 0 = e * Bell number.
    const std::vector<Rational> ones(8, Rational(1));
    const auto c = bell_generic(8).eval<Rational>(ones);
    for (std::size_t n = 1; n <= 8; ++n) {
        std::vector<Rational> row;
        for (std::size_t k = 1; k <= n; ++k) row.push_back(c(n, k));
        EXPECT_EQ(faa_di_bruno<Rational>(n, ones, row), Rational(bell_number(static_cast<long>(n))));
    }
    const std::vector<Rational> short_row(2, Rational(1));
    EXPECT_THROW(faa_di_bruno<Rational>(3, ones, short_row), std::invalid_argument);
}

TEST(Bell, TenRowsQuickly) {
    const auto start = std::chrono::steady_clock::now();
    const BellTriangle t = bell_generic(10);
    EXPECT_LT(std::chrono::steady_clock::now() - start, std::chrono::seconds(30));
    EXPECT_EQ(t(10, 5), bell_bruteforce(10, 5));
}
