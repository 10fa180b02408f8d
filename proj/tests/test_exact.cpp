#include <gtest/gtest.h>

#include <random>
#include <thread>

#include "compositae/exact.hpp"

using namespace compositae;

// Frozen values from an independent CAS.
TEST(Comb, FactorialAndBinomial) {
    EXPECT_EQ(factorial(0), 1);
    EXPECT_EQ(factorial(20), Integer("2432902008176640000"));
    EXPECT_EQ(factorial(25), Integer("15511210043330985984000000"));
    EXPECT_EQ(binomial(10, 3), 120);
    EXPECT_EQ(binomial(10, 11), 0);
    EXPECT_EQ(binomial(10, -1), 0);
    EXPECT_EQ(binomial(-3, 4), 15);
    EXPECT_EQ(binomial(-1, 5), -1);
    EXPECT_EQ(binomial(60, 30), Integer("118264581564861424"));
}

TEST(Comb, StirlingFirstKindSigned) {
    const long row10[] = {0, -362880, 1026576, -1172700, 723680, -269325, 63273, -9450, 870, -45, 1};
    for (long k = 0; k <= 10; ++k) EXPECT_EQ(stirling1_signed(10, k), row10[k]) << k;
    for (long k = 0; k <= 10; ++k) EXPECT_EQ(stirling1_unsigned(10, k), abs(Integer(row10[k])));
    EXPECT_EQ(stirling1_signed(0, 0), 1);
    EXPECT_EQ(stirling1_signed(3, 5), 0);
}

TEST(Comb, StirlingSecondKind) {
    const long row10[] = {0, 1, 511, 9330, 34105, 42525, 22827, 5880, 750, 45, 1};
    for (long k = 0; k <= 10; ++k) EXPECT_EQ(stirling2(10, k), row10[k]) << k;
    EXPECT_EQ(stirling2(0, 0), 1);
    EXPECT_EQ(stirling2(4, 0), 0);
}

TEST(Comb, CatalanAndBell) {
    const long cat[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786, 208012, 742900, 2674440};
    for (long i = 0; i < 15; ++i) EXPECT_EQ(catalan(i), cat[i]);
    const long bell[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975, 678570, 4213597, 27644437, 190899322};
    for (long i = 0; i < 15; ++i) EXPECT_EQ(bell_number(i), bell[i]);
}

TEST(Comb, Multinomial) {
    const long parts[] = {2, 1, 3};
    EXPECT_EQ(multinomial(6, parts), 60);
}

TEST(Comb, ConcurrentReadersAgree) {
    std::vector<Integer> expected;
    for (long n = 0; n < 60; ++n) expected.push_back(stirling2(n, n / 2) + binomial(n, n / 3) + factorial(n));
    std::vector<std::thread> pool;
    std::atomic<int> bad{0};
    for (int t = 0; t < 8; ++t)
        pool.emplace_back([&, t] {
            std::mt19937 rng(t);
            for (int i = 0; i < 2000; ++i) {
                const long n = static_cast<long>(rng() % 60);
                if (stirling2(n, n / 2) + binomial(n, n / 3) + factorial(n) != expected[n]) ++bad;
                (void)stirling1_signed(n + 60, 3);  // forces growth while others read
            }
        });
    for (auto& th : pool) th.join();
    EXPECT_EQ(bad.load(), 0);
}

TEST(Rationals, ParseForms) {
    EXPECT_EQ(parse_rational("3/2"), make_rational(3, 2));
    EXPECT_EQ(parse_rational("-6/4"), make_rational(-3, 2));
    EXPECT_EQ(parse_rational("7"), Rational(7));
    EXPECT_EQ(parse_rational("-0.25"), make_rational(-1, 4));
    EXPECT_EQ(parse_rational("1e-3"), make_rational(1, 1000));
    EXPECT_EQ(parse_rational("2.5e2"), Rational(250));
    EXPECT_EQ(parse_rational("0.7"), make_rational(7, 10));
    EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
    EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
    EXPECT_THROW(parse_rational(""), std::invalid_argument);
}

TEST(Rationals, Strings) {
    EXPECT_EQ(to_string(make_rational(-6, 4)), "-3/2");
    EXPECT_EQ(to_string(Rational(5)), "5");
    EXPECT_EQ(to_decimal_string(-0.0), "0");
    EXPECT_EQ(to_decimal_string(0.1), "0.1");
    EXPECT_EQ(to_decimal_string(1.0 / 3), "0.333333333333333");
    EXPECT_EQ(pow(make_rational(2, 3), -2), make_rational(9, 4));
    EXPECT_THROW(pow(Rational(0), -1), std::domain_error);
}
