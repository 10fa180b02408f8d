#pragma once

// Exact scalars and the combinatorial number families used by every closed form.
//
// Integer and Rational are GMP's mpz_class / mpq_class. A Rational produced by
// any function in this library is canonical (lowest terms, positive denominator).
//
// The memo tables behind binomial/stirling/catalan are shared process-wide.
// Reads take a shared lock, growth takes an exclusive lock, so concurrent calls
// from several threads are safe.

#include <cstdint>
#include <mutex>
#include <shared_mutex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace compositae {

using Integer = mpz_class;
using Rational = mpq_class;

// Builds num/den in lowest terms. Throws std::domain_error on a zero denominator.
Rational make_rational(const Integer& num, const Integer& den = 1);

// Accepts "p", "p/q", and decimal literals such as "-0.25" or "1.5e-3".
// The conversion is exact. Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Decimal with 15 significant digits.
std::string to_decimal_string(double v);

double to_double(const Rational& q);

// Exact rational power with an integer exponent (negative exponents invert).
Rational pow(const Rational& base, long exponent);

// Lazily grown memo tables. One shared instance lives behind comb().
class CombTables {
public:
    Integer factorial(long n);
    // Pascal-table binomial for 0 <= k <= n; zero outside.
    Integer binomial_table(long n, long k);
    Integer stirling1_signed(long n, long k);
    Integer stirling1_unsigned(long n, long k);
    Integer stirling2(long n, long k);
    Integer catalan(long n);

private:
    void grow(long n);
    template <class Read>
    Integer read(long need, Read&& get);

    std::shared_mutex mutex_;
    long size_ = -1;  // tables cover indices 0..size_
    std::vector<Integer> factorial_;
    std::vector<std::vector<Integer>> binomial_;
    std::vector<std::vector<Integer>> stirling1_;  // signed
    std::vector<std::vector<Integer>> stirling2_;
    std::vector<Integer> catalan_;
};

CombTables& comb();

Integer factorial(long n);

// Generalized binomial C(n,k) = n(n-1)...(n-k+1)/k! for any integer n.
// Returns 0 when k < 0.
Integer binomial(long n, long k);

// s(n,k): k! * sum_n s(n,k) t^n/n! = ln(1+t)^k. Zero outside 0 <= k <= n.
Integer stirling1_signed(long n, long k);
// c(n,k) = |s(n,k)|, permutations of n elements with k cycles.
Integer stirling1_unsigned(long n, long k);
// S2(n,k): set partitions of an n-set into k blocks.
Integer stirling2(long n, long k);
Integer catalan(long n);
// n! / (parts[0]! ... parts[k-1]!). Requires the parts to sum to n.
Integer multinomial(long n, std::span<const long> parts);
// Bell number: sum_k S2(n,k).
Integer bell_number(long n);

}  // namespace compositae
