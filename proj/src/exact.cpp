#include "compositae/exact.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <algorithm>
#include <stdexcept>

namespace compositae {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Integer parse_signed_integer(std::string_view s, std::string_view whole) {
    bool neg = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s))
        throw std::invalid_argument("malformed number: '" + std::string(whole) + "'");
    Integer z(std::string(s), 10);
    return neg ? Integer(-z) : z;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    const std::string_view whole = text;
    if (text.empty()) throw std::invalid_argument("empty number");

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Integer num = parse_signed_integer(text.substr(0, slash), whole);
        Integer den = parse_signed_integer(text.substr(slash + 1), whole);
        if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(whole) + "'");
        return make_rational(num, den);
    }

    bool neg = false;
    if (text.front() == '+' || text.front() == '-') {
        neg = text.front() == '-';
        text.remove_prefix(1);
    }
    long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
        Integer ez = parse_signed_integer(text.substr(e + 1), whole);
        if (!ez.fits_slong_p() || abs(ez) > 10000)
            throw std::invalid_argument("exponent out of range: '" + std::string(whole) + "'");
        exponent = ez.get_si();
        text = text.substr(0, e);
    }
    std::string digits;
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view ip = text.substr(0, dot), fp = text.substr(dot + 1);
        if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
            throw std::invalid_argument("malformed number: '" + std::string(whole) + "'");
        digits = std::string(ip) + std::string(fp);
        exponent -= static_cast<long>(fp.size());
    } else {
        if (!all_digits(text)) throw std::invalid_argument("malformed number: '" + std::string(whole) + "'");
        digits = std::string(text);
    }
    if (digits.empty()) digits = "0";
    Rational q{Integer(digits, 10)};
    Integer ten_pow;
    mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
    q = exponent >= 0 ? Rational(q * ten_pow) : Rational(q / ten_pow);
    q.canonicalize();
    return neg ? Rational(-q) : q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }
std::string to_string(const Integer& z) { return z.get_str(10); }

std::string to_decimal_string(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    std::string s(buf);
    if (s == "-0") s = "0";
    return s;
}

double to_double(const Rational& q) { return q.get_d(); }

Rational pow(const Rational& base, long exponent) {
    if (exponent < 0) {
        if (base == 0) throw std::domain_error("zero raised to a negative power");
        return pow(Rational(1 / base), -exponent);
    }
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return r;
}

// ---------------------------------------------------------------------------
// CombTables

void CombTables::grow(long n) {
    std::unique_lock lock(mutex_);
    if (n <= size_) return;
    for (long m = size_ + 1; m <= n; ++m) {
        factorial_.push_back(m == 0 ? Integer(1) : Integer(factorial_[m - 1] * m));

        std::vector<Integer> b(m + 1), s1(m + 1), s2(m + 1);
        b[0] = b[m] = 1;
        for (long k = 1; k < m; ++k) b[k] = binomial_[m - 1][k - 1] + binomial_[m - 1][k];
        if (m == 0) {
            s1[0] = s2[0] = 1;
        } else {
            // s(m,k) = s(m-1,k-1) - (m-1) s(m-1,k);  S2(m,k) = S2(m-1,k-1) + k S2(m-1,k)
            const auto& p1 = stirling1_[m - 1];
            const auto& p2 = stirling2_[m - 1];
            for (long k = 1; k <= m; ++k) {
                Integer a1 = p1[k - 1], a2 = p2[k - 1];
                if (k <= m - 1) {
                    a1 -= (m - 1) * p1[k];
                    a2 += k * p2[k];
                }
                s1[k] = a1;
                s2[k] = a2;
            }
        }
        binomial_.push_back(std::move(b));
        stirling1_.push_back(std::move(s1));
        stirling2_.push_back(std::move(s2));
        catalan_.push_back(0);
    }
    size_ = n;
    // Cat(m) = C(2m, m)/(m+1) needs rows up to 2m, so fill only what the rows allow.
    for (long m = 0; 2 * m <= n; ++m) catalan_[m] = binomial_[2 * m][m] / (m + 1);
}

template <class Read>
Integer CombTables::read(long need, Read&& get) {
    {
        std::shared_lock lock(mutex_);
        if (need <= size_) return get();
    }
    grow(std::max<long>(need, 2 * size_ + 2));
    std::shared_lock lock(mutex_);
    return get();
}

Integer CombTables::factorial(long n) {
    if (n < 0) throw std::domain_error("factorial of a negative number");
    return read(n, [&] { return factorial_[n]; });
}

Integer CombTables::binomial_table(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    return read(n, [&] { return binomial_[n][k]; });
}

Integer CombTables::stirling1_signed(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    return read(n, [&] { return stirling1_[n][k]; });
}

Integer CombTables::stirling1_unsigned(long n, long k) { return abs(stirling1_signed(n, k)); }

Integer CombTables::stirling2(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    return read(n, [&] { return stirling2_[n][k]; });
}

Integer CombTables::catalan(long n) {
    if (n < 0) return 0;
    return read(2 * n, [&] { return catalan_[n]; });
}

CombTables& comb() {
    static CombTables tables;
    return tables;
}

Integer factorial(long n) { return comb().factorial(n); }

Integer binomial(long n, long k) {
    if (k < 0) return 0;
    if (n >= 0) return comb().binomial_table(n, k);
    // C(n,k) = (-1)^k C(k-n-1, k) for negative n
    Integer c = comb().binomial_table(k - n - 1, k);
    return (k % 2 == 0) ? c : Integer(-c);
}

Integer stirling1_signed(long n, long k) { return comb().stirling1_signed(n, k); }
Integer stirling1_unsigned(long n, long k) { return comb().stirling1_unsigned(n, k); }
Integer stirling2(long n, long k) { return comb().stirling2(n, k); }
Integer catalan(long n) { return comb().catalan(n); }

Integer multinomial(long n, std::span<const long> parts) {
    long total = 0;
    for (long p : parts) {
        if (p < 0) throw std::domain_error("multinomial with a negative part");
        total += p;
    }
    if (total != n) throw std::domain_error("multinomial parts do not sum to n");
    Integer r = factorial(n);
    for (long p : parts) r /= factorial(p);
    return r;
}

Integer bell_number(long n) {
    Integer s = 0;
    for (long k = 0; k <= n; ++k) s += stirling2(n, k);
    return s;
}

}  // namespace compositae
