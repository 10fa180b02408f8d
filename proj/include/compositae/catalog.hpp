#pragma once

// Closed-form compositae of concrete functions, Y(n,k) of y(x+z) - y(x).
//
// Algebraic entries are templates over the coefficient ring so they run
// exactly over Rational. Entries that need an irrational quantity at the
// evaluation point (sqrt x, ln x, e^x, tan x, ...) take that quantity as an
// argument; the exact pipeline is available whenever it happens to be rational.
//
// Stirling numbers of the first kind appear signed everywhere below: both the
// ln(1+z/x) and arctan(z) expansions need s(n,k), not |s(n,k)|.

#include <cstddef>
#include <vector>

#include "compositae/composita.hpp"
#include "compositae/errors.hpp"

namespace compositae::catalog {

namespace detail {

template <class R>
R from_q(const Rational& q) { return Ring<R>::from_rational(q); }

template <class R>
R from_z(const Integer& z) { return Ring<R>::from_rational(Rational(z)); }

// x^e, e may be negative.
template <class R>
R ipow(const R& x, long e) {
    if (e < 0) {
        auto inv = Ring<R>::inverse(x);
        if (!inv) throw std::domain_error("negative power of a non-invertible value");
        return ipow(*inv, -e);
    }
    R r = Ring<R>::one(), b = x;
    while (e > 0) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e > 0) b = b * b;
    }
    return r;
}

inline long sgn(long e) { return (e % 2 == 0) ? 1 : -1; }

// Precomputed powers base^0..base^n.
template <class R>
std::vector<R> powers(const R& base, std::size_t n) {
    std::vector<R> p(n + 1, Ring<R>::one());
    for (std::size_t i = 1; i <= n; ++i) p[i] = p[i - 1] * base;
    return p;
}

inline long L(std::size_t v) { return static_cast<long>(v); }

}  // namespace detail

// a z (the identity for a = 1): a^n on the diagonal.
template <class R>
Composita<R> scale(const R& a, std::size_t N) {
    return scaled(Composita<R>::identity(N), a);
}

// a z + b z^2:  C(k, n-k) a^(2k-n) b^(n-k).
template <class R>
Composita<R> quad(const R& a, const R& b, std::size_t N) {
    using namespace detail;
    const auto ap = powers(a, N), bp = powers(b, N);
    Composita<R> c(N);
    for (std::size_t n = 1; n <= N; ++n)
        for (std::size_t k = 1; k <= n; ++k) {
            if (2 * k < n) continue;
            c(n, k) = from_z<R>(binomial(L(k), L(n - k))) * ap[2 * k - n] * bp[n - k];
        }
    return c;
}

// a z + b z^2 + c z^3:
// sum_j C(k,j) C(j, n-k-j) a^(k-j) b^(2j+k-n) c^(n-k-j).
template <class R>
Composita<R> cubic(const R& a, const R& b, const R& c3, std::size_t N) {
    using namespace detail;
    const auto ap = powers(a, N), bp = powers(b, 2 * N), cp = powers(c3, N);
    Composita<R> c(N);
    for (std::size_t n = 1; n <= N; ++n)
        for (std::size_t k = 1; k <= n; ++k) {
            R acc = Ring<R>::zero();
            for (long j = 0; j <= L(k); ++j) {
                const long ce = L(n) - L(k) - j, be = 2 * j + L(k) - L(n);
                if (ce < 0 || be < 0) continue;
                const Integer coeff = binomial(L(k), j) * binomial(j, ce);
                if (coeff == 0) continue;
                acc = acc + from_z<R>(coeff) * ap[static_cast<std::size_t>(L(k) - j)] *
                                bp[static_cast<std::size_t>(be)] * cp[static_cast<std::size_t>(ce)];
            }
            c(n, k) = acc;
        }
    return c;
}

// (x+z)^m - x^m:  x^(km-n) sum_j C(k,j) C(jm,n) (-1)^(k-j).
// Entries with km < n vanish, so x = 0 is fine.
template <class R>
Composita<R> pow_m(const R& x, long m, std::size_t N) {
    using namespace detail;
    if (m < 1) throw std::invalid_argument("pow_m: exponent must be positive");
    Composita<R> c(N);
    for (std::size_t n = 1; n <= N; ++n)
        for (std::size_t k = 1; k <= n; ++k) {
            Integer s = 0;
            for (long j = 0; j <= L(k); ++j) s += sgn(L(k) - j) * binomial(L(k), j) * binomial(j * m, L(n));
            if (s == 0) continue;
            c(n, k) = from_z<R>(s) * ipow(x, L(k) * m - L(n));
        }
    return c;
}

// (x+z)^(-m) - x^(-m):  (sum_{j=1}^k C(k,j) (-1)^(n+k-j) C(n+jm-1, jm-1)) x^(-n-km).
template <class R>
Composita<R> neg_pow_m(const R& x, long m, std::size_t N) {
    using namespace detail;
    if (m < 1) throw std::invalid_argument("neg_pow_m: exponent must be positive");
    if (Ring<R>::is_zero(x)) throw DomainError("npow", "x must be nonzero");
    Composita<R> c(N);
    for (std::size_t n = 1; n <= N; ++n)
        for (std::size_t k = 1; k <= n; ++k) {
            Integer s = 0;
            for (long j = 1; j <= L(k); ++j)
                s += sgn(L(n) + L(k) - j) * binomial(L(k), j) * binomial(L(n) + j * m - 1, j * m - 1);
            c(n, k) = from_z<R>(s) * ipow(x, -L(n) - L(k) * m);
        }
    return c;
}

// 1/(x+z) - 1/x:  C(n-1,k-1) (-1)^n x^(-n-k).
template <class R>
Composita<R> recip(const R& x, std::size_t N) {
    using namespace detail;
    if (Ring<R>::is_zero(x)) throw DomainError("recip", "x must be nonzero");
    Composita<R> c(N);
    for (std::size_t n = 1; n <= N; ++n)
        for (std::size_t k = 1; k <= n; ++k)
            c(n, k) = from_z<R>(sgn(L(n)) * binomial(L(n) - 1, L(k) - 1)) * ipow(x, -L(n) - L(k));
    return c;
}

// 1/(1-x-z) - 1/(1-x):  C(n-1,k-1) (1-x)^(-n-k).
template <class R>
Composita<R> geometric(const R& x, std::size_t N) {
    using namespace detail;
    const R w = Ring<R>::one() - x;
    if (Ring<R>::is_zero(w)) throw DomainError("geom", "x must differ from 1");
    Composita<R> c(N);
    for (std::size_t n = 1; n <= N; ++n)
        for (std::size_t k = 1; k <= n; ++k)
            c(n, k) = from_z<R>(binomial(L(n) - 1, L(k) - 1)) * ipow(w, -L(n) - L(k));
    return c;
}

// ln(1 + z/x):  k!/n! s(n,k) x^(-n), s signed.
template <class R>
Composita<R> log_shift(const R& x, std::size_t N) {
    using namespace detail;
    if (Ring<R>::is_zero(x)) throw DomainError("ln", "x must be positive");
    Composita<R> c(N);
    for (std::size_t n = 1; n <= N; ++n)
        for (std::size_t k = 1; k <= n; ++k)
            c(n, k) = from_q<R>(make_rational(factorial(L(k)) * stirling1_signed(L(n), L(k)), factorial(L(n)))) *
                      ipow(x, -L(n));
    return c;
}

// e^x (e^z - 1):  e^(kx) k!/n! S2(n,k). Takes ex = e^x.
template <class R>
Composita<R> exp_shift(const R& ex, std::size_t N) {
    using namespace detail;
    const auto ep = powers(ex, N);
    Composita<R> c(N);
    for (std::size_t n = 1; n <= N; ++n)
        for (std::size_t k = 1; k <= n; ++k)
            c(n, k) = from_q<R>(make_rational(factorial(L(k)) * stirling2(L(n), L(k)), factorial(L(n)))) * ep[k];
    return c;
}

// Catalan form for sqrt(x+z) - sqrt(x) without the x^(-n) factor:
// (k/n) C(2n-k-1, n-1) (-1)^(n-k) root^k 2^k 4^(-n).
// This does NOT match the true expansion unless x = 1; it is kept so a
// regression test can pin down that the factor is required.
template <class R>
Composita<R> sqrt_catalan_as_printed(const R& root, std::size_t N) {
    using namespace detail;
    Composita<R> c(N);
    for (std::size_t n = 1; n <= N; ++n)
        for (std::size_t k = 1; k <= n; ++k) {
            const Rational q = make_rational(sgn(L(n) - L(k)) * L(k) * binomial(2 * L(n) - L(k) - 1, L(n) - 1) *
                                                 (Integer(1) << static_cast<mp_bitcnt_t>(k)),
                                             L(n) * (Integer(1) << static_cast<mp_bitcnt_t>(2 * n)));
            c(n, k) = from_q<R>(q) * ipow(root, L(k));
        }
    return c;
}

// sqrt(x+z) - sqrt(x) with root = sqrt(x):
// (k/n) C(2n-k-1, n-1) (-1)^(n-k) root^k 2^k 4^(-n) x^(-n).
template <class R>
Composita<R> sqrt_catalan(const R& x, const R& root, std::size_t N) {
    using namespace detail;
    if (Ring<R>::is_zero(x)) throw DomainError("sqrt", "x must be positive");
    Composita<R> c = sqrt_catalan_as_printed(root, N);
    for (std::size_t n = 1; n <= N; ++n) {
        const R xn = ipow(x, -L(n));
        for (std::size_t k = 1; k <= n; ++k) c(n, k) = c(n, k) * xn;
    }
    return c;
}

// 1/sqrt(x+z) - 1/sqrt(x) with root = sqrt(x):
// (-1)^n root^m 4^(-n) x^(-n-m) sum_{k=m}^n (k/n) C(2n-k-1, n-1) 2^k C(k-1, m-1).
template <class R>
Composita<R> rsqrt(const R& x, const R& root, std::size_t N) {
    using namespace detail;
    if (Ring<R>::is_zero(x)) throw DomainError("rsqrt", "x must be positive");
    Composita<R> c(N);
    for (std::size_t n = 1; n <= N; ++n)
        for (std::size_t m = 1; m <= n; ++m) {
            Rational s = 0;
            for (long k = L(m); k <= L(n); ++k)
                s += make_rational(k * binomial(2 * L(n) - k - 1, L(n) - 1) * (Integer(1) << static_cast<mp_bitcnt_t>(k)) *
                                       binomial(k - 1, L(m) - 1),
                                   L(n));
            s *= make_rational(sgn(L(n)), Integer(1) << static_cast<mp_bitcnt_t>(2 * n));
            c(n, m) = from_q<R>(s) * ipow(root, L(m)) * ipow(x, -L(n) - L(m));
        }
    return c;
}

// cbrt(x+z) - cbrt(x) with root = cbrt(x):
//   n = m:  root^m 3^(-n) x^(-n)
//   n > m:  root^m (m/n) sum_{k=1}^{n-m} C(k, n-m-k) 3^(-2n+m+k) (-1)^k C(n+k-1, n-1) x^(-n)
// The diagonal carries x^(-n) as well; without it Y(1,1) would be root/3
// instead of the derivative 1/(3 root^2).
template <class R>
Composita<R> cbrt(const R& x, const R& root, std::size_t N) {
    using namespace detail;
    if (Ring<R>::is_zero(x)) throw DomainError("cbrt", "x must be positive");
    Composita<R> c(N);
    for (std::size_t n = 1; n <= N; ++n) {
        const R xn = ipow(x, -L(n));
        for (std::size_t m = 1; m <= n; ++m) {
            Rational s = 0;
            if (n == m) {
                s = pow(make_rational(1, 3), L(n));
            } else {
                for (long k = 1; k <= L(n) - L(m); ++k)
                    s += Rational(Integer(sgn(k) * binomial(k, L(n) - L(m) - k) * binomial(L(n) + k - 1, L(n) - 1))) *
                         pow(Rational(3), -2 * L(n) + L(m) + k);
                s *= make_rational(L(m), L(n));
            }
            c(n, m) = from_q<R>(s) * ipow(root, L(m)) * xn;
        }
    }
    return c;
}

// coef * sin z:
// coef^k (1 + (-1)^(n-k)) / (2^k n!) sum_{m=0}^{k/2} C(k,m) (2m-k)^n (-1)^((n+k)/2 - m).
template <class R>
Composita<R> sin_z(const R& coef, std::size_t N) {
    using namespace detail;
    const auto cp = powers(coef, N);
    Composita<R> c(N);
    for (std::size_t n = 1; n <= N; ++n)
        for (std::size_t k = 1; k <= n; ++k) {
            if ((n - k) % 2 != 0) continue;
            Integer s = 0;
            for (long m = 0; 2 * m <= L(k); ++m) {
                Integer p;
                const long base = 2 * m - L(k);
                mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(std::labs(base)), n);
                if (base < 0 && n % 2 == 1) p = -p;
                s += sgn((L(n) + L(k)) / 2 - m) * binomial(L(k), m) * p;
            }
            const Rational q = make_rational(2 * s, (Integer(1) << static_cast<mp_bitcnt_t>(k)) * factorial(L(n)));
            c(n, k) = from_q<R>(q) * cp[k];
        }
    return c;
}

// coef * (cos z - 1):
// coef^k ((-1)^n + 1)/n! sum_{j=1}^k (-1)^(n/2+k-j) 2^(-j) C(k,j) sum_{i=0}^{(j-1)/2} (j-2i)^n C(j,i).
template <class R>
Composita<R> cos_z_minus_one(const R& coef, std::size_t N) {
    using namespace detail;
    const auto cp = powers(coef, N);
    Composita<R> c(N);
    for (std::size_t n = 2; n <= N; n += 2)
        for (std::size_t k = 1; k <= n; ++k) {
            Rational s = 0;
            for (long j = 1; j <= L(k); ++j) {
                Integer inner = 0;
                for (long i = 0; 2 * i <= j - 1; ++i) {
                    Integer p;
                    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(j - 2 * i), n);
                    inner += p * binomial(j, i);
                }
                s += make_rational(sgn(L(n) / 2 + L(k) - j) * binomial(L(k), j) * inner,
                                   Integer(1) << static_cast<mp_bitcnt_t>(j));
            }
            s *= make_rational(2, factorial(L(n)));
            c(n, k) = from_q<R>(s) * cp[k];
        }
    return c;
}

// sin(x+z) - sin(x) = cos x sin z + sin x (cos z - 1), joined by the sum theorem.
template <class R>
Composita<R> sin_shift(const R& sinx, const R& cosx, std::size_t N) {
    return sum(sin_z(cosx, N), cos_z_minus_one(sinx, N));
}

// cos(x+z) - cos(x) = cos x (cos z - 1) - sin x sin z.
template <class R>
Composita<R> cos_shift(const R& sinx, const R& cosx, std::size_t N) {
    return sum(sin_z(R(-sinx), N), cos_z_minus_one(cosx, N));
}

// tan z:  (1 + (-1)^(n-k))/n! sum_{j=k}^n 2^(n-j-1) S2(n,j) j! (-1)^((n+k)/2 + j) C(j-1, k-1).
template <class R>
Composita<R> tan_z(std::size_t N) {
    using namespace detail;
    Composita<R> c(N);
    for (std::size_t n = 1; n <= N; ++n)
        for (std::size_t k = 1; k <= n; ++k) {
            if ((n - k) % 2 != 0) continue;
            Rational s = 0;
            for (long j = L(k); j <= L(n); ++j) {
                const Integer t = sgn((L(n) + L(k)) / 2 + j) * stirling2(L(n), j) * factorial(j) * binomial(j - 1, L(k) - 1);
                s += Rational(t) * pow(Rational(2), L(n) - j - 1);
            }
            s *= make_rational(2, factorial(L(n)));
            c(n, k) = from_q<R>(s);
        }
    return c;
}

// tan(x+z) - tan(x) = f(x, tan z) with f(x,u) = sec^2(x) u / (1 - tan(x) u), whose
// composita is C(n-1,k-1) tan^(n-k) sec^(2k). Takes t = tan x.
template <class R>
Composita<R> tan_shift(const R& t, std::size_t N) {
    using namespace detail;
    const R sec2 = Ring<R>::one() + t * t;
    const auto tp = powers(t, N), sp = powers(sec2, N);
    Composita<R> outer(N);
    for (std::size_t n = 1; n <= N; ++n)
        for (std::size_t k = 1; k <= n; ++k)
            outer(n, k) = from_z<R>(binomial(L(n) - 1, L(k) - 1)) * tp[n - k] * sp[k];
    return compose(tan_z<R>(N), outer);
}

// arctan z:  ((-1)^((3n+k)/2) + (-1)^((n-k)/2)) k!/2^(k+1) sum_{j=k}^n 2^j/j! C(n-1, j-1) s(j,k).
template <class R>
Composita<R> arctan_z(std::size_t N) {
    using namespace detail;
    Composita<R> c(N);
    for (std::size_t n = 1; n <= N; ++n)
        for (std::size_t k = 1; k <= n; ++k) {
            if ((n - k) % 2 != 0) continue;
            const long sign_sum = sgn((3 * L(n) + L(k)) / 2) + sgn((L(n) - L(k)) / 2);
            if (sign_sum == 0) continue;
            Rational s = 0;
            for (long j = L(k); j <= L(n); ++j)
                s += make_rational((Integer(1) << static_cast<mp_bitcnt_t>(j)) * binomial(L(n) - 1, j - 1) *
                                       stirling1_signed(j, L(k)),
                                   factorial(j));
            s *= make_rational(sign_sum * factorial(L(k)), Integer(1) << static_cast<mp_bitcnt_t>(k + 1));
            c(n, k) = from_q<R>(s);
        }
    return c;
}

// arctan(x+z) - arctan(x) = arctan(z / (1 + x^2 + x z)); the inner function has
// composita C(n-1,k-1) (-1)^(n-k) x^(n-k) / (1+x^2)^n.
template <class R>
Composita<R> arctan_shift(const R& x, std::size_t N) {
    using namespace detail;
    const R w = Ring<R>::one() + x * x;
    const auto xp = powers(x, N);
    Composita<R> inner(N);
    for (std::size_t n = 1; n <= N; ++n) {
        const R wn = ipow(w, -L(n));
        for (std::size_t k = 1; k <= n; ++k)
            inner(n, k) = from_z<R>(sgn(L(n) - L(k)) * binomial(L(n) - 1, L(k) - 1)) * xp[n - k] * wn;
    }
    return compose(inner, arctan_z<R>(N));
}

// Power coefficients of (x+z)^k:  C(k,n) x^(k-n).
template <class R>
PowerCoeffs<R> shift_power_coeffs(const R& x, std::size_t N) {
    using namespace detail;
    const auto xp = powers(x, N);
    PowerCoeffs<R> p(N);
    for (std::size_t n = 0; n <= N; ++n)
        for (std::size_t k = n; k <= N; ++k) p(n, k) = from_z<R>(binomial(L(k), L(n))) * xp[k - n];
    return p;
}

// Power coefficients of e^(k(x+z)):  e^(kx) k^n / n!.
template <class R>
PowerCoeffs<R> exp_power_coeffs(const R& ex, std::size_t N) {
    using namespace detail;
    const auto ep = powers(ex, N);
    PowerCoeffs<R> p(N);
    for (std::size_t n = 0; n <= N; ++n)
        for (std::size_t k = 0; k <= N; ++k) {
            Integer kn;
            mpz_ui_pow_ui(kn.get_mpz_t(), k, n);
            p(n, k) = from_q<R>(make_rational(kn, factorial(L(n)))) * ep[k];
        }
    return p;
}

// x ln x by the product theorem over (x+z)^k and ln(x+z)^k. Takes lnx = ln x.
template <class R>
Composita<R> xlnx(const R& x, const R& lnx, std::size_t N) {
    return product(shift_power_coeffs(x, N), power_coeffs(log_shift(x, N), lnx), R(x * lnx));
}

// x e^x by the product theorem. Takes ex = e^x.
template <class R>
Composita<R> xexp(const R& x, const R& ex, std::size_t N) {
    return product(shift_power_coeffs(x, N), exp_power_coeffs(ex, N), R(x * ex));
}

// Tabulated form for x e^x: e^(kx) sum_{i=0}^n k^(n-i) C(k,i) x^(k-i) / (n-i)!.
// These are the coefficients of [f(x+z)]^k, i.e. power coefficients, which
// coincide with the composita only where f(x) = 0 (x = 0).
template <class R>
PowerCoeffs<R> xexp_power_coeffs_printed(const R& x, const R& ex, std::size_t N) {
    using namespace detail;
    const auto ep = powers(ex, N), xp = powers(x, N);
    PowerCoeffs<R> p(N);
    for (std::size_t n = 0; n <= N; ++n)
        for (std::size_t k = 0; k <= N; ++k) {
            R acc = Ring<R>::zero();
            for (std::size_t i = 0; i <= std::min(n, k); ++i) {
                Integer kp;
                mpz_ui_pow_ui(kp.get_mpz_t(), k, n - i);
                acc = acc + from_q<R>(make_rational(kp * binomial(L(k), L(i)), factorial(L(n - i)))) * xp[k - i];
            }
            p(n, k) = acc * ep[k];
        }
    return p;
}

// Power coefficients of (e^(x+z) - 1)^(-m), em1 = e^x - 1:
// H(n,m) = 1/n! sum_{k=1}^{n} (-1)^k k! C(m+k-1,m-1) S2(n,k) em1^(-m-k) e^(kx).
template <class R>
PowerCoeffs<R> inv_expm1_power_coeffs(const R& em1, std::size_t N) {
    using namespace detail;
    const auto inv = Ring<R>::inverse(em1);
    if (!inv) throw DomainError("bernoulli", "x must be nonzero");
    const auto ip = powers(*inv, 2 * N), ep = powers(R(em1 + Ring<R>::one()), N);
    PowerCoeffs<R> h(N);
    for (std::size_t m = 0; m <= N; ++m) {
        h(0, m) = ip[m];
        if (m == 0) continue;
        for (std::size_t n = 1; n <= N; ++n) {
            R acc = Ring<R>::zero();
            for (std::size_t k = 1; k <= n; ++k) {
                const Integer c = factorial(L(k)) * binomial(L(m + k) - 1, L(m) - 1) * stirling2(L(n), L(k));
                acc = acc + from_z<R>(Integer(sgn(L(k)) * c)) * ip[m + k] * ep[k];
            }
            h(n, m) = from_q<R>(make_rational(1, factorial(L(n)))) * acc;
        }
    }
    return h;
}

template <class R>
Composita<R> bernoulli_gf(const R& x, const R& em1, std::size_t N) {
    const auto inv = Ring<R>::inverse(em1);
    if (!inv) throw DomainError("bernoulli", "x must be nonzero");
    return product(shift_power_coeffs(x, N), inv_expm1_power_coeffs(em1, N), R(x * *inv));
}

// ---------------------------------------------------------------------------
// Float entries

// sin/cos at x (double).
Composita<double> sin_entry(double x, std::size_t N);
Composita<double> cos_entry(double x, std::size_t N);
// Requires cos x != 0.
Composita<double> tan_entry(double x, std::size_t N);
Composita<double> arctan_entry(double x, std::size_t N);

// x/(e^x - 1), x != 0: product theorem over x and 1/(e^x - 1). The float
// entry runs the sums in Q at the rounded inputs (they cancel badly for x < 0).
Composita<double> bernoulli_gf(double x, std::size_t N);

// x / sqrt(1 - x^2), 0 < |x| < 1, assembled as 1/sqrt(1/x^2 - 1) by composition.
Composita<double> x_over_sqrt_1mx2(double x, std::size_t N);
// The single closed-form sum for the same composita.
Composita<double> x_over_sqrt_1mx2_closed_form(double x, std::size_t N);

// [x^(ax)]^(n) for n = 0..N (index 0 holds x^(ax)), x > 0, via the composita of
// a x ln x and Faa di Bruno with the exponential.
std::vector<double> x_pow_ax(double x, double a, std::size_t N);

// W^(n)(x e^x) for n = 0..N (index 0 holds W = x), x > -1, by inverting the
// composita of x e^x.
std::vector<double> lambert_w_derivs(std::size_t N, double x);

// Principal branch W(y) for y >= -1/e.
double lambert_w(double y);

}  // namespace compositae::catalog
