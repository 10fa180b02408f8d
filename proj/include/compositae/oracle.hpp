#pragma once

// Derivative oracles: Taylor coefficients y^(n)(x)/n! of y(x+z) - y(x),
// computed from elementary derivative rules or Taylor arithmetic, never from a
// composita. from_series() of these series is the ground truth every closed
// form and theorem is tested against.

#include <cstddef>
#include <span>
#include <vector>

#include "compositae/exact.hpp"
#include "compositae/series_fn.hpp"

namespace compositae::oracle {

// alpha (alpha-1) ... (alpha-n+1) / n! for rational alpha.
Rational generalized_binomial(const Rational& alpha, long n);

// y^(n)(x) = n! * coefficient n.
template <class F>
F derivative(const Series<F>& taylor, std::size_t n) {
    return Ring<F>::from_rational(Rational(factorial(static_cast<long>(n)))) * taylor[n];
}

// Series with coefficient i = derivs[i]/i! (derivs[0] is the value).
template <class F>
Series<F> from_derivatives(std::span<const F> derivs) {
    Series<F> s(derivs.size() - 1);
    for (std::size_t i = 0; i < derivs.size(); ++i)
        s[i] = Ring<F>::from_rational(make_rational(1, factorial(static_cast<long>(i)))) * derivs[i];
    return s;
}

// p(x+z) - p(x) for p = sum coeffs[i] x^i.
template <class F>
Series<F> polynomial(std::span<const F> coeffs, const F& x, std::size_t N) {
    const Series<F> shift = series_shift(N, x);
    Series<F> acc(N), power = Series<F>::constant(N, Ring<F>::one());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        acc += power.scaled(coeffs[i]);
        power = power * shift;
    }
    return delta_part(acc);
}

namespace detail {

template <class F>
F ipow(const F& x, long e) {
    if (e < 0) {
        auto inv = Ring<F>::inverse(x);
        if (!inv) throw std::domain_error("oracle: negative power of a non-invertible value");
        return ipow(*inv, -e);
    }
    F r = Ring<F>::one();
    for (long i = 0; i < e; ++i) r = r * x;
    return r;
}

// sum_{n>=1} C(alpha, n) x^(alpha-n) z^n where x^alpha = scale.
template <class F>
Series<F> binomial_series(const Rational& alpha, const F& x, const F& scale, std::size_t N) {
    Series<F> s(N);
    const auto inv = Ring<F>::inverse(x);
    if (!inv) throw std::domain_error("oracle: x must be nonzero");
    F xn = scale;
    for (std::size_t n = 1; n <= N; ++n) {
        xn = xn * *inv;
        s[n] = Ring<F>::from_rational(generalized_binomial(alpha, static_cast<long>(n))) * xn;
    }
    return s;
}

}  // namespace detail

// (x+z)^m - x^m, any integer m (negative m covers x^(-m)).
template <class F>
Series<F> power(const F& x, long m, std::size_t N) {
    if (m >= 0) {
        Series<F> s(N);
        for (std::size_t n = 1; n <= N && static_cast<long>(n) <= m; ++n)
            s[n] = Ring<F>::from_rational(Rational(binomial(m, static_cast<long>(n)))) *
                   detail::ipow(x, m - static_cast<long>(n));
        return s;
    }
    return detail::binomial_series(Rational(m), x, detail::ipow(x, m), N);
}

// sqrt(x+z) - sqrt(x), root = sqrt(x).
template <class F>
Series<F> sqrt(const F& x, const F& root, std::size_t N) {
    return detail::binomial_series(make_rational(1, 2), x, root, N);
}

// 1/sqrt(x+z) - 1/sqrt(x), root = sqrt(x).
template <class F>
Series<F> rsqrt(const F& x, const F& root, std::size_t N) {
    return detail::binomial_series(make_rational(-1, 2), x, *Ring<F>::inverse(root), N);
}

// cbrt(x+z) - cbrt(x), root = cbrt(x).
template <class F>
Series<F> cbrt(const F& x, const F& root, std::size_t N) {
    return detail::binomial_series(make_rational(1, 3), x, root, N);
}

// 1/(1-x-z) - 1/(1-x):  (1-x)^(-n-1).
template <class F>
Series<F> geometric(const F& x, std::size_t N) {
    const auto inv = Ring<F>::inverse(Ring<F>::one() - x);
    if (!inv) throw std::domain_error("oracle: x must differ from 1");
    Series<F> s(N);
    F p = *inv;
    for (std::size_t n = 1; n <= N; ++n) {
        p = p * *inv;
        s[n] = p;
    }
    return s;
}

// ln(x+z) - ln(x):  (-1)^(n-1) / (n x^n).
template <class F>
Series<F> log(const F& x, std::size_t N) {
    const auto inv = Ring<F>::inverse(x);
    if (!inv) throw std::domain_error("oracle: x must be nonzero");
    Series<F> s(N);
    F p = Ring<F>::one();
    for (std::size_t n = 1; n <= N; ++n) {
        p = p * *inv;
        const long sign = (n % 2 == 1) ? 1 : -1;
        s[n] = Ring<F>::from_rational(make_rational(sign, static_cast<long>(n))) * p;
    }
    return s;
}

// e^(x+z) - e^x:  e^x / n!.
template <class F>
Series<F> exp(const F& ex, std::size_t N) {
    Series<F> s(N);
    for (std::size_t n = 1; n <= N; ++n)
        s[n] = Ring<F>::from_rational(make_rational(1, factorial(static_cast<long>(n)))) * ex;
    return s;
}

// sin(x+z) - sin(x) by the four-cycle of derivatives.
template <class F>
Series<F> sin(const F& sinx, const F& cosx, std::size_t N) {
    const F cycle[4] = {sinx, cosx, F(-sinx), F(-cosx)};
    Series<F> s(N);
    for (std::size_t n = 1; n <= N; ++n)
        s[n] = Ring<F>::from_rational(make_rational(1, factorial(static_cast<long>(n)))) * cycle[n % 4];
    return s;
}

template <class F>
Series<F> cos(const F& sinx, const F& cosx, std::size_t N) {
    const F cycle[4] = {cosx, F(-sinx), F(-cosx), sinx};
    Series<F> s(N);
    for (std::size_t n = 1; n <= N; ++n)
        s[n] = Ring<F>::from_rational(make_rational(1, factorial(static_cast<long>(n)))) * cycle[n % 4];
    return s;
}

// arctan(x+z) - arctan(x): integral of 1/(1 + (x+z)^2).
template <class F>
Series<F> arctan(const F& x, std::size_t N) {
    const Series<F> shift = series_shift(N, x);
    const Series<F> denom = Series<F>::constant(N, Ring<F>::one()) + shift * shift;
    return series_integrate(series_reciprocal(denom).truncated(N - 1), Ring<F>::zero());
}

// x ln x:  ln x + 1, then (-1)^n / (n (n-1) x^(n-1)).
template <class F>
Series<F> xlnx(const F& x, const F& lnx, std::size_t N) {
    const auto inv = Ring<F>::inverse(x);
    if (!inv) throw std::domain_error("oracle: x must be nonzero");
    Series<F> s(N);
    if (N >= 1) s[1] = lnx + Ring<F>::one();
    F p = Ring<F>::one();
    for (std::size_t n = 2; n <= N; ++n) {
        p = p * *inv;
        const long sign = (n % 2 == 0) ? 1 : -1;
        s[n] = Ring<F>::from_rational(make_rational(sign, static_cast<long>(n * (n - 1)))) * p;
    }
    return s;
}

// x e^x:  e^x (x/n! + 1/(n-1)!).
template <class F>
Series<F> xexp(const F& x, const F& ex, std::size_t N) {
    Series<F> s(N);
    for (std::size_t n = 1; n <= N; ++n) {
        const long ln = static_cast<long>(n);
        s[n] = (Ring<F>::from_rational(make_rational(1, factorial(ln))) * x +
                Ring<F>::from_rational(make_rational(1, factorial(ln - 1)))) *
               ex;
    }
    return s;
}

// Float-only oracles.
Series<double> tan(double x, std::size_t N);
Series<double> bernoulli_gf(double x, std::size_t N);
Series<double> x_over_sqrt_1mx2(double x, std::size_t N);
// Full Taylor series of x^(ax) at x (constant term included).
Series<double> x_pow_ax(double x, double a, std::size_t N);
// Full Taylor series of W(y+z) at y = x e^x (constant term x).
Series<double> lambert_w(double x, std::size_t N);

// Inverse of a delta series with invertible linear term, by fixed-point
// iteration on g <- g - (f(g) - z) / f_1 (one new coefficient per pass).
template <class F>
Series<F> reversion(const Series<F>& f) {
    if (!f.is_delta()) throw std::domain_error("reversion: series has a nonzero constant term");
    const auto inv = Ring<F>::inverse(f[1]);
    if (!inv) throw std::domain_error("reversion: linear coefficient is not invertible");
    const Series<F> z = Series<F>::variable(f.order());
    Series<F> g = z.scaled(*inv);
    for (std::size_t pass = 1; pass < f.order(); ++pass) g = g - (series_compose(f, g) - z).scaled(*inv);
    return g;
}

}  // namespace compositae::oracle
