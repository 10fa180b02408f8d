#pragma once

// Taylor arithmetic on truncated series over a field: reciprocal, division,
// differentiation, integration, and (for double) exp/log/real powers/sin/cos
// via the usual first-order recurrences. These build derivative oracles that
// never touch the composita machinery.

#include <cmath>
#include <stdexcept>
#include <utility>

#include "compositae/series.hpp"

namespace compositae {

template <class F>
Series<F> series_reciprocal(const Series<F>& s) {
    auto inv0 = Ring<F>::inverse(s[0]);
    if (!inv0) throw std::domain_error("series_reciprocal: constant term is not invertible");
    Series<F> r(s.order());
    r[0] = *inv0;
    for (std::size_t n = 1; n <= s.order(); ++n) {
        F acc = Ring<F>::zero();
        for (std::size_t i = 1; i <= n; ++i) acc = acc + s[i] * r[n - i];
        r[n] = -(*inv0 * acc);
    }
    return r;
}

template <class F>
Series<F> series_divide(const Series<F>& a, const Series<F>& b) {
    return a * series_reciprocal(b);
}

// d/dz, order drops by one (order 0 stays 0 with a zero coefficient).
template <class F>
Series<F> series_derivative(const Series<F>& s) {
    const std::size_t n = s.order() == 0 ? 0 : s.order() - 1;
    Series<F> d(n);
    for (std::size_t i = 1; i <= s.order(); ++i) d[i - 1] = Ring<F>::from_rational(Rational(static_cast<long>(i))) * s[i];
    return d;
}

// Antiderivative with the given constant; order rises by one.
template <class F>
Series<F> series_integrate(const Series<F>& s, F constant) {
    Series<F> r(s.order() + 1);
    r[0] = std::move(constant);
    for (std::size_t i = 0; i <= s.order(); ++i)
        r[i + 1] = Ring<F>::from_rational(Rational(1, static_cast<long>(i + 1))) * s[i];
    return r;
}

// exp(s): n E_n = sum_{k=1}^n k s_k E_{n-k}, E_0 = exp(s_0).
inline Series<double> series_exp(const Series<double>& s) {
    Series<double> e(s.order());
    e[0] = std::exp(s[0]);
    for (std::size_t n = 1; n <= s.order(); ++n) {
        double acc = 0;
        for (std::size_t k = 1; k <= n; ++k) acc += static_cast<double>(k) * s[k] * e[n - k];
        e[n] = acc / static_cast<double>(n);
    }
    return e;
}

// log(s) for s_0 > 0.
inline Series<double> series_log(const Series<double>& s) {
    if (!(s[0] > 0)) throw std::domain_error("series_log: constant term must be positive");
    if (s.order() == 0) return Series<double>::constant(0, std::log(s[0]));
    return series_integrate(series_divide(series_derivative(s), s.truncated(s.order() - 1)), std::log(s[0]));
}

// s^alpha for s_0 > 0:  n s_0 P_n = sum_{k=1}^n ((alpha+1)k - n) s_k P_{n-k}.
inline Series<double> series_pow_real(const Series<double>& s, double alpha) {
    if (!(s[0] > 0)) throw std::domain_error("series_pow_real: constant term must be positive");
    Series<double> p(s.order());
    p[0] = std::pow(s[0], alpha);
    for (std::size_t n = 1; n <= s.order(); ++n) {
        double acc = 0;
        for (std::size_t k = 1; k <= n; ++k)
            acc += ((alpha + 1.0) * static_cast<double>(k) - static_cast<double>(n)) * s[k] * p[n - k];
        p[n] = acc / (static_cast<double>(n) * s[0]);
    }
    return p;
}

// (sin s, cos s):  S' = C s',  C' = -S s'.
inline std::pair<Series<double>, Series<double>> series_sin_cos(const Series<double>& s) {
    Series<double> S(s.order()), C(s.order());
    S[0] = std::sin(s[0]);
    C[0] = std::cos(s[0]);
    for (std::size_t n = 1; n <= s.order(); ++n) {
        double as = 0, ac = 0;
        for (std::size_t k = 1; k <= n; ++k) {
            as += static_cast<double>(k) * s[k] * C[n - k];
            ac -= static_cast<double>(k) * s[k] * S[n - k];
        }
        S[n] = as / static_cast<double>(n);
        C[n] = ac / static_cast<double>(n);
    }
    return {S, C};
}

// The series x + z.
template <class F>
Series<F> series_shift(std::size_t order, const F& x) {
    Series<F> s = Series<F>::variable(order);
    s[0] = x;
    return s;
}

// Drops the constant term: y(x+z) - y(x).
template <class F>
Series<F> delta_part(Series<F> s) {
    s[0] = Ring<F>::zero();
    return s;
}

}  // namespace compositae
