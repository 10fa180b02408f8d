#include "compositae/catalog.hpp"

#include <cmath>
#include <limits>

#include "compositae/bellpoly.hpp"

namespace compositae::catalog {

Composita<double> sin_entry(double x, std::size_t N) { return sin_shift(std::sin(x), std::cos(x), N); }

Composita<double> cos_entry(double x, std::size_t N) { return cos_shift(std::sin(x), std::cos(x), N); }

Composita<double> tan_entry(double x, std::size_t N) {
    if (std::fabs(std::cos(x)) < 1e-12) throw DomainError("tan", "cos x must be nonzero");
    return tan_shift(std::tan(x), N);
}

Composita<double> arctan_entry(double x, std::size_t N) { return arctan_shift(x, N); }

Composita<double> bernoulli_gf(double x, std::size_t N) {
    if (x == 0.0) throw DomainError("bernoulli", "x must be nonzero");
    return to_double(bernoulli_gf<Rational>(Rational(x), Rational(std::expm1(x)), N));
}

Composita<double> x_over_sqrt_1mx2(double x, std::size_t N) {
    if (!(std::fabs(x) < 1.0) || x == 0.0) throw DomainError("x_over_sqrt_1mx2", "need 0 < |x| < 1");
    // 1/sqrt(1/x^2 - 1) = |x| / sqrt(1 - x^2)
    const double u = x * x;
    const Composita<double> inv_square = compose(pow_m(x, 2, N), recip(u, N));
    const double v = 1.0 / u - 1.0;
    Composita<double> c = compose(inv_square, rsqrt(v, std::sqrt(v), N));
    return x > 0 ? c : scaled(c, -1.0);
}

Composita<double> x_over_sqrt_1mx2_closed_form(double x, std::size_t N) {
    using detail::L;
    using detail::sgn;
    if (!(std::fabs(x) < 1.0) || x == 0.0) throw DomainError("x_over_sqrt_1mx2", "need 0 < |x| < 1");
    const double w = 1.0 - x * x;
    Composita<double> c(N);
    for (std::size_t n = 1; n <= N; ++n)
        for (std::size_t m = 1; m <= n; ++m) {
            double total = 0;
            for (long k = L(m); k <= L(n); ++k) {
                Integer mid = 0;
                for (long j = L(m); j <= k; ++j)
                    mid += j * (Integer(1) << static_cast<mp_bitcnt_t>(j)) * binomial(j - 1, L(m) - 1) *
                           binomial(2 * k - j - 1, k - 1);
                Rational tail = 0;
                for (long i = k; i <= L(n); ++i)
                    tail += Rational(Integer(sgn(i) * binomial(i - 1, k - 1) * binomial(i, L(n) - i))) *
                            pow(Rational(2), 2 * i - L(n));
                const Rational coeff = make_rational(sgn(k) * mid, k * (Integer(1) << static_cast<mp_bitcnt_t>(2 * k))) * tail;
                total += coeff.get_d() * std::pow(w, -static_cast<double>(m) / 2.0 - static_cast<double>(k));
            }
            c(n, m) = total * std::pow(x, static_cast<double>(L(m) - L(n)));
        }
    return c;
}

std::vector<double> x_pow_ax(double x, double a, std::size_t N) {
    if (!(x > 0)) throw DomainError("x_pow_ax", "x must be positive");
    const Composita<double> A = scaled(xlnx(x, std::log(x), N), a);
    const double value = std::pow(x, a * x);
    std::vector<double> d(N + 1);
    d[0] = value;
    for (std::size_t n = 1; n <= N; ++n) {
        const std::vector<double> outer(n, value);  // every derivative of exp is exp
        d[n] = faa_di_bruno<double>(n, outer, bell_row(A, n));
    }
    return d;
}

double lambert_w(double y) {
    const double branch = -1.0 / std::exp(1.0);
    if (y < branch) throw DomainError("lambertw", "argument below -1/e");
    if (y == 0.0) return 0.0;
    if (y == branch) return -1.0;
    double w;
    if (y < -0.25) {
        const double p = std::sqrt(2.0 * (std::exp(1.0) * y + 1.0));
        w = -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p;
    } else if (y < 3.0) {
        w = std::log1p(y) * 0.75;
    } else {
        const double l = std::log(y);
        w = l - std::log(l);
    }
    for (int it = 0; it < 100; ++it) {
        const double ew = std::exp(w);
        const double f = w * ew - y;
        const double wp1 = w + 1.0;
        if (wp1 == 0.0) break;
        const double step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));  // Halley
        w -= step;
        if (std::fabs(step) <= 4 * std::numeric_limits<double>::epsilon() * (1.0 + std::fabs(w))) break;
    }
    return w;
}

std::vector<double> lambert_w_derivs(std::size_t N, double x) {
    if (!(x > -1.0)) throw DomainError("lambertw", "need x > -1");
    // composita of x e^x at x; its inverse lives at f(x) = x e^x
    const Composita<double> W = invert_backward(xexp(x, std::exp(x), N));
    std::vector<double> d(N + 1);
    d[0] = x;
    for (std::size_t n = 1; n <= N; ++n) d[n] = factorial(detail::L(n)).get_d() * W(n, 1);
    return d;
}

}  // namespace compositae::catalog
