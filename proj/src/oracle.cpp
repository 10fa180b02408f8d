#include "compositae/oracle.hpp"

#include <cmath>

namespace compositae::oracle {

Rational generalized_binomial(const Rational& alpha, long n) {
    if (n < 0) return 0;
    Rational r = 1;
    for (long i = 0; i < n; ++i) r *= (alpha - i);
    return r / Rational(factorial(n));
}

Series<double> tan(double x, std::size_t N) {
    auto [S, C] = series_sin_cos(series_shift(N, x));
    if (std::fabs(C[0]) < 1e-12) throw std::domain_error("oracle: cos x must be nonzero");
    return delta_part(series_divide(S, C));
}

Series<double> bernoulli_gf(double x, std::size_t N) {
    if (x == 0.0) throw std::domain_error("oracle: x must be nonzero");
    const Series<double> shift = series_shift(N, x);
    Series<double> denom = series_exp(shift);
    denom[0] = std::expm1(x);
    return delta_part(series_divide(shift, denom));
}

Series<double> x_over_sqrt_1mx2(double x, std::size_t N) {
    const Series<double> shift = series_shift(N, x);
    const Series<double> w = Series<double>::constant(N, 1.0) - shift * shift;
    return delta_part(shift * series_pow_real(w, -0.5));
}

Series<double> x_pow_ax(double x, double a, std::size_t N) {
    const Series<double> shift = series_shift(N, x);
    return series_exp((shift * series_log(shift)).scaled(a));
}

Series<double> lambert_w(double x, std::size_t N) {
    // Newton on w e^w = y + z with w(0) = x; each pass doubles the number of
    // correct coefficients.
    const double y = x * std::exp(x);
    const Series<double> target = series_shift(N, y);
    Series<double> w = Series<double>::constant(N, x);
    std::size_t correct = 1;
    while (correct <= 2 * (N + 1)) {
        const Series<double> ew = series_exp(w);
        const Series<double> residual = w * ew - target;
        const Series<double> slope = (w + Series<double>::constant(N, 1.0)) * ew;
        w = w - series_divide(residual, slope);
        correct *= 2;
    }
    return w;
}

}  // namespace compositae::oracle
