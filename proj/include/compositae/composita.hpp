#pragma once

// The composita triangle Y(n,k), 1 <= k <= n <= N, of a delta series
// Y(z) = sum_{n>=1} y_n z^n, defined by Y(z)^k = sum_{n>=k} Y(n,k) z^n.
//
// For Y(x,z) = y(x+z) - y(x) the entries are sums over k-part compositions of
// n of products y^(l1)/l1! ... y^(lk)/lk!, and the partial Bell polynomial is
// B(n,k) = n!/k! * Y(n,k).
//
// Every function here is generic over the coefficient ring (Rational, double,
// MPoly). Values carry no notion of the evaluation point x: a composita "at
// f(x)" is just a composita the caller built at that point.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "compositae/errors.hpp"
#include "compositae/exact.hpp"
#include "compositae/ring.hpp"
#include "compositae/series.hpp"

namespace compositae {

template <class R>
class Composita {
public:
    explicit Composita(std::size_t order) : order_(order), v_(order * (order + 1) / 2, Ring<R>::zero()) {
        if (order == 0) throw std::invalid_argument("composita order must be at least 1");
    }

    // delta(n,k): the composita of z, unit for compose().
    static Composita identity(std::size_t order) {
        Composita c(order);
        for (std::size_t n = 1; n <= order; ++n) c(n, n) = Ring<R>::one();
        return c;
    }

    std::size_t order() const { return order_; }

    const R& operator()(std::size_t n, std::size_t k) const { return v_[index(n, k)]; }
    R& operator()(std::size_t n, std::size_t k) { return v_[index(n, k)]; }

    // Zero outside the triangle instead of throwing.
    R get(long n, long k) const {
        if (k < 1 || n < k || n > static_cast<long>(order_)) return Ring<R>::zero();
        return (*this)(static_cast<std::size_t>(n), static_cast<std::size_t>(k));
    }

    Composita truncated(std::size_t order) const {
        if (order > order_) throw std::invalid_argument("cannot raise composita order");
        Composita r(order);
        for (std::size_t n = 1; n <= order; ++n)
            for (std::size_t k = 1; k <= n; ++k) r(n, k) = (*this)(n, k);
        return r;
    }

    friend bool operator==(const Composita& a, const Composita& b) {
        return a.order_ == b.order_ && a.v_ == b.v_;
    }

private:
    std::size_t index(std::size_t n, std::size_t k) const {
        if (k < 1 || k > n || n > order_)
            throw std::out_of_range("composita index (" + std::to_string(n) + "," + std::to_string(k) +
                                    ") outside triangle of order " + std::to_string(order_));
        return (n - 1) * n / 2 + (k - 1);
    }

    std::size_t order_;
    std::vector<R> v_;
};

// Entrywise comparison through Ring<R>::equal (exact, or within tol for double).
template <class R>
bool equal(const Composita<R>& a, const Composita<R>& b, double tol = default_tolerance) {
    if (a.order() != b.order()) return false;
    for (std::size_t n = 1; n <= a.order(); ++n)
        for (std::size_t k = 1; k <= n; ++k)
            if (!Ring<R>::equal(a(n, k), b(n, k), tol)) return false;
    return true;
}

template <class To, class From, class Fn>
Composita<To> transform(const Composita<From>& c, Fn&& fn) {
    Composita<To> r(c.order());
    for (std::size_t n = 1; n <= c.order(); ++n)
        for (std::size_t k = 1; k <= n; ++k) r(n, k) = fn(c(n, k));
    return r;
}

inline Composita<double> to_double(const Composita<Rational>& c) {
    return transform<double>(c, [](const Rational& q) { return q.get_d(); });
}

// Composita of a*Y(z): entry (n,k) scaled by a^k.
template <class R>
Composita<R> scaled(const Composita<R>& c, const R& a) {
    Composita<R> r(c.order());
    R ak = Ring<R>::one();
    for (std::size_t k = 1; k <= c.order(); ++k) {
        ak = ak * a;
        for (std::size_t n = k; n <= c.order(); ++n) r(n, k) = ak * c(n, k);
    }
    return r;
}

// Y(n,n) == Y(1,1)^n for every n.
template <class R>
bool satisfies_diagonal_law(const Composita<R>& c, double tol = default_tolerance) {
    R p = Ring<R>::one();
    for (std::size_t n = 1; n <= c.order(); ++n) {
        p = p * c(1, 1);
        if (!Ring<R>::equal(c(n, n), p, tol)) return false;
    }
    return true;
}

// Reference construction: entry (n,k) is the z^n coefficient of f^k.
template <class R>
Composita<R> from_series(const Series<R>& f, std::size_t order) {
    if (!f.is_delta()) throw std::domain_error("from_series: series has a nonzero constant term");
    if (f.order() < order)
        throw std::invalid_argument("from_series: series order " + std::to_string(f.order()) + " below " +
                                    std::to_string(order));
    const Series<R> base = f.truncated(order);
    Composita<R> c(order);
    Series<R> power = base;
    for (std::size_t k = 1; k <= order; ++k) {
        for (std::size_t n = k; n <= order; ++n) c(n, k) = power[n];
        if (k < order) power = power * base;
    }
    return c;
}

// The series Y(z) = sum_n Y(n,1) z^n recovered from the first column.
template <class R>
Series<R> to_series(const Composita<R>& c) {
    Series<R> s(c.order());
    for (std::size_t n = 1; n <= c.order(); ++n) s[n] = c(n, 1);
    return s;
}

// B(n,k) = n!/k! * Y(n,k).
template <class R>
R to_bell(const Composita<R>& c, std::size_t n, std::size_t k) {
    const R& entry = c(n, k);
    const Rational scale(Integer(factorial(static_cast<long>(n)) / factorial(static_cast<long>(k))));
    return Ring<R>::from_rational(scale) * entry;
}

// Coefficients F(n,k) of [f(x+z)]^k = (f(x) + F(z))^k, 0 <= n,k <= N.
template <class R>
class PowerCoeffs {
public:
    explicit PowerCoeffs(std::size_t order) : order_(order), v_((order + 1) * (order + 1), Ring<R>::zero()) {}

    std::size_t order() const { return order_; }
    const R& operator()(std::size_t n, std::size_t k) const { return v_.at(n * (order_ + 1) + k); }
    R& operator()(std::size_t n, std::size_t k) { return v_.at(n * (order_ + 1) + k); }

private:
    std::size_t order_;
    std::vector<R> v_;
};

// F(n,k) = sum_j C(k,j) Y(n,j) f0^(k-j), with Y(0,0) = 1 and Y(n,0) = Y(0,j) = 0.
template <class R>
PowerCoeffs<R> power_coeffs(const Composita<R>& c, const R& f0) {
    const std::size_t N = c.order();
    PowerCoeffs<R> p(N);
    std::vector<R> f0pow(N + 1, Ring<R>::one());
    for (std::size_t i = 1; i <= N; ++i) f0pow[i] = f0pow[i - 1] * f0;
    for (std::size_t k = 0; k <= N; ++k) {
        p(0, k) = f0pow[k];
        for (std::size_t n = 1; n <= N; ++n) {
            R acc = Ring<R>::zero();
            for (std::size_t j = 1; j <= std::min(k, n); ++j) {
                const Rational b(binomial(static_cast<long>(k), static_cast<long>(j)));
                acc = acc + Ring<R>::from_rational(b) * c(n, j) * f0pow[k - j];
            }
            p(n, k) = acc;
        }
    }
    return p;
}

// Composita of F(z) + G(z):
// A(n,k) = F(n,k) + G(n,k) + sum_{j=1}^{k-1} C(k,j) sum_{i=j}^{n-k+j} F(i,j) G(n-i,k-j).
template <class R>
Composita<R> sum(const Composita<R>& F, const Composita<R>& G) {
    if (F.order() != G.order()) throw OrderMismatch(F.order(), G.order());
    const std::size_t N = F.order();
    Composita<R> A(N);
    for (std::size_t n = 1; n <= N; ++n) {
        for (std::size_t k = 1; k <= n; ++k) {
            R acc = F(n, k) + G(n, k);
            for (std::size_t j = 1; j < k; ++j) {
                R inner = Ring<R>::zero();
                for (std::size_t i = j; i <= n - k + j; ++i) inner = inner + F(i, j) * G(n - i, k - j);
                const Rational b(binomial(static_cast<long>(k), static_cast<long>(j)));
                acc = acc + Ring<R>::from_rational(b) * inner;
            }
            A(n, k) = acc;
        }
    }
    return A;
}

// Composita of f(x+z)g(x+z) - f(x)g(x) from the power coefficients of f and g:
// Y(n,k) = sum_j C(k,j) (sum_i F(i,j) G(n-i,j)) (-fg0)^(k-j),  fg0 = f(x)g(x).
template <class R>
Composita<R> product(const PowerCoeffs<R>& F, const PowerCoeffs<R>& G, const R& fg0) {
    if (F.order() != G.order()) throw OrderMismatch(F.order(), G.order());
    const std::size_t N = F.order();
    if (N == 0) throw std::invalid_argument("product: order must be at least 1");
    const R neg = -fg0;
    std::vector<R> negpow(N + 1, Ring<R>::one());
    for (std::size_t i = 1; i <= N; ++i) negpow[i] = negpow[i - 1] * neg;

    // conv[n][j] = sum_i F(i,j) G(n-i,j): coefficients of (f(x+z) g(x+z))^j
    std::vector<std::vector<R>> conv(N + 1, std::vector<R>(N + 1, Ring<R>::zero()));
    for (std::size_t j = 0; j <= N; ++j)
        for (std::size_t n = 0; n <= N; ++n)
            for (std::size_t i = 0; i <= n; ++i) conv[n][j] = conv[n][j] + F(i, j) * G(n - i, j);

    Composita<R> Y(N);
    for (std::size_t n = 1; n <= N; ++n) {
        for (std::size_t k = 1; k <= n; ++k) {
            R acc = Ring<R>::zero();
            for (std::size_t j = 0; j <= k; ++j) {
                const Rational b(binomial(static_cast<long>(k), static_cast<long>(j)));
                acc = acc + Ring<R>::from_rational(b) * conv[n][j] * negpow[k - j];
            }
            Y(n, k) = acc;
        }
    }
    return Y;
}

// Composita of g(f(x+z)) - g(f(x)): Y(n,m) = sum_{k=m}^n F(n,k) G(k,m),
// where F is the inner composita at x and G the outer composita at f(x).
template <class R>
Composita<R> compose(const Composita<R>& F, const Composita<R>& G) {
    if (F.order() != G.order()) throw OrderMismatch(F.order(), G.order());
    const std::size_t N = F.order();
    Composita<R> Y(N);
    for (std::size_t n = 1; n <= N; ++n)
        for (std::size_t m = 1; m <= n; ++m) {
            R acc = Ring<R>::zero();
            for (std::size_t k = m; k <= n; ++k) acc = acc + F(n, k) * G(k, m);
            Y(n, m) = acc;
        }
    return Y;
}

namespace detail {

template <class R>
std::vector<R> diagonal_inverses(const Composita<R>& F) {
    auto inv = Ring<R>::inverse(F(1, 1));
    if (!inv) throw NotInvertible("composita is not invertible: leading entry Y(1,1) = " + Ring<R>::str(F(1, 1)));
    std::vector<R> d(F.order() + 1, Ring<R>::one());
    for (std::size_t n = 1; n <= F.order(); ++n) d[n] = d[n - 1] * *inv;
    return d;
}

}  // namespace detail

// Composita of the inverse function, row by row:
// Y(n,n) = 1/F(n,n);  Y(n,m) = -1/F(m,m) sum_{k=m+1}^n Y(n,k) F(k,m).
// F must be the composita of f at y = f^{-1}(x); the result is the inverse's composita at x.
template <class R>
Composita<R> invert_forward(const Composita<R>& F) {
    const std::size_t N = F.order();
    const auto dinv = detail::diagonal_inverses(F);
    Composita<R> Y(N);
    for (std::size_t n = 1; n <= N; ++n) {
        Y(n, n) = dinv[n];
        for (std::size_t m = n - 1; m >= 1; --m) {
            R acc = Ring<R>::zero();
            for (std::size_t k = m + 1; k <= n; ++k) acc = acc + Y(n, k) * F(k, m);
            Y(n, m) = -(dinv[m] * acc);
        }
    }
    return Y;
}

// Same inverse, column by column:
// Y(m,m) = 1/F(m,m);  Y(n,m) = -1/F(n,n) sum_{k=m}^{n-1} F(n,k) Y(k,m).
// With F at x the result is the inverse's composita at f(x).
template <class R>
Composita<R> invert_backward(const Composita<R>& F) {
    const std::size_t N = F.order();
    const auto dinv = detail::diagonal_inverses(F);
    Composita<R> Y(N);
    for (std::size_t m = 1; m <= N; ++m) {
        Y(m, m) = dinv[m];
        for (std::size_t n = m + 1; n <= N; ++n) {
            R acc = Ring<R>::zero();
            for (std::size_t k = m; k < n; ++k) acc = acc + F(n, k) * Y(k, m);
            Y(n, m) = -(dinv[n] * acc);
        }
    }
    return Y;
}

// True iff compose(A, B) is the identity triangle.
template <class R>
bool delta_check(const Composita<R>& A, const Composita<R>& B, double tol = default_tolerance) {
    if (A.order() != B.order()) throw OrderMismatch(A.order(), B.order());
    return equal(compose(A, B), Composita<R>::identity(A.order()), tol);
}

}  // namespace compositae
