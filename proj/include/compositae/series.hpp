#pragma once

// Truncated formal power series c_0 + c_1 z + ... + c_N z^N over a ring R.
//
// The truncation order N is part of the value. Binary operations on series of
// different orders truncate to the smaller one; terms above N are unknown, not
// zero.

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include "compositae/ring.hpp"

namespace compositae {

template <class R>
class Series {
public:
    // The zero series of order N.
    explicit Series(std::size_t order) : c_(order + 1, Ring<R>::zero()) {}

    // Coefficients c_0..c_N; missing tail entries up to N are zero.
    Series(std::size_t order, std::vector<R> coeffs) : c_(std::move(coeffs)) {
        c_.resize(order + 1, Ring<R>::zero());
    }

    Series(std::size_t order, std::initializer_list<R> coeffs) : Series(order, std::vector<R>(coeffs)) {}

    // The series z at order N (requires N >= 1 to be nonzero).
    static Series variable(std::size_t order) {
        Series s(order);
        if (order >= 1) s.c_[1] = Ring<R>::one();
        return s;
    }

    static Series constant(std::size_t order, R value) {
        Series s(order);
        s.c_[0] = std::move(value);
        return s;
    }

    std::size_t order() const { return c_.size() - 1; }
    const R& operator[](std::size_t i) const { return c_.at(i); }
    R& operator[](std::size_t i) { return c_.at(i); }
    const std::vector<R>& coeffs() const { return c_; }

    bool is_delta() const { return Ring<R>::is_zero(c_[0]); }

    Series truncated(std::size_t order) const {
        if (order > this->order()) throw std::invalid_argument("cannot raise truncation order");
        return Series(order, std::vector<R>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(order + 1)));
    }

    Series& operator+=(const Series& o) {
        shrink_to(o.order());
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
        return *this;
    }
    Series& operator-=(const Series& o) {
        shrink_to(o.order());
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
        return *this;
    }

    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator-(Series a) {
        for (auto& x : a.c_) x = -x;
        return a;
    }

    // Cauchy product truncated to min(order(a), order(b)).
    friend Series operator*(const Series& a, const Series& b) {
        const std::size_t n = std::min(a.order(), b.order());
        Series r(n);
        for (std::size_t i = 0; i <= n; ++i) {
            if (Ring<R>::is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; i + j <= n; ++j) {
                if (Ring<R>::is_zero(b.c_[j])) continue;
                r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
            }
        }
        return r;
    }

    Series scaled(const R& s) const {
        Series r(*this);
        for (auto& x : r.c_) x = s * x;
        return r;
    }

    friend bool operator==(const Series& a, const Series& b) {
        if (a.order() != b.order()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!Ring<R>::equal(a.c_[i], b.c_[i])) return false;
        return true;
    }

private:
    void shrink_to(std::size_t order) {
        if (order < this->order()) c_.resize(order + 1);
    }

    std::vector<R> c_;
};

template <class R>
Series<R> series_add(const Series<R>& a, const Series<R>& b) { return a + b; }

template <class R>
Series<R> series_scale(const Series<R>& a, const R& s) { return a.scaled(s); }

template <class R>
Series<R> series_mul(const Series<R>& a, const Series<R>& b) { return a * b; }

// f^k by binary powering. For a delta series the coefficients below z^k come
// out exactly zero because every partial product is itself a delta power.
template <class R>
Series<R> series_pow(const Series<R>& f, long k) {
    if (k < 0) throw std::invalid_argument("series_pow: negative exponent");
    Series<R> result = Series<R>::constant(f.order(), Ring<R>::one());
    Series<R> base = f;
    while (k > 0) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return result;
}

// g(f(z)) by Horner accumulation: (((g_N f + g_{N-1}) f + ...) f + g_0).
// Requires f to be a delta series. The result has order min(order(g), order(f)).
template <class R>
Series<R> series_compose(const Series<R>& g, const Series<R>& f) {
    if (!f.is_delta()) throw std::domain_error("series_compose: inner series has a nonzero constant term");
    const std::size_t n = std::min(g.order(), f.order());
    const Series<R> inner = f.truncated(n);
    Series<R> acc(n);
    for (std::size_t i = n + 1; i-- > 0;) {
        acc = acc * inner;
        acc[0] = acc[0] + g[i];
    }
    return acc;
}

}  // namespace compositae
