#pragma once

// Partial Bell polynomials of the second kind B(n,k)(y1, ..., y_{n-k+1}).
//
// Two independent routes: bell_bruteforce enumerates k-part compositions of n
// directly, bell_generic goes through the composita of the generic series
// sum d_i z^i and the identity B(n,k) = n!/k! Y(n,k).

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "compositae/composita.hpp"
#include "compositae/mpoly.hpp"

namespace compositae {

// Ordered k-part compositions of n in lexicographic order, generated
// iteratively. Usage: for (CompositionIterator it(n,k); it; ++it) use(*it);
class CompositionIterator {
public:
    CompositionIterator(long n, long k);

    explicit operator bool() const { return !done_; }
    const std::vector<long>& operator*() const { return parts_; }
    CompositionIterator& operator++();

private:
    long n_, k_;
    std::vector<long> parts_;
    bool done_ = false;
};

std::vector<std::vector<long>> enumerate_compositions(long n, long k);

// B(n,k) as n!/k! * sum over compositions of prod y_{l_i}/l_i!.
MPoly bell_bruteforce(long n, long k);

class BellTriangle {
public:
    explicit BellTriangle(std::size_t order) : entries_(order) {}

    std::size_t order() const { return entries_.order(); }
    const MPoly& operator()(std::size_t n, std::size_t k) const { return entries_(n, k); }
    MPoly& operator()(std::size_t n, std::size_t k) { return entries_(n, k); }

    // Every entry evaluated at y_i = values[i-1].
    template <class V>
    Composita<V> eval(std::span<const V> values) const {
        return transform<V>(entries_, [&](const MPoly& p) { return p.eval(values); });
    }

    friend bool operator==(const BellTriangle&, const BellTriangle&) = default;

private:
    Composita<MPoly> entries_;
};

// Generic triangle through the composita engine; throws EngineError if any
// entry fails to have integer coefficients.
BellTriangle bell_generic(std::size_t order);

// n-th derivative of g(y(x)) = sum_k g^(k)(y(x)) B(n,k):
// g_derivs[k-1] = g^(k), bell_row[k-1] = B(n,k) evaluated at y^(i)(x).
template <class R>
R faa_di_bruno(std::size_t n, std::span<const R> g_derivs, std::span<const R> bell_row) {
    if (g_derivs.size() < n || bell_row.size() < n)
        throw std::invalid_argument("faa_di_bruno: need n outer derivatives and n Bell entries");
    R acc = Ring<R>::zero();
    for (std::size_t k = 1; k <= n; ++k) acc = acc + g_derivs[k - 1] * bell_row[k - 1];
    return acc;
}

// Row n of B(n,k), k = 1..n, from a composita.
template <class R>
std::vector<R> bell_row(const Composita<R>& c, std::size_t n) {
    std::vector<R> row;
    row.reserve(n);
    for (std::size_t k = 1; k <= n; ++k) row.push_back(to_bell(c, n, k));
    return row;
}

}  // namespace compositae
