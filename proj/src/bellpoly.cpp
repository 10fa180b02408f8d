#include "compositae/bellpoly.hpp"

#include <stdexcept>
#include <string>

namespace compositae {

CompositionIterator::CompositionIterator(long n, long k) : n_(n), k_(k) {
    if (k < 1 || n < k) {
        done_ = true;
        return;
    }
    parts_.assign(static_cast<std::size_t>(k), 1);
    parts_.back() = n - k + 1;
}

CompositionIterator& CompositionIterator::operator++() {
    if (done_) return *this;
    // Rightmost i < k-1 whose suffix has slack; bump it and reset the suffix
    // to (1, ..., 1, rest).
    long suffix = parts_.back();
    for (long i = k_ - 2; i >= 0; --i) {
        const long slots = k_ - 1 - i;
        if (suffix > slots) {
            ++parts_[static_cast<std::size_t>(i)];
            const long rest = suffix - 1;
            for (long j = i + 1; j < k_ - 1; ++j) parts_[static_cast<std::size_t>(j)] = 1;
            parts_.back() = rest - (slots - 1);
            return *this;
        }
        suffix += parts_[static_cast<std::size_t>(i)];
    }
    done_ = true;
    return *this;
}

std::vector<std::vector<long>> enumerate_compositions(long n, long k) {
    std::vector<std::vector<long>> out;
    for (CompositionIterator it(n, k); it; ++it) out.push_back(*it);
    return out;
}

MPoly bell_bruteforce(long n, long k) {
    if (k < 1 || n < k) throw std::invalid_argument("bell_bruteforce: need 1 <= k <= n");
    MPoly acc;
    const Rational prefactor = make_rational(factorial(n), factorial(k));
    for (CompositionIterator it(n, k); it; ++it) {
        std::vector<std::uint32_t> e;
        Rational weight = prefactor;
        for (long part : *it) {
            if (e.size() < static_cast<std::size_t>(part)) e.resize(static_cast<std::size_t>(part), 0);
            ++e[static_cast<std::size_t>(part - 1)];
            weight /= Rational(factorial(part));
        }
        acc += MPoly::term(Monomial(std::move(e)), weight);
    }
    return acc;
}

BellTriangle bell_generic(std::size_t order) {
    if (order == 0) throw std::invalid_argument("bell_generic: order must be at least 1");
    // Generic delta series sum_i d_i z^i with d_i the i-th indeterminate.
    Series<MPoly> generic(order);
    for (std::size_t i = 1; i <= order; ++i) generic[i] = MPoly::variable(i);
    const Composita<MPoly> c = from_series(generic, order);

    // d_i -> y_i / i!
    std::vector<MPoly> assignment;
    for (std::size_t i = 1; i <= order; ++i)
        assignment.push_back(MPoly::variable(i) * make_rational(1, factorial(static_cast<long>(i))));

    BellTriangle t(order);
    for (std::size_t n = 1; n <= order; ++n)
        for (std::size_t k = 1; k <= n; ++k) {
            MPoly b = to_bell(c, n, k).substitute(assignment);
            if (!b.has_integer_coefficients())
                throw EngineError("generic Bell polynomial B(" + std::to_string(n) + "," + std::to_string(k) +
                                  ") has a non-integer coefficient: " + b.str());
            t(n, k) = std::move(b);
        }
    return t;
}

}  // namespace compositae
