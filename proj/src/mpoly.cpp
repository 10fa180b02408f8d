#include "compositae/mpoly.hpp"

#include <algorithm>

namespace compositae {

Monomial::Monomial(std::vector<std::uint32_t> exponents) : e_(std::move(exponents)) { trim(); }

Monomial Monomial::variable(std::size_t index, std::uint32_t power) {
    if (index == 0) throw std::invalid_argument("indeterminates are numbered from 1");
    std::vector<std::uint32_t> e(index, 0);
    e[index - 1] = power;
    return Monomial(std::move(e));
}

std::uint32_t Monomial::exponent(std::size_t index) const {
    return (index >= 1 && index <= e_.size()) ? e_[index - 1] : 0;
}

std::uint64_t Monomial::degree() const {
    std::uint64_t d = 0;
    for (auto x : e_) d += x;
    return d;
}

void Monomial::trim() {
    while (!e_.empty() && e_.back() == 0) e_.pop_back();
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    std::vector<std::uint32_t> e(std::max(a.e_.size(), b.e_.size()), 0);
    for (std::size_t i = 0; i < a.e_.size(); ++i) e[i] += a.e_[i];
    for (std::size_t i = 0; i < b.e_.size(); ++i) e[i] += b.e_[i];
    return Monomial(std::move(e));
}

bool GradedLexGreater::operator()(const Monomial& a, const Monomial& b) const {
    const auto da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    const auto& ea = a.exponents();
    const auto& eb = b.exponents();
    const std::size_t n = std::max(ea.size(), eb.size());
    for (std::size_t i = 0; i < n; ++i) {
        const auto x = i < ea.size() ? ea[i] : 0u;
        const auto y = i < eb.size() ? eb[i] : 0u;
        if (x != y) return x > y;
    }
    return false;
}

// ---------------------------------------------------------------------------

MPoly::MPoly(const Rational& c) {
    if (c != 0) terms_.emplace(Monomial(), c);
}

MPoly MPoly::variable(std::size_t index) { return term(Monomial::variable(index), 1); }

MPoly MPoly::term(const Monomial& m, const Rational& c) {
    MPoly p;
    p.add_term(m, c);
    return p;
}

bool MPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.num_vars() == 0);
}

Rational MPoly::constant_term() const {
    auto it = terms_.find(Monomial());
    return it == terms_.end() ? Rational(0) : it->second;
}

std::size_t MPoly::num_vars() const {
    std::size_t n = 0;
    for (const auto& [m, c] : terms_) n = std::max(n, m.num_vars());
    return n;
}

bool MPoly::has_integer_coefficients() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.get_den() == 1; });
}

Rational MPoly::coefficient_sum() const {
    Rational s = 0;
    for (const auto& [m, c] : terms_) s += c;
    return s;
}

void MPoly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MPoly& MPoly::operator+=(const MPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, Rational(-c));
    return *this;
}

MPoly& MPoly::operator*=(const MPoly& o) {
    MPoly r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, Rational(ca * cb));
    terms_ = std::move(r.terms_);
    return *this;
}

MPoly& MPoly::operator*=(const Rational& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
}

MPoly operator-(MPoly a) {
    for (auto& [m, c] : a.terms_) c = -c;
    return a;
}

MPoly MPoly::pow(unsigned k) const {
    MPoly result(1), base = *this;
    while (k > 0) {
        if (k & 1u) result *= base;
        k >>= 1;
        if (k > 0) base *= base;
    }
    return result;
}

namespace {

template <class V, class One, class Mul>
V eval_terms(const MPoly::Terms& terms, std::span<const V> values, V zero, One one, Mul mul_coeff) {
    V total = zero;
    for (const auto& [m, c] : terms) {
        V t = one();
        const auto& e = m.exponents();
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (i >= values.size()) throw UnboundIndeterminate(i + 1);
            for (std::uint32_t p = 0; p < e[i]; ++p) t = t * values[i];
        }
        total = total + mul_coeff(c, t);
    }
    return total;
}

}  // namespace

MPoly MPoly::substitute(std::span<const MPoly> assignment) const {
    return eval_terms<MPoly>(
        terms_, assignment, MPoly(), [] { return MPoly(1); },
        [](const Rational& c, const MPoly& t) { return t * c; });
}

MPoly MPoly::substitute(std::span<const Rational> assignment) const {
    return MPoly(eval(assignment));
}

Rational MPoly::eval(std::span<const Rational> point) const {
    return eval_terms<Rational>(
        terms_, point, Rational(0), [] { return Rational(1); },
        [](const Rational& c, const Rational& t) { return Rational(c * t); });
}

double MPoly::eval(std::span<const double> point) const {
    return eval_terms<double>(
        terms_, point, 0.0, [] { return 1.0; }, [](const Rational& c, double t) { return c.get_d() * t; });
}

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational mag = abs(c);
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        std::string factors;
        const auto& e = m.exponents();
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!factors.empty()) factors += "*";
            factors += "y" + std::to_string(i + 1);
            if (e[i] > 1) factors += "^" + std::to_string(e[i]);
        }
        if (factors.empty()) {
            out += to_string(mag);
        } else if (mag == 1) {
            out += factors;
        } else {
            out += to_string(mag) + "*" + factors;
        }
    }
    return out;
}

}  // namespace compositae
