#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace compositae {

// Two compositae (or series) of different orders were combined.
class OrderMismatch : public std::invalid_argument {
public:
    OrderMismatch(std::size_t a, std::size_t b)
        : std::invalid_argument("order mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

// The leading entry Y(1,1) has no inverse in the coefficient ring.
class NotInvertible : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// An evaluation point lies outside a function's domain of validity.
class DomainError : public std::domain_error {
public:
    DomainError(std::string atom, const std::string& what)
        : std::domain_error(atom + ": " + what), atom_(std::move(atom)) {}
    const std::string& atom() const { return atom_; }

private:
    std::string atom_;
};

// An internal consistency check failed (e.g. a generic Bell polynomial with a
// non-integer coefficient). Indicates a bug, not bad input.
class EngineError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace compositae
