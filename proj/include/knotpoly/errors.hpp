#pragma once

#include <stdexcept>
#include <string>

namespace knotpoly {

// Caller passed something structurally invalid (bad index, wrong arity, ...).
struct usage_error : std::runtime_error {
    explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

// Input text could not be decoded.
struct parse_error : std::runtime_error {
    size_t position;  // token index where decoding failed
    parse_error(const std::string& what, size_t pos)
        : std::runtime_error(what + " (at token " + std::to_string(pos) + ")"), position(pos) {}
};

// Exponential-oracle resolution exceeded its budget.
struct budget_error : std::runtime_error {
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// An internal consistency check failed; indicates a bug, never bad user input.
struct invariant_error : std::logic_error {
    explicit invariant_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace knotpoly
