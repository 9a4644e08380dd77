#pragma once

#include <stdexcept>
#include <string>

namespace geoclique {

/// Malformed input: bad file, dimension mismatch, out-of-range argument.
struct invalid_input : std::runtime_error {
    explicit invalid_input(const std::string& what) : std::runtime_error(what) {}
};

/// Exact search exceeded its configured clique-count or node-expansion cap.
struct budget_exceeded : std::runtime_error {
    explicit budget_exceeded(const std::string& what) : std::runtime_error(what) {}
};

/// A guaranteed-by-construction property failed to hold. Never expected.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace geoclique
