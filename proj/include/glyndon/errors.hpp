#pragma once

#include <stdexcept>
#include <string>

namespace glyndon {

/// Bad request: malformed syntax, missing argument, out-of-budget call.
class usage_error : public std::runtime_error {
public:
    explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

/// Value outside the mathematical domain of the operation (symbol not in
/// the alphabet, empty word where a nonempty one is required, ...).
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

/// An internal guarantee failed. Always a bug, never bad input.
class invariant_violation : public std::runtime_error {
public:
    explicit invariant_violation(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace glyndon
