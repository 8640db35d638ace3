#pragma once

#include <stdexcept>
#include <string>

namespace gie {

// Input outside an operation's mathematical domain (r <= 0, NaN, null momentum).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Experiment or run configuration that violates its invariants.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class QuadratureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace gie
