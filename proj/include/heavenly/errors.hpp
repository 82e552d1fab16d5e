#pragma once

#include <stdexcept>
#include <string>

namespace heavenly {

// Evaluation hit a point where a scalar function is undefined, or a class
// parameter sits on a forbidden denominator.
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

struct UnknownEquation : std::runtime_error {
    explicit UnknownEquation(const std::string& what) : std::runtime_error(what) {}
};

// Too few terms for an operation that needs a fixed arity (e.g. 4x4 Jacobian).
struct ArityError : std::runtime_error {
    explicit ArityError(const std::string& what) : std::runtime_error(what) {}
};

// A class side condition failed at instantiation time.
struct ConstraintError : std::runtime_error {
    explicit ConstraintError(const std::string& what) : std::runtime_error(what) {}
};

// A metric denominator vanished; carries the factor name.
struct SingularDenominator : std::runtime_error {
    explicit SingularDenominator(const std::string& factor)
        : std::runtime_error("singular denominator: " + factor), factor_name(factor) {}
    std::string factor_name;
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace heavenly
