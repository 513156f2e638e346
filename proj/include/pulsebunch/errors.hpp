#ifndef PULSEBUNCH_ERRORS_HPP
#define PULSEBUNCH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pulsebunch {

// Invalid or inconsistent configuration (bad parameter values, unknown
// config keys, out-of-scope parameter combinations).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Numerical failure (quadrature non-convergence, root-count mismatch, ...).
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

class QuadratureError : public NumericError {
public:
    explicit QuadratureError(const std::string& msg) : NumericError(msg) {}
};

class RootCountError : public NumericError {
public:
    RootCountError(const std::string& msg, int found_, int expected_)
        : NumericError(msg), found(found_), expected(expected_) {}
    int found;
    int expected;
};

class FitError : public std::runtime_error {
public:
    explicit FitError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace pulsebunch

#endif
