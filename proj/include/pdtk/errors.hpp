#pragma once

#include <stdexcept>
#include <string>

namespace pdtk {

// Mismatched dimensions in quantity arithmetic or conversion.
class DimensionError : public std::domain_error {
public:
    explicit DimensionError(const std::string& what) : std::domain_error(what) {}
};

// Invalid user input (scenario files, CLI parameters). The message starts
// with the offending key path when one exists, e.g. "lifetime.value: ...".
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Quadrature refinement cap exceeded or a numerical self-check failed.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace pdtk
