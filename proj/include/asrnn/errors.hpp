#pragma once

#include <stdexcept>
#include <string>

namespace asrnn {

// Input/precondition violations. The CLI maps these to exit code 1.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Numerical failures: divergence, eigensolver non-convergence. Exit code 2.
struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace asrnn
