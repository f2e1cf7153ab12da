#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace epibound {

/// Invalid input: malformed documents, out-of-range values, broken preconditions.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Problem size exceeds a configured hard cap.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An iterative scheme ran out of iterations. Carries the residual history.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, std::vector<double> residual_history)
        : std::runtime_error(what), residuals(std::move(residual_history)) {}
    std::vector<double> residuals;
};

/// Time stepping failed (step size underflow); reports the last accepted time.
class IntegrationError : public std::runtime_error {
public:
    IntegrationError(const std::string& what, double last_time)
        : std::runtime_error(what), last_accepted_time(last_time) {}
    double last_accepted_time;
};

/// NaN/Inf encountered in a numerical kernel.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace epibound
