#pragma once

#include <stdexcept>
#include <string>

namespace pidlab {

// Bad dimensions, non-finite input, violated preconditions.
class InvalidInputError : public std::invalid_argument {
public:
    explicit InvalidInputError(const std::string& what) : std::invalid_argument(what) {}
};

// An iterative method hit its cap or a solve broke down.
class NumericalFailureError : public std::runtime_error {
public:
    explicit NumericalFailureError(const std::string& what) : std::runtime_error(what) {}
};

// A state left the admissible range during time integration.
class DivergenceError : public std::runtime_error {
public:
    DivergenceError(const std::string& what, double time)
        : std::runtime_error(what), failing_time(time) {}
    double failing_time;
};

}  // namespace pidlab
