#pragma once

#include <stdexcept>
#include <string>

namespace fht {

// Thrown when an evaluation point lies outside the operator's domain.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown when a principal-value request coincides with a jump of the input.
class SingularPointError : public std::runtime_error {
public:
    SingularPointError(const std::string& msg, double point)
        : std::runtime_error(msg), point(point) {}
    double point;
};

// Thrown when an input sample is non-finite.
class InvalidInputError : public std::runtime_error {
public:
    explicit InvalidInputError(const std::string& msg, double where = 0.0)
        : std::runtime_error(msg), where(where) {}
    double where;
};

// Thrown when adaptive quadrature exhausts its panel budget. Carries the
// best value obtained so far together with its error estimate.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& msg, double best_value, double est_error)
        : std::runtime_error(msg), best_value(best_value), est_error(est_error) {}
    double best_value;
    double est_error;
};

// Expression parse failure with source location.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line, int column)
        : std::runtime_error(msg), line(line), column(column) {}
    int line;
    int column;
};

}  // namespace fht
