#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dirichlet {

// Argument lies on (or within the guard radius of) a singularity.
class PoleError : public std::domain_error {
public:
    explicit PoleError(const std::string& what) : std::domain_error("pole: " + what) {}
};

// Adaptive quadrature ran out of depth before meeting the requested tolerance.
class NonConvergence : public std::runtime_error {
public:
    explicit NonConvergence(const std::string& what)
        : std::runtime_error("nonconvergence: " + what) {}
};

// Evaluation of a weight function failed at a specific abscissa.
class EvalError : public std::domain_error {
public:
    EvalError(const std::string& what, double x)
        : std::domain_error(what), x_(x) {}
    double x() const noexcept { return x_; }

private:
    double x_;
};

// The weight function violates f(x + pi) = f(x) or f(pi - x) = f(x).
class SymmetryError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " at position " + std::to_string(position)),
          position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace dirichlet
