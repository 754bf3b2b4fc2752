#pragma once

#include <stdexcept>
#include <string>

namespace gramcap {

// Bad user-supplied data (out-of-range twist, non-finite length, malformed spec).
class validation_error : public std::invalid_argument {
public:
    explicit validation_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// A polygon relation has no solution for the given lengths, or an argument sits
// at/beyond a pole of one of the closed forms. The message names the relation.
class infeasible_error : public std::domain_error {
public:
    explicit infeasible_error(const std::string& msg) : std::domain_error(msg) {}
};

// Quadrature or the discrete solver failed to reach its tolerance.
class convergence_error : public std::runtime_error {
public:
    explicit convergence_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace gramcap
