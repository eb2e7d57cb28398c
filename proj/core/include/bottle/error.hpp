#ifndef BOTTLE_ERROR_HPP
#define BOTTLE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace bottle {

// Thrown when an iterative numerical procedure fails to converge
// (quadrature refinement cap, bisection bracket failure, ...).
// Validation problems use std::domain_error / std::invalid_argument.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace bottle

#endif
