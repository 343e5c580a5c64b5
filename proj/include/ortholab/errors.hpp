#ifndef ORTHOLAB_ERRORS_HPP
#define ORTHOLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ortholab {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& msg) : std::domain_error(msg) {}
};

// Point violates a convergence guard (hypergeometric argument bound,
// ellipse membership, disk radius).  Distinct from DomainError so callers
// can tell "outside the natural domain" from "inside, but the series
// guard refuses to evaluate".
class GuardError : public DomainError {
public:
    explicit GuardError(const std::string& msg) : DomainError(msg) {}
};

// A truncated series failed to reach the requested tolerance.
class TruncationError : public std::runtime_error {
public:
    explicit TruncationError(const std::string& msg) : std::runtime_error(msg) {}
};

// A recurrence or sum left the representable range.
class OverflowError : public std::runtime_error {
public:
    explicit OverflowError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace ortholab

#endif
