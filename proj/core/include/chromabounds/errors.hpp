#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chromabounds {

/// Input text could not be decoded. byte_offset() points at the first bad byte.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t byte_offset)
        : std::runtime_error(what), byte_offset_(byte_offset) {}

    std::size_t byte_offset() const noexcept { return byte_offset_; }

private:
    std::size_t byte_offset_;
};

/// A documented size or work cap would be exceeded (graph too large,
/// enumeration budget blown, ...). Deliberate refusal, not a malfunction.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Iterative numerics failed to reach the requested residual.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double worst_residual)
        : std::runtime_error(what), worst_residual_(worst_residual) {}

    double worst_residual() const noexcept { return worst_residual_; }

private:
    double worst_residual_;
};

/// Exact evaluation hit a zero denominator (evaluation at a polynomial root).
class PoleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace chromabounds
