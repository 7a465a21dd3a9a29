#pragma once

/**
 * @file error.hpp
 * @brief Exception types shared by every eigenseq module.
 *
 * All failures are reported by throwing. The CLI maps DomainError (and its
 * subclasses) and ParseError to exit status 2.
 */

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eigenseq {

/// Input outside the domain of an operation (wrong offset, negative term for
/// F-CONV, too few terms, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A result that should be integral is not (EULER inverse in strict mode).
class NonIntegralError : public DomainError {
public:
    NonIntegralError(const std::string& what, std::size_t index)
        : DomainError(what), index_(index) {}
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

/// The affine probe found an output term that is not affine in the probed input term.
class NonlinearError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Iteration did not settle within the allowed number of steps.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Syntax error in a sequence literal or an operator expression; position is a
/// 1-based character column.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " at offset " + std::to_string(position)),
          position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace eigenseq
