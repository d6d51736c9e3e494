#pragma once

#include <stdexcept>
#include <string>

namespace tailshare {

/// Base class for all tailshare errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid argument or precondition violation (bad grid, shares, parameters).
class InvalidInput : public Error {
public:
    explicit InvalidInput(const std::string& msg) : Error(msg) {}
};

/// A symmetric positive-definite factorization failed. Positive definiteness
/// holds in exact arithmetic, so this signals degenerate input (e.g.
/// near-coincident percentiles) or numerical breakdown.
class DegeneracyError : public Error {
public:
    explicit DegeneracyError(const std::string& msg) : Error(msg) {}
};

/// The observed shares are inconsistent with a Pareto tail with exponent > 0
/// (simple estimator log-ratio at or above 1).
class TailViolationError : public Error {
public:
    explicit TailViolationError(const std::string& msg) : Error(msg) {}
};

/// Requested significance level is outside the range for which the
/// conservative t-statistic guarantee holds.
class GuaranteeViolationError : public Error {
public:
    explicit GuaranteeViolationError(const std::string& msg) : Error(msg) {}
};

/// A line-addressed parse failure in a tabulation or config file.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

} // namespace tailshare
