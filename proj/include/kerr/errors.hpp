#pragma once

#include <stdexcept>
#include <string>

namespace kerr {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid mathematical input: poles, vanishing denominators, wrong-mode calls.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Pole of Gamma at a nonpositive integer, or a vanishing denominator
// Pochhammer symbol in a hypergeometric sum.
class PoleError : public DomainError {
public:
    explicit PoleError(const std::string& msg) : DomainError(msg) {}
};

// Working precision would have to exceed PrecisionContext::max_bits.
class PrecisionCapError : public Error {
public:
    explicit PrecisionCapError(const std::string& msg) : Error(msg) {}
};

// A series or iteration failed to converge within its term/iteration cap.
class ConvergenceError : public Error {
public:
    explicit ConvergenceError(const std::string& msg) : Error(msg) {}
};

// A truncated sum was consumed beyond its reliable range; callers react by
// rebuilding with a larger cutoff.
class InsufficientCutoffError : public ConvergenceError {
public:
    explicit InsufficientCutoffError(const std::string& msg) : ConvergenceError(msg) {}
};

// The series cutoff search exceeded its hard cap.
class CutoffCapError : public ConvergenceError {
public:
    explicit CutoffCapError(const std::string& msg) : ConvergenceError(msg) {}
};

// Fock-space truncation too small for the requested object.
class TruncationError : public ConvergenceError {
public:
    explicit TruncationError(const std::string& msg) : ConvergenceError(msg) {}
};

// Superoperator dimension beyond the configured guard.
class DimensionCapError : public Error {
public:
    explicit DimensionCapError(const std::string& msg) : Error(msg) {}
};

// Linear solve failed (singular or numerically unusable system).
class SingularSolveError : public Error {
public:
    explicit SingularSolveError(const std::string& msg) : Error(msg) {}
};

// stability_of() called on a point that does not satisfy the fixed-point
// residual bound.
class NotAFixedPointError : public DomainError {
public:
    explicit NotAFixedPointError(const std::string& msg) : DomainError(msg) {}
};

// Configuration errors carry the offending field name.
class ConfigError : public Error {
public:
    ConfigError(const std::string& field, const std::string& msg)
        : Error(field + ": " + msg), field_(field) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

// Any solver-level failure surfaced through the CLI with exit status 3.
class SolverError : public Error {
public:
    explicit SolverError(const std::string& msg) : Error(msg) {}
};

} // namespace kerr
