#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wittkit {

/// Base of every error raised by the library. Each subclass names one failure
/// mode so callers (and the CLI exit-code mapping) can dispatch on type.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

class ReconstructionInconclusive : public Error {
public:
    using Error::Error;
};

class IrreducibilityUnproven : public Error {
public:
    using Error::Error;
};

class BudgetExceeded : public Error {
public:
    BudgetExceeded(std::size_t attempted, std::size_t budget, const std::string& what)
        : Error("work budget exceeded: " + what + " needs " + std::to_string(attempted) +
                " > budget " + std::to_string(budget)),
          attempted_(attempted), budget_(budget) {}
    std::size_t attempted() const noexcept { return attempted_; }
    std::size_t budget() const noexcept { return budget_; }

private:
    std::size_t attempted_;
    std::size_t budget_;
};

class NotEquivariant : public Error {
public:
    using Error::Error;
};

class NotHomomorphism : public Error {
public:
    using Error::Error;
};

class NotStabilized : public Error {
public:
    using Error::Error;
};

class ShapeMismatch : public Error {
public:
    using Error::Error;
};

class InsufficientRoots : public Error {
public:
    using Error::Error;
};

class DegenerateInput : public Error {
public:
    using Error::Error;
};

class InconsistentDivisionData : public Error {
public:
    using Error::Error;
};

class GaloisNontrivial : public Error {
public:
    using Error::Error;
};

class ObstructionUndecidable : public Error {
public:
    using Error::Error;
};

class NotGraded : public Error {
public:
    using Error::Error;
};

class UnfactoredRemainder : public Error {
public:
    explicit UnfactoredRemainder(int degree)
        : Error("unfactored remainder of degree " + std::to_string(degree)), degree_(degree) {}
    int degree() const noexcept { return degree_; }

private:
    int degree_;
};

class Inconclusive : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& reason)
        : Error("parse error at line " + std::to_string(line) + ": " + reason), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class InvariantViolation : public Error {
public:
    explicit InvariantViolation(std::string name)
        : Error("invariant violation: " + name), name_(std::move(name)) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

}  // namespace wittkit
