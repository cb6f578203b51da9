#pragma once

#include <stdexcept>
#include <string>

namespace quif5 {

// Exit-code classes used by the CLI.
enum class ErrorClass {
    Usage = 1,
    Parse = 2,
    Semantic = 3,
    Computation = 4,
    OracleMismatch = 5,
};

class Error : public std::runtime_error {
public:
    Error(ErrorClass cls, std::string msg) : std::runtime_error(std::move(msg)), cls_(cls) {}
    ErrorClass cls() const { return cls_; }

private:
    ErrorClass cls_;
};

class ParseError : public Error {
public:
    ParseError(int line, int col, const std::string& msg)
        : Error(ErrorClass::Parse,
                std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
          line_(line), col_(col) {}
    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_, col_;
};

class SemanticError : public Error {
public:
    explicit SemanticError(const std::string& msg) : Error(ErrorClass::Semantic, msg) {}
};

class ComputationError : public Error {
public:
    explicit ComputationError(const std::string& msg) : Error(ErrorClass::Computation, msg) {}
};

class DivisionByZero : public ComputationError {
public:
    DivisionByZero() : ComputationError("division by zero in prime field") {}
};

class NotADivisor : public ComputationError {
public:
    NotADivisor() : ComputationError("path is not a prefix of the given path") {}
};

class NotBasic : public ComputationError {
public:
    explicit NotBasic(const std::string& msg) : ComputationError("not a basic algebra: " + msg) {}
};

class DegreeCapExceeded : public ComputationError {
public:
    explicit DegreeCapExceeded(int cap)
        : ComputationError("auto nilpotency detection exceeded degree cap " + std::to_string(cap)) {}
};

class NonHomogeneousAuto : public ComputationError {
public:
    NonHomogeneousAuto()
        : ComputationError("nilpotency auto requires degree-homogeneous relations") {}
};

class InconsistentTruncation : public ComputationError {
public:
    explicit InconsistentTruncation(const std::string& msg)
        : ComputationError("inconsistent truncation (nilpotency bound too small?): " + msg) {}
};

class WrongOrdering : public ComputationError {
public:
    explicit WrongOrdering(const std::string& what)
        : ComputationError(what + " requires a negative degree ordering") {}
};

class InternalError : public Error {
public:
    explicit InternalError(const std::string& msg)
        : Error(ErrorClass::Computation, "internal invariant violated: " + msg) {}
};

}  // namespace quif5
