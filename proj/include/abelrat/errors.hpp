#pragma once

#include <stdexcept>
#include <string>

namespace abelrat {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZeroPoly : public Error {
public:
    DivisionByZeroPoly() : Error("division by the zero polynomial") {}
};

class ZeroInput : public Error {
public:
    explicit ZeroInput(const std::string& op) : Error(op + ": zero input") {}
};

class NotSquarefree : public Error {
public:
    NotSquarefree() : Error("polynomial is not squarefree") {}
};

class ContextMismatch : public Error {
public:
    ContextMismatch() : Error("operands live in different algebraic contexts") {}
};

class ZeroInverse : public Error {
public:
    ZeroInverse() : Error("inverse of zero") {}
};

class InvalidEquation : public Error {
public:
    using Error::Error;
};

class InsufficientPrefix : public Error {
public:
    using Error::Error;
};

class ClassificationFailure : public Error {
public:
    using Error::Error;
};

class NonIncreasing : public Error {
public:
    NonIncreasing() : Error("degrees must be strictly increasing") {}
};

class InternalInconsistency : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line, int col)
        : Error(msg + " at line " + std::to_string(line) + ", column " + std::to_string(col)),
          raw_(msg), line_(line), col_(col) {}
    const std::string& message() const { return raw_; }
    int line() const { return line_; }
    int column() const { return col_; }

private:
    std::string raw_;
    int line_;
    int col_;
};

}  // namespace abelrat
