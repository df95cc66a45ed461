#pragma once

#include <stdexcept>
#include <string>

namespace cyclex {

/// Base class for every failure raised by the engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class RangeNotCertified : public Error {
public:
    using Error::Error;
};

class DegreeMismatch : public Error {
public:
    using Error::Error;
};

class ShapeError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(int line, int column, const std::string& message)
        : Error("line " + std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line), column_(column), message_(message) {}

    int line() const { return line_; }
    int column() const { return column_; }
    const std::string& message() const { return message_; }

private:
    int line_;
    int column_;
    std::string message_;
};

class AssociativityError : public Error {
public:
    AssociativityError(int i, int j, int k)
        : Error("associativity fails on basis triple (" + std::to_string(i) + "," + std::to_string(j) +
                "," + std::to_string(k) + ")"),
          i_(i), j_(j), k_(k) {}

    /// 1-based indices of the violating triple.
    int i() const { return i_; }
    int j() const { return j_; }
    int k() const { return k_; }

private:
    int i_, j_, k_;
};

class UnitError : public Error {
public:
    using Error::Error;
};

class NotAugmented : public Error {
public:
    using Error::Error;
};

class IdealNotNilpotent : public Error {
public:
    using Error::Error;
};

class NotAnIdeal : public Error {
public:
    using Error::Error;
};

class NotNilpotent : public Error {
public:
    using Error::Error;
};

class MorphismError : public Error {
public:
    using Error::Error;
};

class LieError : public Error {
public:
    using Error::Error;
};

class SizeLimit : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

} // namespace cyclex
