// errors.hpp
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace satbound {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// epsilon or delta outside the open interval (0,1).
class ParamError : public Error {
public:
    using Error::Error;
};

/// Malformed spectrum text. Carries the 1-based line (and column, 0 if n/a).
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : Error(format(line, column, what)), line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    static std::string format(std::size_t line, std::size_t column, const std::string& what) {
        std::string s = "line " + std::to_string(line);
        if (column != 0) s += ", column " + std::to_string(column);
        return s + ": " + what;
    }

    std::size_t line_;
    std::size_t column_;
};

/// Duplicate or empty target identifiers.
class SchemaError : public Error {
public:
    using Error::Error;
};

/// Row or universe length disagrees with the target list.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Operation needs at least one row of evidence.
class EmptySpectrumError : public Error {
public:
    using Error::Error;
};

/// Invalid synthetic SUT model (probabilities, duplicates, dimensions).
class ModelError : public Error {
public:
    using Error::Error;
};

}  // namespace satbound
