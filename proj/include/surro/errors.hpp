#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace surro {

// Base class for all recoverable toolkit errors. The CLI maps NumericError
// to exit code 3 and every other Error to exit code 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

class DegenerateColumnError : public Error {
public:
    using Error::Error;
};

class ExtrapolationError : public Error {
public:
    using Error::Error;
};

class NumericError : public Error {
public:
    using Error::Error;
};

// CSV parse failure carrying the 1-based file position of the offending cell.
class CsvError : public Error {
public:
    CsvError(const std::string& message, std::string path, std::size_t line, std::size_t column)
        : Error(message + " (" + path + ":" + std::to_string(line) + ", column " +
                std::to_string(column) + ")"),
          path_(std::move(path)),
          line_(line),
          column_(column) {}

    const std::string& path() const { return path_; }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::string path_;
    std::size_t line_;
    std::size_t column_;
};

}  // namespace surro
