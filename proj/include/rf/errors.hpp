#pragma once

#include <stdexcept>
#include <string>

namespace rf {

// Caller violated a documented precondition (bad vertex id, malformed params, ...).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Malformed text input; line/column are 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string & what, int line, int column) :
        std::runtime_error(what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
        line_(line),
        column_(column)
    {
    }

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace rf
