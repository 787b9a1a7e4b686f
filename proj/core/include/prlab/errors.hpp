#pragma once

#include <stdexcept>
#include <string>

namespace prlab {

// Input file could not be parsed. `line` is 1-based; 0 means "not line-addressable"
// (e.g. a bad catalog token).
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, int line = 0)
        : std::runtime_error(std::move(message)), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// An exact computation was requested above the scale its cap allows.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace prlab
