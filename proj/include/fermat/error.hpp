#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fermat {

/// Malformed textual input; carries the byte offset where parsing stopped.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// A computation that could not be completed (e.g. exhausted random redraws).
class ComputationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace fermat
