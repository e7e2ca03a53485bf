#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace oddcrit {

// Invalid construction or theorem parameters (parity, nonpositive part sizes, ...).
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Distance-based quantities requested on a disconnected graph.
class DistanceUndefined : public std::domain_error {
public:
    DistanceUndefined() : std::domain_error("distance undefined") {}
};

// Exhaustive routines refuse inputs beyond their desk-scale limit.
class ScaleError : public std::length_error {
public:
    using std::length_error::length_error;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"), message_(what), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }
    // The message without the offset suffix.
    const std::string& message() const noexcept { return message_; }

private:
    std::string message_;
    std::size_t offset_;
};

}  // namespace oddcrit
