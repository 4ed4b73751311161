#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace photonpath {

/// Malformed or truncated input while decoding a binary/text artifact.
/// byte_offset() points at the first byte that could not be accepted.
class ParseError : public std::runtime_error {
public:
    ParseError(std::uint64_t byte_offset, const std::string& what)
        : std::runtime_error(what + " (byte offset " + std::to_string(byte_offset) + ")"),
          byte_offset_(byte_offset) {}

    std::uint64_t byte_offset() const noexcept { return byte_offset_; }

private:
    std::uint64_t byte_offset_ = 0;
};

/// Input is well-formed but statistically/structurally unusable
/// (empty sequence, zero variance, zero singles counts, ...).
class DegenerateInputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Nonlinear fit could not be performed on the given data.
class FitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace photonpath
