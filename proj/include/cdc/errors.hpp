#pragma once

#include <stdexcept>
#include <string>

namespace cdc {

/// Thrown when an enumeration or search would exceed a configured cap.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when a file or stream does not match the expected format.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cdc
