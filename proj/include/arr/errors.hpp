#pragma once

#include <stdexcept>
#include <string>

namespace arr {

// Malformed input (file contents, tokens). CLI maps this to exit code 2.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// A mathematical invariant the library guarantees was observed to fail.
// Never caught internally; CLI maps this to exit code 3.
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

// A configured resource budget (search nodes, enumeration size) ran out.
// CLI maps this to exit code 4.
struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

inline void internal_check(bool cond, const std::string& msg) {
  if (!cond) throw InternalError(msg);
}

}  // namespace arr
