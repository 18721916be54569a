#pragma once

#include <stdexcept>
#include <string>

namespace boolmeas {

// Input that violates an operation's precondition or a schema.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& message)
      : std::invalid_argument(message), message_(message) {}
  ValidationError(std::string where, const std::string& message)
      : std::invalid_argument(where.empty() ? message : where + ": " + message),
        where_(std::move(where)),
        message_(message) {}

  // JSON pointer (or position) of the offending field, when known.
  const std::string& where() const noexcept { return where_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::string where_;
  std::string message_;
};

// A documented enumeration or size cap was exceeded.
class CapExceeded : public std::length_error {
 public:
  explicit CapExceeded(const std::string& what) : std::length_error(what) {}
};

}  // namespace boolmeas
