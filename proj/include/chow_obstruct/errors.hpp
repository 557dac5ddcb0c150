#pragma once

#include <stdexcept>
#include <string>

namespace chowob {

/// Base class for every recoverable domain failure. `kind()` is a stable
/// identifier used in structured (JSON) error output.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

class AmbientMismatch : public DomainError {
 public:
  explicit AmbientMismatch(const std::string& msg) : DomainError("AmbientMismatch", msg) {}
};

class InfiniteGroup : public DomainError {
 public:
  explicit InfiniteGroup(const std::string& msg) : DomainError("InfiniteGroup", msg) {}
};

class InapplicableAssumption : public DomainError {
 public:
  explicit InapplicableAssumption(const std::string& msg)
      : DomainError("InapplicableAssumption", msg) {}
};

class DimensionUnsupported : public DomainError {
 public:
  explicit DimensionUnsupported(const std::string& msg)
      : DomainError("DimensionUnsupported", msg) {}
};

class InvalidArgument : public DomainError {
 public:
  explicit InvalidArgument(const std::string& msg) : DomainError("InvalidArgument", msg) {}
};

/// Malformed textual input (matrix literal, class string, JSON file).
class ParseError : public DomainError {
 public:
  explicit ParseError(const std::string& msg) : DomainError("ParseError", msg) {}
};

}  // namespace chowob
