#pragma once

#include <stdexcept>
#include <string>

namespace gnatfam {

enum class ErrorKind {
  Input,
  NonFaithful,
  GroupTooLarge,
  DimensionUnsupported,
  InvalidFan,
  NotGWeil,
  NotIntegral,
  CatalogTooLarge,
};

const char* to_string(ErrorKind kind);

// All library failures are reported through this type; `kind()` separates
// malformed input from mathematically rejected input.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gnatfam
