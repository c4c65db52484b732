#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace commgraph {

enum class ErrorKind {
  IndexOutOfRange,
  InconsistentPresentation,
  OrderCapExceeded,
  ConstraintViolated,
  ParseError,
  NotAGroup,
  IdentityNotZero,
  AbelianGroup,
  NoFactorization,
  GraphDisconnected,
  InvalidArgument,
  IoError,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace commgraph
