#pragma once

#include <stdexcept>
#include <string>

namespace pointscheme {

enum class ErrorKind {
  parse,
  precondition,
  cap_exceeded,
  arithmetic,
};

/// Single exception type for the library; the kind drives CLI exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline Error precondition_error(const std::string& what) {
  return Error(ErrorKind::precondition, what);
}

inline Error parse_error(const std::string& what) {
  return Error(ErrorKind::parse, what);
}

}  // namespace pointscheme
