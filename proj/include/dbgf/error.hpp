#pragma once

#include <stdexcept>
#include <string>

namespace dbgf {

enum class ErrorKind {
  invalid_order,
  order_mismatch,
  order_too_large,
  not_debruijn,
  inexact_division,
  domain,
  unsupported_spec,
  degree_exceeds,
  parse,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace dbgf
