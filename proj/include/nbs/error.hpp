#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nbs {

enum class ErrorKind {
  parse,
  range,
  domain,
  evaluation,
  overflow,
  insufficient_data,
  degenerate_sample,
  solver_failure,
  contract,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries a kind so that callers (the CLI
// in particular) can map it onto an exit status without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace nbs
