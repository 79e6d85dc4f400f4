#pragma once

#include <stdexcept>
#include <string>

namespace kcw {

enum class ErrorCode {
  ok = 0,
  invalid_argument = 1,
  dimension_mismatch = 2,
  context_mismatch = 3,
  budget_exceeded = 4,
  parse_error = 5,
  io_error = 6,
  malformed_input = 7,
  verify_failed = 8,   // internal self-check failed: signals a bug, not bad input
  unbound_variable = 9,
  unsupported_model = 10,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) { throw Error(code, msg); }

}  // namespace kcw
