#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ecctree {

enum class ErrorCode {
  NotATree,
  BadLabel,
  InvalidSequence,
  BadParameters,
  NotReducible,
  AlreadyCaterpillar,
  BadSubset,
  BadK,
  SizeLimit,
  ParseError,
  DomainError,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this exception; the code is
// stable and machine-readable, the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ecctree
