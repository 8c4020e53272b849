#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mvsteg {

enum class Errc {
  ParseError,
  TruncatedInput,
  Unsupported,
  EmptyInput,
  NotAStegoContainer,
  CorruptContainer,
  InvalidDims,
  InvalidParams,
  HookRangeError,
  InsufficientCapacity,
  NoPayloadFound,
  CorruptPayload,
  KeyRequired,
  InvalidKey,
  InvalidComparison,
  Io,
};

std::string_view to_string(Errc code);

// Every failure in the library surfaces as an Error carrying one of the codes
// above; callers branch on code(), the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace mvsteg
