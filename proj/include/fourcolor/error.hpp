#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fourcolor {

enum class ErrorKind {
  NotInvolution,
  FixedPoint,
  Disconnected,
  BadLength,
  NotAPermutation,
  NotBipartite,
  BadCode,
  WrongArity,
  NotADipole,
  WouldDisconnect,
  BadColors,
  ColorMismatch,
  NotSingular,
  BadColorPair,
  BadGenus,
  Overflow,
  BudgetExceeded,
  CorruptFile,
};

std::string_view to_string(ErrorKind kind);

// Domain error raised by every module; the kind identifies which
// combinatorial condition was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace fourcolor
