#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sumprod {

__extension__ using u128 = unsigned __int128;
__extension__ using i128 = __int128;

enum class ErrorKind {
  ZeroInverse,
  DegenerateQuadruple,
  NotPrime,
  BadOrder,
  SizeTooLarge,
  EmptyResult,
  ZeroDilation,
  BudgetExceeded,
  MethodUnavailable,
  TooSmall,
  EmptyDirection,
  UnknownCheck,
  InsufficientData,
  IoError,
  InvalidArgument,
  Overflow,
  ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// All library failures are reported through this one exception type; the
/// kind() tells callers (the CLI in particular) how to react.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Abstract operation budget. Costs are estimated up front from input sizes,
/// never measured, so the same inputs always pass or fail the same way.
struct Budget {
  std::uint64_t max_ops = std::numeric_limits<std::uint64_t>::max();

  static Budget unlimited() { return {}; }
  static Budget ops(std::uint64_t n) { return Budget{n}; }

  bool allows(long double ops) const noexcept {
    return ops <= static_cast<long double>(max_ops);
  }
  // Throws BudgetExceeded when `ops` is over the limit.
  void require(long double ops, std::string_view what) const;
};

// Narrow a 128-bit accumulator, throwing Overflow if it does not fit.
std::uint64_t narrow_u64(u128 value, std::string_view what);

std::string to_decimal(u128 value);
std::string to_decimal(i128 value);

}  // namespace sumprod
