#include "sumprod/errors.hpp"

#include <algorithm>

namespace sumprod {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ZeroInverse: return "ZeroInverse";
    case ErrorKind::DegenerateQuadruple: return "DegenerateQuadruple";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::BadOrder: return "BadOrder";
    case ErrorKind::SizeTooLarge: return "SizeTooLarge";
    case ErrorKind::EmptyResult: return "EmptyResult";
    case ErrorKind::ZeroDilation: return "ZeroDilation";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::MethodUnavailable: return "MethodUnavailable";
    case ErrorKind::TooSmall: return "TooSmall";
    case ErrorKind::EmptyDirection: return "EmptyDirection";
    case ErrorKind::UnknownCheck: return "UnknownCheck";
    case ErrorKind::InsufficientData: return "InsufficientData";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind) {}

void Budget::require(long double ops, std::string_view what) const {
  if (!allows(ops)) {
    throw Error(ErrorKind::BudgetExceeded,
                std::string(what) + " needs ~" +
                    std::to_string(static_cast<double>(ops)) +
                    " ops, budget is " + std::to_string(max_ops));
  }
}

std::uint64_t narrow_u64(u128 value, std::string_view what) {
  if (value > std::numeric_limits<std::uint64_t>::max()) {
    throw Error(ErrorKind::Overflow, std::string(what) + " exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(value);
}

std::string to_decimal(u128 value) {
  if (value == 0) return "0";
  std::string out;
  while (value > 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::string to_decimal(i128 value) {
  if (value < 0) return "-" + to_decimal(static_cast<u128>(-value));
  return to_decimal(static_cast<u128>(value));
}

}  // namespace sumprod
