#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tknot {

/// Base error for every failure raised by the library. The message is
/// prefixed with the module that raised it, e.g. "presentations: ...".
class Error : public std::runtime_error {
 public:
  Error(std::string_view module, const std::string& what)
      : std::runtime_error(std::string(module) + ": " + what), module_(module) {}

  const std::string& module() const noexcept { return module_; }

 private:
  std::string module_;
};

/// Raised when an exact integer leaves the int64 range. Exponents,
/// matrix entries and polynomial coefficients are all int64; nothing wraps.
class OverflowError : public Error {
 public:
  explicit OverflowError(std::string_view module)
      : Error(module, "integer overflow (values are bounded by int64)") {}
};

namespace checked {

inline std::int64_t add(std::int64_t a, std::int64_t b, std::string_view module = "arith") {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError(module);
  return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b, std::string_view module = "arith") {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError(module);
  return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b, std::string_view module = "arith") {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError(module);
  return r;
}

inline std::int64_t neg(std::int64_t a, std::string_view module = "arith") {
  if (a == std::numeric_limits<std::int64_t>::min()) throw OverflowError(module);
  return -a;
}

inline std::int64_t abs(std::int64_t a, std::string_view module = "arith") {
  return a < 0 ? neg(a, module) : a;
}

}  // namespace checked

}  // namespace tknot
