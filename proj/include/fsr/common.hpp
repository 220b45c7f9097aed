#pragma once

#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>

namespace fsr {

// All math runs in double precision. Checkpoints store 32-bit payloads
// (see checkpoint.hpp), so saved weights round to float on disk.
using Scalar = double;

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

class FormatError : public std::runtime_error {
 public:
  explicit FormatError(const std::string& msg) : std::runtime_error(msg) {}
};

namespace detail {
template <typename... Args>
std::string concat(Args&&... args) {
  std::ostringstream os;
  (os << ... << args);
  return os.str();
}
}  // namespace detail

#define FSR_CHECK(cond, ...)                                              \
  do {                                                                    \
    if (!(cond)) throw std::invalid_argument(fsr::detail::concat(__VA_ARGS__)); \
  } while (0)

#define FSR_CHECK_DOMAIN(cond, ...)                                       \
  do {                                                                    \
    if (!(cond)) throw std::domain_error(fsr::detail::concat(__VA_ARGS__)); \
  } while (0)

#define FSR_CHECK_CONFIG(cond, ...)                                       \
  do {                                                                    \
    if (!(cond)) throw fsr::ConfigError(fsr::detail::concat(__VA_ARGS__)); \
  } while (0)

inline bool is_finite(Scalar v) { return std::isfinite(v); }

}  // namespace fsr
