#ifndef HURWITZ_ERRORS_HPP
#define HURWITZ_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hurwitz {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input (cycle notation, group/component files, class specs).
class ParseError : public Error {
public:
  using Error::Error;
};

// A precondition violation: degree mismatch, entry outside c, non-abelian
// input to an abelian-only operation, and so on.
class DomainError : public Error {
public:
  using Error::Error;
};

// A resource cap was hit before the computation could finish. The result is
// inconclusive; nothing is silently truncated.
class CapExceeded : public Error {
public:
  CapExceeded(std::string cap_name, std::uint64_t cap_value, const std::string &what_arg)
      : Error(what_arg + " (cap '" + cap_name + "' = " + std::to_string(cap_value) + ")"),
        cap_name_(std::move(cap_name)), cap_value_(cap_value) {}

  const std::string &cap_name() const { return cap_name_; }
  std::uint64_t cap_value() const { return cap_value_; }

private:
  std::string cap_name_;
  std::uint64_t cap_value_;
};

// Default caps, overridable by CLI flags.
inline constexpr std::uint64_t kDefaultOrbitCap = 5'000'000;
inline constexpr std::uint64_t kDefaultCosetCap = 1'000'000;
inline constexpr std::uint64_t kDefaultElementCap = 100'000;

} // namespace hurwitz

#endif
