#pragma once

#include <stdexcept>
#include <string>

namespace quartic {

enum class ErrorKind {
  kInvalidInput,
  kNotReducible,   // m >= 0 handed to the trigonometric path
  kDomain,         // angle outside [0, pi]
  kWrongPath,
  kInternalLogic,  // a theorem-backed invariant failed; indicates a bug
  kOracleFailure,
};

char const* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string const& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace quartic
