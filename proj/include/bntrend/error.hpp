#pragma once

#include <stdexcept>
#include <string>

namespace bntrend {

// Error taxonomy mirrors the CLI exit-code contract:
//   0 success, 1 usage/config error, 2 data error.
enum class ErrorKind { config, data };

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  int exit_code() const noexcept { return kind_ == ErrorKind::config ? 1 : 2; }

private:
  ErrorKind kind_;
};

// Bad flags, bad parameter values, unreadable config files.
class ConfigError : public Error {
public:
  explicit ConfigError(const std::string& message)
      : Error(ErrorKind::config, message) {}
};

// Problems with the corpus content itself.
class DataError : public Error {
public:
  explicit DataError(const std::string& message)
      : Error(ErrorKind::data, message) {}
};

}  // namespace bntrend
