#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace rsit {

/// A numerical run aborted by one of the solver guards (non-finite values,
/// runaway coherences or fields, unstable step size).
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Configuration rejected; `path()` names the offending key, e.g. "pulse.tau".
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string path, const std::string& what)
      : std::runtime_error(path + ": " + what), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace rsit
