#pragma once

#include <stdexcept>
#include <string>

namespace spinbath {

/// Config-file problem (unknown key, bad value, missing section). CLI exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// A model invariant failed to hold (bookkeeping, preconditions). CLI exit code 3.
class ModelError : public std::runtime_error {
 public:
  explicit ModelError(const std::string& what) : std::runtime_error(what) {}
};

/// Filesystem / IO failure. CLI exit code 4.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace spinbath
