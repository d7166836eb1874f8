#pragma once

#include <stdexcept>
#include <string>

namespace ghz {

// A mathematical precondition was violated (P = 0, N not divisible by 4, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// A configuration or thresholds file could not be loaded or is invalid.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// A request exceeds what the dense oracle is willing to allocate.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ghz
