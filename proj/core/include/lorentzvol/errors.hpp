#pragma once

#include <stdexcept>
#include <string>

namespace lorentzvol {

/// Thrown when an argument lies outside an operation's domain
/// (wrong congruence class, non-positive precision, pole of zeta, ...).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace lorentzvol
