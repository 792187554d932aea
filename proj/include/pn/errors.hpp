#pragma once

#include <stdexcept>
#include <string>

namespace pn {

/// Requested object exceeds a configured resource cap.
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// An eigenvalue landed inside the guard band around {2, n+2, 2n},
/// where the extension formula denominators vanish.
class ForbiddenEigenvalue : public std::runtime_error {
 public:
  ForbiddenEigenvalue(double lambda, int level, const std::string& what)
      : std::runtime_error(what), lambda(lambda), level(level) {}
  double lambda;
  int level;
};

}  // namespace pn
