#pragma once

#include <stdexcept>

namespace kronmod {

/// The requested object exists over the algebraic closure but not over the
/// active field (an irrational square root, an anisotropic conic over Q).
/// This is an honest partial answer rather than a failure of the input.
class NeedsExtension : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace kronmod
