#pragma once

#include <stdexcept>

namespace gauss_landau {

// Precondition violations on public operations (zero inputs, empty lists,
// mismatched supports, out-of-range arguments).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace gauss_landau
