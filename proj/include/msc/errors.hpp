#pragma once

#include <stdexcept>
#include <string>

namespace msc {

/// Bad input: unknown family/pair name, parameter out of range, division by zero.
class DomainError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A mathematical invariant that must hold did not (a hard failure).
class VerificationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace msc
