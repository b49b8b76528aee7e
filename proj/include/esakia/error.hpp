#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace esakia {

enum class ErrorKind {
  InvalidInput,
  NotAPoset,
  NotALattice,
  NotBounded,
  NotDistributive,
  ResiduationFailure,
  UnknownElement,
  NotIsomorphic,
  NotAHom,
  AxiomViolation,
  NotAntisymmetric,
  NotHereditary,
  UnknownWorld,
  UnknownAtom,
  SyntaxError,
  TriangleFailure,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `witness()` names the elements,
/// points or worlds that exhibit the failure, in the order the message
/// mentions them.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::vector<std::string> witness = {});

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<std::string>& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::vector<std::string> witness_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, std::string expected);

  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

}  // namespace esakia
