#include "esakia/error.hpp"

namespace esakia {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NotAPoset: return "NotAPoset";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::NotBounded: return "NotBounded";
    case ErrorKind::NotDistributive: return "NotDistributive";
    case ErrorKind::ResiduationFailure: return "ResiduationFailure";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::NotIsomorphic: return "NotIsomorphic";
    case ErrorKind::NotAHom: return "NotAHom";
    case ErrorKind::AxiomViolation: return "AxiomViolation";
    case ErrorKind::NotAntisymmetric: return "NotAntisymmetric";
    case ErrorKind::NotHereditary: return "NotHereditary";
    case ErrorKind::UnknownWorld: return "UnknownWorld";
    case ErrorKind::UnknownAtom: return "UnknownAtom";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::TriangleFailure: return "TriangleFailure";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message, std::vector<std::string> witness)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      witness_(std::move(witness)) {}

SyntaxError::SyntaxError(std::size_t position, std::string expected)
    : Error(ErrorKind::SyntaxError,
            "at position " + std::to_string(position) + ": expected " + expected,
            {std::to_string(position), expected}),
      position_(position),
      expected_(std::move(expected)) {}

}  // namespace esakia
