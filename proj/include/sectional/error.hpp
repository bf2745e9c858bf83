#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sectional {

enum class ErrorKind {
  DuplicateElement,
  UnknownElement,
  AntisymmetryViolation,
  EmptyPoset,
  SizeCap,
  InvalidTable,
  NotInSection,
  NotSectionallyBounded,
  InternalDisagreement,
  NotMeetSemilattice,
  MextSchDisagreement,
  SelectionAxiomViolation,
  StructureMismatch,
  MissingSelection,
  UnknownSystem,
  UnknownSuite,
  UnknownTheorem,
  UnknownPredicate,
  Parse,
  Reference,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DuplicateElement: return "DuplicateElement";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::AntisymmetryViolation: return "AntisymmetryViolation";
    case ErrorKind::EmptyPoset: return "EmptyPoset";
    case ErrorKind::SizeCap: return "SizeCap";
    case ErrorKind::InvalidTable: return "InvalidTable";
    case ErrorKind::NotInSection: return "NotInSection";
    case ErrorKind::NotSectionallyBounded: return "NotSectionallyBounded";
    case ErrorKind::InternalDisagreement: return "InternalDisagreement";
    case ErrorKind::NotMeetSemilattice: return "NotMeetSemilattice";
    case ErrorKind::MextSchDisagreement: return "MextSchDisagreement";
    case ErrorKind::SelectionAxiomViolation: return "SelectionAxiomViolation";
    case ErrorKind::StructureMismatch: return "StructureMismatch";
    case ErrorKind::MissingSelection: return "MissingSelection";
    case ErrorKind::UnknownSystem: return "UnknownSystem";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
    case ErrorKind::UnknownTheorem: return "UnknownTheorem";
    case ErrorKind::UnknownPredicate: return "UnknownPredicate";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Reference: return "ReferenceError";
  }
  return "Error";
}

/// Every failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind), detail_(message) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// The message without the kind prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace sectional
