#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pu21 {

/// Failure categories raised by the library. The CLI reports these by name.
enum class ErrorKind {
  NonNullVector,
  DegenerateTriple,
  NotDistinct,
  UndefinedCrossRatio,
  ZeroScale,
  CCircle123,
  CCircle234,
  SameOrbit,
  NonConstantStructure,
  DenominatorVanishes,
  DomainViolation,
  ParseError,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NonNullVector: return "NonNullVector";
    case ErrorKind::DegenerateTriple: return "DegenerateTriple";
    case ErrorKind::NotDistinct: return "NotDistinct";
    case ErrorKind::UndefinedCrossRatio: return "UndefinedCrossRatio";
    case ErrorKind::ZeroScale: return "ZeroScale";
    case ErrorKind::CCircle123: return "CCircle123";
    case ErrorKind::CCircle234: return "CCircle234";
    case ErrorKind::SameOrbit: return "SameOrbit";
    case ErrorKind::NonConstantStructure: return "NonConstantStructure";
    case ErrorKind::DenominatorVanishes: return "DenominatorVanishes";
    case ErrorKind::DomainViolation: return "DomainViolation";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace pu21
