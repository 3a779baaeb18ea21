#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace invar {

/// Exit-code bucket an error belongs to: Usage -> 1, CapExceeded -> 2,
/// Internal -> 3 (see tools/invar.cpp).
enum class ErrorClass { Usage, CapExceeded, Internal };

class Error : public std::runtime_error {
public:
  Error(std::string name, ErrorClass cls, const std::string& msg)
      : std::runtime_error(msg), name_(std::move(name)), class_(cls) {}

  const std::string& name() const noexcept { return name_; }
  ErrorClass error_class() const noexcept { return class_; }

private:
  std::string name_;
  ErrorClass class_;
};

struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error("ParseError", ErrorClass::Usage, msg) {}
};

struct InvalidPermutation : Error {
  explicit InvalidPermutation(const std::string& msg)
      : Error("InvalidPermutation", ErrorClass::Usage, msg) {}
};

struct MixedDegrees : Error {
  explicit MixedDegrees(const std::string& msg) : Error("MixedDegrees", ErrorClass::Usage, msg) {}
};

struct ClosureCapExceeded : Error {
  explicit ClosureCapExceeded(const std::string& msg)
      : Error("ClosureCapExceeded", ErrorClass::CapExceeded, msg) {}
};

struct DivideByZero : Error {
  explicit DivideByZero(const std::string& msg)
      : Error("DivideByZero", ErrorClass::Internal, msg) {}
};

struct NotDivisible : Error {
  explicit NotDivisible(const std::string& msg)
      : Error("NotDivisible", ErrorClass::Internal, msg) {}
};

struct NotRepresentable : Error {
  explicit NotRepresentable(const std::string& msg)
      : Error("NotRepresentable", ErrorClass::Internal, msg) {}
};

struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& msg)
      : Error("DimensionMismatch", ErrorClass::Usage, msg) {}
};

struct EnumerationCapExceeded : Error {
  explicit EnumerationCapExceeded(const std::string& msg)
      : Error("EnumerationCapExceeded", ErrorClass::CapExceeded, msg) {}
};

struct NotInvariant : Error {
  explicit NotInvariant(const std::string& msg) : Error("NotInvariant", ErrorClass::Usage, msg) {}
};

struct NotHomogeneous : Error {
  explicit NotHomogeneous(const std::string& msg)
      : Error("NotHomogeneous", ErrorClass::Usage, msg) {}
};

struct UsageError : Error {
  explicit UsageError(const std::string& msg) : Error("UsageError", ErrorClass::Usage, msg) {}
};

/// A theorem-backed consistency check failed; this always indicates a bug,
/// never a property of the input.
struct RuleContradiction : Error {
  explicit RuleContradiction(const std::string& msg)
      : Error("RuleContradiction", ErrorClass::Internal, msg) {}
};

struct InternalInconsistency : Error {
  explicit InternalInconsistency(const std::string& msg)
      : Error("InternalInconsistency", ErrorClass::Internal, msg) {}
};

} // namespace invar
