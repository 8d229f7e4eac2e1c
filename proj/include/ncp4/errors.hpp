#pragma once

#include <stdexcept>
#include <string>

namespace ncp4 {

/// Base of every structured failure raised by the engine. The `kind()` tag
/// is what ends up in report records.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

class DimensionMismatch : public Error {
 public:
  explicit DimensionMismatch(const std::string& what) : Error("DimensionMismatch", what) {}
};

/// Constant coefficient of a series is singular (or ill-conditioned in float mode).
class NonInvertibleConstantTerm : public Error {
 public:
  explicit NonInvertibleConstantTerm(const std::string& what)
      : Error("NonInvertibleConstantTerm", what) {}
};

class SingularMinor : public Error {
 public:
  explicit SingularMinor(const std::string& what) : Error("SingularMinor", what) {}
};

class SpectralCollision : public Error {
 public:
  explicit SpectralCollision(const std::string& what) : Error("SpectralCollision", what) {}
};

/// A derivative was requested of a series with no certified coefficients left.
class TruncationExhausted : public Error {
 public:
  explicit TruncationExhausted(const std::string& what) : Error("TruncationExhausted", what) {}
};

class InsufficientSequence : public Error {
 public:
  explicit InsufficientSequence(const std::string& what) : Error("InsufficientSequence", what) {}
};

class NonInvertiblePivot : public Error {
 public:
  explicit NonInvertiblePivot(const std::string& what) : Error("NonInvertiblePivot", what) {}
};

class InconsistentParameters : public Error {
 public:
  explicit InconsistentParameters(const std::string& what)
      : Error("InconsistentParameters", what) {}
};

class UnassignedSymbol : public Error {
 public:
  explicit UnassignedSymbol(const std::string& what) : Error("UnassignedSymbol", what) {}
};

class ScenarioError : public Error {
 public:
  explicit ScenarioError(const std::string& what) : Error("ScenarioError", what) {}
};

}  // namespace ncp4
