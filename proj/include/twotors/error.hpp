#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace twotors {

/// Mathematical-domain failures. Every operation that rejects an input
/// throws MathError carrying one of these kinds.
enum class ErrorKind {
  ZeroInput,
  BadPrime,
  SingularGram,
  NotSquarefree,
  NotInvertible,
  DimensionMismatch,
  InvalidType,
  ComplexSemiOrientation,
  NotRealTheta,
  ZeroLowerBlock,
  OutOfRegime,
  NotARoot,
  EqualRoots,
  IrrationalRealRoot,
  ModelMismatch,
  OddIntersection,
  SupportCollision,
  SharedSupport,
  NotSplit,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind) noexcept;

class MathError : public std::runtime_error {
 public:
  MathError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace twotors
