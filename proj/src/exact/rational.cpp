#include "twotors/exact/rational.hpp"

#include <ostream>
#include <stdexcept>

#include "twotors/error.hpp"

namespace twotors {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::BadPrime: return "BadPrime";
    case ErrorKind::SingularGram: return "SingularGram";
    case ErrorKind::NotSquarefree: return "NotSquarefree";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InvalidType: return "InvalidType";
    case ErrorKind::ComplexSemiOrientation: return "ComplexSemiOrientation";
    case ErrorKind::NotRealTheta: return "NotRealTheta";
    case ErrorKind::ZeroLowerBlock: return "ZeroLowerBlock";
    case ErrorKind::OutOfRegime: return "OutOfRegime";
    case ErrorKind::NotARoot: return "NotARoot";
    case ErrorKind::EqualRoots: return "EqualRoots";
    case ErrorKind::IrrationalRealRoot: return "IrrationalRealRoot";
    case ErrorKind::ModelMismatch: return "ModelMismatch";
    case ErrorKind::OddIntersection: return "OddIntersection";
    case ErrorKind::SupportCollision: return "SupportCollision";
    case ErrorKind::SharedSupport: return "SharedSupport";
    case ErrorKind::NotSplit: return "NotSplit";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw MathError(ErrorKind::ZeroInput, "zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto digits_only = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  const auto slash = text.find('/');
  const std::string_view num_text = text.substr(0, slash);
  const std::string_view den_text =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!digits_only(num_text) || !digits_only(den_text))
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  Integer num(std::string(num_text), 10);
  Integer den(std::string(den_text), 10);
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (negative) num = -num;
  return Rational(num, den);
}

Rational Rational::inverse() const {
  if (is_zero()) throw MathError(ErrorKind::ZeroInput, "inverse of zero");
  Rational r;
  r.value_ = 1 / value_;
  return r;
}

Rational Rational::abs() const {
  Rational r;
  r.value_ = ::abs(value_);
  return r;
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  Rational result(1L);
  Rational base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw MathError(ErrorKind::ZeroInput, "division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace twotors
