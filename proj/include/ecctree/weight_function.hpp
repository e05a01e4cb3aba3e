#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

namespace ecctree {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Relative tolerance used whenever floating values are compared.
inline constexpr double kFloatTolerance = 1e-9;

/// Result of an index computation: exact rational, or a double when the
/// weight function has a non-integer exponent.
class IndexValue {
 public:
  IndexValue() = default;
  explicit IndexValue(Rational exact) : value_(std::move(exact)) {}
  explicit IndexValue(double approx) : value_(approx) {}

  bool is_exact() const noexcept { return std::holds_alternative<Rational>(value_); }
  const Rational& exact() const { return std::get<Rational>(value_); }
  double approx() const;

  /// Integers as "10", rationals as "5/2", doubles with 12 significant digits.
  std::string to_string() const;

  /// Exact values compare exactly. Floating values within kFloatTolerance
  /// (relative) compare equal; callers treat that as a tie.
  friend int compare(const IndexValue& a, const IndexValue& b);

 private:
  std::variant<Rational, double> value_;
};

enum class Monotonicity { StrictlyIncreasing, StrictlyDecreasing };

/// Weight function g for the Wiener-type index W(T;g) = sum g(d(u,v)).
class WeightFunction {
 public:
  enum class Kind { Wiener, HyperWiener, Harary, GeneralizedWiener, RCW };

  static WeightFunction wiener() { return WeightFunction(Kind::Wiener); }
  static WeightFunction hyper_wiener() { return WeightFunction(Kind::HyperWiener); }
  static WeightFunction harary() { return WeightFunction(Kind::Harary); }
  static WeightFunction rcw() { return WeightFunction(Kind::RCW); }
  /// x^lambda; lambda = 0 is rejected since it is not strictly monotone.
  static WeightFunction generalized(double lambda);

  /// "wiener", "hyper", "harary", "rcw" or "genw:<lambda>".
  static WeightFunction parse(std::string_view spec);

  Kind kind() const noexcept { return kind_; }
  double lambda() const noexcept { return lambda_; }
  Monotonicity monotonicity() const noexcept;
  bool exact() const noexcept;
  std::string spec() const;

  /// g(x) for 1 <= x <= diameter. The diameter is only used by RCW.
  Rational exact_value(std::uint32_t x, std::uint32_t diameter) const;
  double approx_value(std::uint32_t x, std::uint32_t diameter) const;

 private:
  explicit WeightFunction(Kind kind, double lambda = 1.0) : kind_(kind), lambda_(lambda) {}

  Kind kind_;
  double lambda_;
};

/// Integer exponents above this magnitude are evaluated in floating mode.
inline constexpr int kMaxExactExponent = 64;

}  // namespace ecctree
