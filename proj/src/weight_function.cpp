#include "ecctree/weight_function.hpp"

#include <cmath>
#include <cstdio>

#include "ecctree/error.hpp"

namespace ecctree {

double IndexValue::approx() const {
  if (is_exact()) return std::get<Rational>(value_).convert_to<double>();
  return std::get<double>(value_);
}

std::string IndexValue::to_string() const {
  if (is_exact()) {
    const auto& q = std::get<Rational>(value_);
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", std::get<double>(value_));
  return buf;
}

int compare(const IndexValue& a, const IndexValue& b) {
  if (a.is_exact() && b.is_exact()) {
    const auto& x = a.exact();
    const auto& y = b.exact();
    return x < y ? -1 : (y < x ? 1 : 0);
  }
  const double x = a.approx();
  const double y = b.approx();
  if (std::abs(x - y) <= kFloatTolerance * std::max(std::abs(x), std::abs(y))) return 0;
  return x < y ? -1 : 1;
}

WeightFunction WeightFunction::generalized(double lambda) {
  if (!std::isfinite(lambda) || lambda == 0.0) {
    throw Error(ErrorCode::BadParameters, "generalized Wiener exponent must be finite and nonzero");
  }
  return WeightFunction(Kind::GeneralizedWiener, lambda);
}

WeightFunction WeightFunction::parse(std::string_view spec) {
  if (spec == "wiener") return wiener();
  if (spec == "hyper") return hyper_wiener();
  if (spec == "harary") return harary();
  if (spec == "rcw") return rcw();
  constexpr std::string_view prefix = "genw:";
  if (spec.substr(0, prefix.size()) == prefix) {
    std::string text(spec.substr(prefix.size()));
    std::size_t used = 0;
    double lambda = 0;
    try {
      lambda = std::stod(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (text.empty() || used != text.size()) {
      throw Error(ErrorCode::ParseError, "bad exponent in '" + std::string(spec) + "'");
    }
    return generalized(lambda);
  }
  throw Error(ErrorCode::ParseError, "unknown weight function '" + std::string(spec) + "'");
}

Monotonicity WeightFunction::monotonicity() const noexcept {
  switch (kind_) {
    case Kind::Harary: return Monotonicity::StrictlyDecreasing;
    case Kind::GeneralizedWiener:
      return lambda_ > 0 ? Monotonicity::StrictlyIncreasing : Monotonicity::StrictlyDecreasing;
    default: return Monotonicity::StrictlyIncreasing;
  }
}

bool WeightFunction::exact() const noexcept {
  if (kind_ != Kind::GeneralizedWiener) return true;
  return lambda_ == std::trunc(lambda_) && std::abs(lambda_) <= kMaxExactExponent;
}

std::string WeightFunction::spec() const {
  switch (kind_) {
    case Kind::Wiener: return "wiener";
    case Kind::HyperWiener: return "hyper";
    case Kind::Harary: return "harary";
    case Kind::RCW: return "rcw";
    case Kind::GeneralizedWiener: {
      char buf[64];
      std::snprintf(buf, sizeof buf, "genw:%.17g", lambda_);
      return buf;
    }
  }
  return "unknown";
}

Rational WeightFunction::exact_value(std::uint32_t x, std::uint32_t diameter) const {
  switch (kind_) {
    case Kind::Wiener: return Rational(x);
    case Kind::HyperWiener: return Rational(BigInt(x) * (x + 1) / 2);
    case Kind::Harary: return Rational(BigInt(1), BigInt(x));
    case Kind::RCW:
      if (x > diameter) throw Error(ErrorCode::DomainError, "RCW distance exceeds diameter");
      return Rational(BigInt(1), BigInt(diameter + 1 - x));
    case Kind::GeneralizedWiener: {
      if (!exact()) throw Error(ErrorCode::DomainError, "exponent has no exact evaluation");
      const auto e = static_cast<unsigned>(std::abs(lambda_));
      BigInt power = boost::multiprecision::pow(BigInt(x), e);
      return lambda_ > 0 ? Rational(power) : Rational(BigInt(1), power);
    }
  }
  return Rational(0);
}

double WeightFunction::approx_value(std::uint32_t x, std::uint32_t diameter) const {
  const double v = x;
  switch (kind_) {
    case Kind::Wiener: return v;
    case Kind::HyperWiener: return v * (v + 1) / 2;
    case Kind::Harary: return 1 / v;
    case Kind::RCW: return 1.0 / (static_cast<double>(diameter) + 1 - v);
    case Kind::GeneralizedWiener: return std::pow(v, lambda_);
  }
  return 0;
}

}  // namespace ecctree
