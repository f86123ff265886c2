#include "pacsent/scaled_complex.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace pacsent {

double wrap_phase(double angle) {
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  if (angle > -std::numbers::pi && angle <= std::numbers::pi) return angle;
  double wrapped = std::remainder(angle, kTwoPi);
  if (wrapped <= -std::numbers::pi) wrapped += kTwoPi;
  return wrapped;
}

ScaledComplex ScaledComplex::from_log(double log_magnitude, double phase) {
  if (log_magnitude == -std::numeric_limits<double>::infinity()) return zero();
  return {log_magnitude, wrap_phase(phase)};
}

ScaledComplex ScaledComplex::from_complex(std::complex<double> value) {
  if (value == std::complex<double>{}) return zero();
  return {std::log(std::abs(value)), std::arg(value)};
}

std::complex<double> ScaledComplex::to_complex() const {
  if (is_zero()) return {};
  return std::polar(std::exp(log_magnitude), phase);
}

double ScaledComplex::magnitude() const { return is_zero() ? 0.0 : std::exp(log_magnitude); }

bool ScaledComplex::representable() const {
  if (is_zero()) return true;
  return log_magnitude < std::log(std::numeric_limits<double>::max()) &&
         log_magnitude > std::log(std::numeric_limits<double>::min());
}

ScaledComplex ScaledComplex::conj() const {
  if (is_zero()) return zero();
  return from_log(log_magnitude, -phase);
}

ScaledComplex ScaledComplex::inverse() const {
  return from_log(-log_magnitude, -phase);
}

ScaledComplex ScaledComplex::pow(int exponent) const {
  if (exponent == 0) return from_log(0.0);
  if (is_zero()) {
    return exponent > 0 ? zero()
                        : from_log(std::numeric_limits<double>::infinity());
  }
  return from_log(exponent * log_magnitude, exponent * phase);
}

ScaledComplex operator*(const ScaledComplex& lhs, const ScaledComplex& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return ScaledComplex::zero();
  return ScaledComplex::from_log(lhs.log_magnitude + rhs.log_magnitude, lhs.phase + rhs.phase);
}

ScaledComplex operator/(const ScaledComplex& lhs, const ScaledComplex& rhs) {
  return lhs * rhs.inverse();
}

ScaledComplex scaled_sum(std::span<const ScaledComplex> terms) {
  double scale = -std::numeric_limits<double>::infinity();
  for (const auto& t : terms) scale = std::max(scale, t.log_magnitude);
  if (scale == -std::numeric_limits<double>::infinity()) return ScaledComplex::zero();

  std::complex<double> acc{};
  for (const auto& t : terms) {
    if (t.is_zero()) continue;
    acc += std::polar(std::exp(t.log_magnitude - scale), t.phase);
  }
  if (acc == std::complex<double>{}) return ScaledComplex::zero();
  return ScaledComplex::from_log(scale + std::log(std::abs(acc)), std::arg(acc));
}

}  // namespace pacsent
