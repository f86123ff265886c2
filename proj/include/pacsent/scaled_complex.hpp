#pragma once

#include <complex>
#include <limits>
#include <span>

namespace pacsent {

/// Complex number stored as (ln|value|, arg value).
///
/// Overlaps and norms of photon-added coherent states grow like m!|alpha|^{2m}
/// and leave double range quickly; products and ratios are formed by adding
/// log-magnitudes. A log-magnitude of -inf encodes exact zero.
struct ScaledComplex {
  double log_magnitude = -std::numeric_limits<double>::infinity();
  double phase = 0.0;  // (-pi, pi]

  static ScaledComplex zero() { return {}; }
  static ScaledComplex from_log(double log_magnitude, double phase = 0.0);
  static ScaledComplex from_complex(std::complex<double> value);
  static ScaledComplex from_real(double value) { return from_complex({value, 0.0}); }

  bool is_zero() const { return log_magnitude == -std::numeric_limits<double>::infinity(); }
  /// Overflows to inf (or underflows to 0) outside double range.
  std::complex<double> to_complex() const;
  double magnitude() const;
  /// True when to_complex() is finite and not flushed to zero.
  bool representable() const;

  ScaledComplex conj() const;
  ScaledComplex inverse() const;
  ScaledComplex pow(int exponent) const;
};

ScaledComplex operator*(const ScaledComplex& lhs, const ScaledComplex& rhs);
ScaledComplex operator/(const ScaledComplex& lhs, const ScaledComplex& rhs);

/// Wraps an angle into (-pi, pi].
double wrap_phase(double angle);

/// Sum of log-scaled terms, rescaled by the largest magnitude before adding.
ScaledComplex scaled_sum(std::span<const ScaledComplex> terms);

}  // namespace pacsent
