#pragma once

#include <complex>
#include <numbers>

namespace pacsent {

inline constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

/// Parameters of the bipartite superposition
///   u (a^{dag m} x b^{dag n}) |alpha+gamma>|beta-gamma> + v (a^{dag n} x b^{dag m}) |beta-gamma>|alpha+gamma>.
struct SuperpositionSpec {
  std::complex<double> alpha{};
  std::complex<double> beta{};
  std::complex<double> gamma{};
  std::complex<double> u{kInvSqrt2};
  std::complex<double> v{kInvSqrt2};
  unsigned m = 0;
  unsigned n = 0;

  std::complex<double> effective_alpha() const { return alpha + gamma; }
  std::complex<double> effective_beta() const { return beta - gamma; }

  /// Both branches are the same state: effective alpha == effective beta and m == n.
  bool degenerate() const { return m == n && effective_alpha() == effective_beta(); }

  /// Throws InvalidArgument unless |u|^2 + |v|^2 = 1 within 1e-12 and all
  /// amplitudes are finite.
  void validate() const;

  bool operator==(const SuperpositionSpec&) const = default;
};

/// Rescales (u, v) to unit norm. Throws InvalidArgument if both vanish.
SuperpositionSpec with_normalized_weights(SuperpositionSpec spec);

}  // namespace pacsent
