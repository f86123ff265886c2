#pragma once

#include <complex>

#include "pacsent/scaled_complex.hpp"
#include "pacsent/superposition.hpp"

namespace pacsent {

/// Gram-Schmidt constants of the per-mode qubit basis
///   |0> = N1 a^{dag m}|alpha>,  |1> = N2 (a^{dag n}|beta> - z N1 a^{dag m}|alpha>)
/// with alpha, beta the gamma-shifted amplitudes, and the normalizer N(u, v)
/// of the full two-mode state.
struct BasisConstants {
  ScaledComplex n1;
  ScaledComplex n2;
  ScaledComplex z;  // N1* <alpha| a^m a^{dag n} |beta>
  ScaledComplex big_n;
  /// Overlap of the two normalized branch vectors, |s| <= 1.
  std::complex<double> normalized_overlap;
  /// 1 - |s|^2, the squared residual norm relative to ||a^{dag n}|beta>||^2.
  double residual_weight = 0.0;
};

/// The state in the two-qubit computational basis {|00>, |01>, |10>, |11>}.
struct QubitCoefficients {
  std::complex<double> c00;
  std::complex<double> c01;
  std::complex<double> c10;
  std::complex<double> c11;

  double norm2() const {
    return std::norm(c00) + std::norm(c01) + std::norm(c10) + std::norm(c11);
  }
};

/// Throws DegenerateSpecError when the branches are the same ray (Gram-Schmidt
/// residual below 1e-14 of the original vector) or the state vanishes.
BasisConstants basis_constants(const SuperpositionSpec& spec);

/// c01 = K u, c10 = K v, c00 = K z N2 (u+v), c11 = 0 with K = N / (N1 N2),
/// renormalized to unit norm.
QubitCoefficients qubit_coefficients(const SuperpositionSpec& spec);
QubitCoefficients qubit_coefficients(const SuperpositionSpec& spec, const BasisConstants& basis);

}  // namespace pacsent
