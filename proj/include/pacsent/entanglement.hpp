#pragma once

#include <complex>

#include <Eigen/Dense>

#include "pacsent/qubit_embed.hpp"

namespace pacsent {

using Matrix4c = Eigen::Matrix<std::complex<double>, 4, 4>;

/// Two-qubit density matrix in the ordered basis {|00>, |01>, |10>, |11>}.
struct DensityMatrix4 {
  Matrix4c entries = Matrix4c::Zero();

  static DensityMatrix4 identity_mixture() { return {Matrix4c::Identity() / 4.0}; }
  /// Throws InvalidArgument unless Hermitian (1e-12), unit trace (1e-12) and
  /// eigenvalues >= -1e-10.
  void validate() const;
};

/// |2 (c01 c10 - c00 c11)| clamped to [0, 1].
double concurrence_pure(const QubitCoefficients& c);

DensityMatrix4 projector(const QubitCoefficients& c);

/// (p/3) I + (1 - 4p/3)|psi><psi| for p in [0, 3/4]; RangeError otherwise.
DensityMatrix4 depolarize(const QubitCoefficients& c, double p);

/// (sigma_y x sigma_y) rho* (sigma_y x sigma_y), rho* conjugated entrywise.
Matrix4c spin_flip(const Matrix4c& rho);

/// Square roots of the eigenvalues of rho * spin_flip(rho), descending.
/// Computed as the singular values of tau = V^T (sigma_y x sigma_y) V where
/// rho = V V^dag. Throws NumericalFailure if rho has an eigenvalue below -1e-10.
Eigen::Vector4d wootters_lambdas(const DensityMatrix4& rho);

/// l1 - l2 - l3 - l4 before the max{0, .}; negative for separable states.
double wootters_margin(const DensityMatrix4& rho);

/// max{0, l1 - l2 - l3 - l4}.
double concurrence_mixed(const DensityMatrix4& rho);

/// True when every entry off the diagonal and anti-diagonal is below 1e-12.
bool is_x_state(const DensityMatrix4& rho);

/// 2 max(0, |z| - sqrt(u+ u-), |y| - sqrt(w1 w2)) for the X matrix with
/// diagonal (u+, w1, w2, u-), inner coherence z = rho(1,2) and outer
/// coherence y = rho(0,3). For w1 = w2 and y = 0 this is 2 max(0, |z| - sqrt(u+ u-)).
/// Throws ShapeError unless is_x_state(rho).
double concurrence_x_state(const DensityMatrix4& rho);

}  // namespace pacsent
