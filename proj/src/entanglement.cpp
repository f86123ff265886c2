#include "pacsent/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pacsent/errors.hpp"

namespace pacsent {

namespace {

constexpr double kEntryTolerance = 1e-12;
constexpr double kEigenFloor = -1e-10;

const Eigen::Matrix4d& sigma_yy() {
  // sigma_y (x) sigma_y is real: anti-diagonal (-1, 1, 1, -1).
  static const Eigen::Matrix4d m = [] {
    Eigen::Matrix4d y = Eigen::Matrix4d::Zero();
    y(0, 3) = -1.0;
    y(1, 2) = 1.0;
    y(2, 1) = 1.0;
    y(3, 0) = -1.0;
    return y;
  }();
  return m;
}

Eigen::Vector4cd as_vector(const QubitCoefficients& c) {
  return Eigen::Vector4cd(c.c00, c.c01, c.c10, c.c11);
}

}  // namespace

void DensityMatrix4::validate() const {
  if (!entries.allFinite()) throw InvalidArgument("density matrix has non-finite entries");
  const double hermitian_error = (entries - entries.adjoint()).cwiseAbs().maxCoeff();
  if (hermitian_error > kEntryTolerance) {
    throw InvalidArgument("density matrix is not Hermitian (error " +
                          std::to_string(hermitian_error) + ")");
  }
  const auto trace = entries.trace();
  if (std::abs(trace - 1.0) > kEntryTolerance) {
    throw InvalidArgument("density matrix trace is " + std::to_string(trace.real()));
  }
  Eigen::SelfAdjointEigenSolver<Matrix4c> solver(entries, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < kEigenFloor) {
    throw InvalidArgument("density matrix is not positive semidefinite");
  }
}

double concurrence_pure(const QubitCoefficients& c) {
  return std::clamp(2.0 * std::abs(c.c01 * c.c10 - c.c00 * c.c11), 0.0, 1.0);
}

DensityMatrix4 projector(const QubitCoefficients& c) {
  const Eigen::Vector4cd psi = as_vector(c);
  return {psi * psi.adjoint()};
}

DensityMatrix4 depolarize(const QubitCoefficients& c, double p) {
  if (!(p >= 0.0 && p <= 0.75)) {
    throw RangeError("depolarize: p must lie in [0, 3/4], got " + std::to_string(p));
  }
  DensityMatrix4 rho = projector(c);
  rho.entries = (p / 3.0) * Matrix4c::Identity() + (1.0 - 4.0 * p / 3.0) * rho.entries;
  return rho;
}

Matrix4c spin_flip(const Matrix4c& rho) {
  const Matrix4c y = sigma_yy().cast<std::complex<double>>();
  return y * rho.conjugate() * y;
}

Eigen::Vector4d wootters_lambdas(const DensityMatrix4& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix4c> solver(rho.entries);
  if (solver.info() != Eigen::Success) {
    throw NumericalFailure("wootters_lambdas: eigendecomposition failed");
  }
  const Eigen::Vector4d mu = solver.eigenvalues();
  if (mu.minCoeff() < kEigenFloor) {
    throw NumericalFailure("wootters_lambdas: density matrix eigenvalue " +
                           std::to_string(mu.minCoeff()) + " below floor");
  }
  // rho = V V^dag with V = E diag(sqrt(mu)); the eigenvalues of rho rho~ are
  // the squared singular values of tau = V^T Y V.
  const Matrix4c v =
      solver.eigenvectors() * mu.cwiseMax(0.0).cwiseSqrt().cast<std::complex<double>>().asDiagonal();
  const Matrix4c tau = v.transpose() * sigma_yy().cast<std::complex<double>>() * v;
  Eigen::JacobiSVD<Matrix4c> svd(tau);
  return svd.singularValues();  // descending
}

double wootters_margin(const DensityMatrix4& rho) {
  const Eigen::Vector4d l = wootters_lambdas(rho);
  return l(0) - l(1) - l(2) - l(3);
}

double concurrence_mixed(const DensityMatrix4& rho) {
  return std::clamp(wootters_margin(rho), 0.0, 1.0);
}

bool is_x_state(const DensityMatrix4& rho) {
  const auto& e = rho.entries;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (i == j || i + j == 3) continue;
      if (std::abs(e(i, j)) >= kEntryTolerance) return false;
    }
  }
  return true;
}

double concurrence_x_state(const DensityMatrix4& rho) {
  if (!is_x_state(rho)) {
    throw ShapeError("concurrence_x_state: entries off the diagonal and anti-diagonal must vanish");
  }
  const auto& e = rho.entries;
  auto diag = [&](int i) { return std::max(0.0, e(i, i).real()); };
  const double inner = std::abs(e(1, 2)) - std::sqrt(diag(0) * diag(3));
  const double outer = std::abs(e(0, 3)) - std::sqrt(diag(1) * diag(2));
  return std::clamp(2.0 * std::max({0.0, inner, outer}), 0.0, 1.0);
}

}  // namespace pacsent
