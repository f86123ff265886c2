#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "pacsent/superposition.hpp"

namespace pacsent::fock {

/// Single-mode state truncated to photon numbers 0..dim-1.
struct FockVector {
  std::vector<std::complex<double>> amplitudes;

  std::size_t dim() const { return amplitudes.size(); }
  double norm2() const;
};

/// Amplitude matrix psi(i, j) over mode-A photon number i and mode-B photon number j.
struct TwoModeState {
  Eigen::MatrixXcd amplitudes;

  double norm2() const { return amplitudes.squaredNorm(); }
};

inline constexpr std::size_t kMinDim = 16;
/// Relative weight allowed in the last 10 retained photon numbers.
inline constexpr double kTailBound = 1e-20;

/// Truncation heuristic ceil(r^2 + 10 r + 50) + extra_photons, at least kMinDim.
std::size_t suggested_dim(double max_amplitude, unsigned extra_photons = 0);

/// Coherent state e^{-|a|^2/2} a^k / sqrt(k!). Throws DimensionError when
/// dim < kMinDim or the tail bound cannot be certified.
FockVector coherent_fock(std::complex<double> alpha, std::size_t dim);

/// Applies the creation operator `times` times (no renormalization).
/// Throws DimensionError when the shifted support no longer fits.
FockVector create(const FockVector& v, unsigned times);

/// sum_k conj(u_k) v_k. Throws DimensionError on mismatched dims.
std::complex<double> inner(const FockVector& u, const FockVector& v);

FockVector normalized(FockVector v);

/// Product state a (x) b.
TwoModeState product(const FockVector& a, const FockVector& b);

/// Normalized two-mode state of the superposition, built directly in the
/// Fock basis. Throws DegenerateSpecError when the state vanishes.
TwoModeState superposition_state(const SuperpositionSpec& spec);

/// Singular values of the amplitude matrix, descending.
Eigen::VectorXd schmidt_coefficients(const TwoModeState& state);

/// 2 sigma_1 sigma_2 of a (rank <= 2) normalized two-mode state.
/// Throws NumericalFailure when sigma_3 > 1e-8.
double schmidt_concurrence(const TwoModeState& state);

/// Pure-state concurrence of the superposition via the Schmidt route.
double oracle_concurrence(const SuperpositionSpec& spec);

/// Concurrence of (p/3) I + (1 - 4p/3)|psi><psi| from the Schmidt-route pure
/// concurrence C0 = 2 sqrt(s0 s1): in the Schmidt basis the mixture is an X
/// state, giving max{0, (1 - 4p/3) C0 - 2p/3}.
double oracle_depolarized_concurrence(double pure_concurrence, double p);

}  // namespace pacsent::fock
