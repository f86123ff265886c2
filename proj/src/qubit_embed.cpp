#include "pacsent/qubit_embed.hpp"

#include <algorithm>
#include <cmath>

#include "pacsent/errors.hpp"
#include "pacsent/specfun.hpp"

namespace pacsent {

namespace {
// Residual norm < 1e-14 of the original vector.
constexpr double kMinResidualWeight = 1e-28;
}  // namespace

BasisConstants basis_constants(const SuperpositionSpec& spec) {
  spec.validate();
  if (spec.degenerate()) {
    throw DegenerateSpecError("basis_constants: both branches are the same state");
  }
  const auto alpha = spec.effective_alpha();
  const auto beta = spec.effective_beta();

  const double log_norm2_first = log_pacs_norm2(alpha, spec.m);
  const double log_norm2_second = log_pacs_norm2(beta, spec.n);
  const ScaledComplex overlap = pacs_overlap(alpha, beta, spec.m, spec.n);

  BasisConstants basis;
  auto s = overlap;
  if (!s.is_zero()) s.log_magnitude -= 0.5 * (log_norm2_first + log_norm2_second);
  const double s_abs = std::min(s.magnitude(), 1.0);
  basis.normalized_overlap = std::polar(s_abs, s.phase);
  basis.residual_weight = (1.0 - s_abs) * (1.0 + s_abs);
  if (basis.residual_weight < kMinResidualWeight) {
    throw DegenerateSpecError("basis_constants: Gram-Schmidt residual vanishes");
  }

  basis.n1 = ScaledComplex::from_log(-0.5 * log_norm2_first);
  basis.z = overlap;
  if (!basis.z.is_zero()) basis.z.log_magnitude -= 0.5 * log_norm2_first;
  basis.n2 = ScaledComplex::from_log(-0.5 * (log_norm2_second + std::log(basis.residual_weight)));

  // ||psi_raw||^2 = ||first||^2 ||second||^2 (1 + 2 Re(u* v) |s|^2)
  const double cross = 1.0 + 2.0 * std::real(std::conj(spec.u) * spec.v) * s_abs * s_abs;
  if (!(cross > kMinResidualWeight)) {
    throw DegenerateSpecError("basis_constants: superposition cancels to the null vector");
  }
  basis.big_n = ScaledComplex::from_log(-0.5 * (log_norm2_first + log_norm2_second + std::log(cross)));
  return basis;
}

QubitCoefficients qubit_coefficients(const SuperpositionSpec& spec, const BasisConstants& basis) {
  const ScaledComplex k = basis.big_n / (basis.n1 * basis.n2);
  const std::complex<double> k_value = k.to_complex();
  const std::complex<double> z_n2 = (basis.z * basis.n2).to_complex();

  QubitCoefficients c{k_value * z_n2 * (spec.u + spec.v), k_value * spec.u, k_value * spec.v, 0.0};
  const double norm = std::sqrt(c.norm2());
  c.c00 /= norm;
  c.c01 /= norm;
  c.c10 /= norm;
  return c;
}

QubitCoefficients qubit_coefficients(const SuperpositionSpec& spec) {
  return qubit_coefficients(spec, basis_constants(spec));
}

}  // namespace pacsent
