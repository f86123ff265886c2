#include "pacsent/fock_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pacsent/errors.hpp"
#include "pacsent/specfun.hpp"

namespace pacsent::fock {

namespace {

double tail_weight(const FockVector& v) {
  const std::size_t start = v.dim() > 10 ? v.dim() - 10 : 0;
  double tail = 0.0;
  for (std::size_t k = start; k < v.dim(); ++k) tail += std::norm(v.amplitudes[k]);
  return tail;
}

void certify_tail(const FockVector& v, double extra_tail, const char* what) {
  const double total = v.norm2() + extra_tail;
  if (total == 0.0) return;
  const double relative = (tail_weight(v) + extra_tail) / total;
  if (!(relative < kTailBound)) {
    throw DimensionError(std::string(what) + ": truncation tail " + std::to_string(relative) +
                         " exceeds bound at dim " + std::to_string(v.dim()));
  }
}

}  // namespace

double FockVector::norm2() const {
  double sum = 0.0;
  for (const auto& a : amplitudes) sum += std::norm(a);
  return sum;
}

std::size_t suggested_dim(double max_amplitude, unsigned extra_photons) {
  const double r = std::abs(max_amplitude);
  const auto base = static_cast<std::size_t>(std::ceil(r * r + 10.0 * r + 50.0));
  return std::max(kMinDim, base + extra_photons);
}

FockVector coherent_fock(std::complex<double> alpha, std::size_t dim) {
  if (dim < kMinDim) {
    throw DimensionError("coherent_fock: dim must be at least " + std::to_string(kMinDim));
  }
  FockVector v{std::vector<std::complex<double>>(dim)};
  if (alpha == std::complex<double>{}) {
    v.amplitudes[0] = 1.0;
    return v;
  }
  const double log_r = std::log(std::abs(alpha));
  const double theta = std::arg(alpha);
  const double log_prefactor = -std::norm(alpha) / 2.0;
  for (std::size_t k = 0; k < dim; ++k) {
    const double log_amp = log_prefactor + k * log_r - 0.5 * log_gamma(k + 1.0);
    v.amplitudes[k] = std::polar(std::exp(log_amp), k * theta);
  }
  certify_tail(v, 0.0, "coherent_fock");
  return v;
}

FockVector create(const FockVector& v, unsigned times) {
  FockVector out = v;
  const std::size_t dim = v.dim();
  double dropped = 0.0;
  for (unsigned t = 0; t < times; ++t) {
    if (dim == 0) break;
    dropped = dropped * dim + std::norm(out.amplitudes[dim - 1]) * dim;
    for (std::size_t k = dim - 1; k > 0; --k) {
      out.amplitudes[k] = std::sqrt(static_cast<double>(k)) * out.amplitudes[k - 1];
    }
    out.amplitudes[0] = 0.0;
  }
  certify_tail(out, dropped, "create");
  return out;
}

std::complex<double> inner(const FockVector& u, const FockVector& v) {
  if (u.dim() != v.dim()) {
    throw DimensionError("inner: dimension mismatch " + std::to_string(u.dim()) + " vs " +
                         std::to_string(v.dim()));
  }
  std::complex<double> sum{};
  for (std::size_t k = 0; k < u.dim(); ++k) sum += std::conj(u.amplitudes[k]) * v.amplitudes[k];
  return sum;
}

FockVector normalized(FockVector v) {
  const double norm = std::sqrt(v.norm2());
  if (norm == 0.0) throw NumericalFailure("normalized: zero vector");
  for (auto& a : v.amplitudes) a /= norm;
  return v;
}

TwoModeState product(const FockVector& a, const FockVector& b) {
  const Eigen::Map<const Eigen::VectorXcd> va(a.amplitudes.data(), a.dim());
  const Eigen::Map<const Eigen::VectorXcd> vb(b.amplitudes.data(), b.dim());
  return {va * vb.transpose()};
}

TwoModeState superposition_state(const SuperpositionSpec& spec) {
  spec.validate();
  const auto alpha = spec.effective_alpha();
  const auto beta = spec.effective_beta();
  const std::size_t dim =
      suggested_dim(std::max(std::abs(alpha), std::abs(beta)), spec.m + spec.n);

  // Both product terms carry the same norm ||a^{dag m}|alpha>|| ||a^{dag n}|beta>||,
  // so each branch vector may be normalized on its own.
  const auto first = normalized(create(coherent_fock(alpha, dim), spec.m));
  const auto second = normalized(create(coherent_fock(beta, dim), spec.n));

  TwoModeState state{spec.u * product(first, second).amplitudes +
                     spec.v * product(second, first).amplitudes};
  const double norm = std::sqrt(state.norm2());
  if (!(norm > 1e-12)) {
    throw DegenerateSpecError("superposition_state: branches cancel to the null vector");
  }
  state.amplitudes /= norm;
  return state;
}

Eigen::VectorXd schmidt_coefficients(const TwoModeState& state) {
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(state.amplitudes);
  return svd.singularValues();
}

double schmidt_concurrence(const TwoModeState& state) {
  const Eigen::VectorXd sigma = schmidt_coefficients(state);
  if (sigma.size() > 2 && sigma(2) > 1e-8) {
    throw NumericalFailure("schmidt_concurrence: Schmidt rank exceeds 2 (sigma_3 = " +
                           std::to_string(sigma(2)) + ")");
  }
  const double s1 = sigma.size() > 0 ? sigma(0) : 0.0;
  const double s2 = sigma.size() > 1 ? sigma(1) : 0.0;
  return std::clamp(2.0 * s1 * s2, 0.0, 1.0);
}

double oracle_concurrence(const SuperpositionSpec& spec) {
  return schmidt_concurrence(superposition_state(spec));
}

double oracle_depolarized_concurrence(double pure_concurrence, double p) {
  return std::max(0.0, (1.0 - 4.0 * p / 3.0) * pure_concurrence - 2.0 * p / 3.0);
}

}  // namespace pacsent::fock
