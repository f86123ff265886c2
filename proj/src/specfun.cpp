#include "pacsent/specfun.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "pacsent/errors.hpp"

namespace pacsent {

namespace {

constexpr int kMaxSeriesTerms = 10000;
constexpr int kQuietTermsToStop = 3;
const double kLogSeriesTolerance = std::log(1e-18);

double log_add(double x, double y) {
  if (x < y) std::swap(x, y);
  if (y == -std::numeric_limits<double>::infinity()) return x;
  return x + std::log1p(std::exp(y - x));
}

}  // namespace

double laguerre(unsigned m, double x) {
  if (m == 0) return 1.0;
  double previous = 1.0;
  double current = 1.0 - x;
  for (unsigned k = 1; k < m; ++k) {
    const double next = ((2.0 * k + 1.0 - x) * current - k * previous) / (k + 1.0);
    previous = current;
    current = next;
  }
  return current;
}

double log_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("log_gamma: argument must be positive and finite, got " + std::to_string(x));
  }
  int sign = 0;
  return ::lgamma_r(x, &sign);
}

ScaledComplex regularized_1f1(int a, int b, std::complex<double> z) {
  if (a < 1) throw DomainError("regularized_1f1: a must be a positive integer");
  // 1/Gamma(b+k) vanishes for b+k <= 0.
  const int first = b < 1 ? 1 - b : 0;

  if (z == std::complex<double>{}) {
    if (first > 0) return ScaledComplex::zero();
    return ScaledComplex::from_log(-log_gamma(b));
  }

  const double log_abs_z = std::log(std::abs(z));
  const double arg_z = std::arg(z);

  std::vector<ScaledComplex> terms;
  terms.reserve(256);
  double log_term = log_gamma(a + first) - log_gamma(a) + first * log_abs_z -
                    log_gamma(b + first) - log_gamma(first + 1.0);
  double log_abs_sum = -std::numeric_limits<double>::infinity();
  int quiet = 0;
  for (int k = first; k < first + kMaxSeriesTerms; ++k) {
    terms.push_back(ScaledComplex::from_log(log_term, k * arg_z));
    if (log_term < log_abs_sum + kLogSeriesTolerance) {
      if (++quiet >= kQuietTermsToStop) return scaled_sum(terms);
    } else {
      quiet = 0;
    }
    log_abs_sum = log_add(log_abs_sum, log_term);
    // t_{k+1} / t_k = (a+k) z / ((b+k)(k+1))
    log_term += std::log(static_cast<double>(a + k)) + log_abs_z -
                std::log(static_cast<double>(b + k)) - std::log(k + 1.0);
  }
  throw ConvergenceError("regularized_1f1: series exceeded " + std::to_string(kMaxSeriesTerms) +
                         " terms (|z| = " + std::to_string(std::abs(z)) + ")");
}

ScaledComplex pacs_overlap(std::complex<double> alpha, std::complex<double> beta, unsigned m,
                           unsigned n) {
  const auto in_range = [](std::complex<double> x) {
    return std::isfinite(x.real()) && std::isfinite(x.imag()) &&
           std::abs(x) <= kMaxCoherentAmplitude;
  };
  if (!in_range(alpha) || !in_range(beta)) {
    throw RangeError("pacs_overlap: coherent amplitudes must satisfy |.| <= " +
                     std::to_string(kMaxCoherentAmplitude));
  }

  if (n > m) return pacs_overlap(beta, alpha, n, m).conj();

  // Kummer's transformation turns the hypergeometric factor into a polynomial:
  //   Gamma(1+m) 1F1~(1+m; 1+k; z) = e^z n! sum_j C(m, n-j) z^j / j!,  k = m - n, z = alpha* beta,
  // which has no e^{|z|}-sized terms to cancel when Re z < 0.
  const unsigned shift = m - n;
  const std::complex<double> z = std::conj(alpha) * beta;
  ScaledComplex result = ScaledComplex::from_log(-0.5 * std::norm(alpha - beta), z.imag());
  if (shift > 0) {
    if (beta == std::complex<double>{}) return ScaledComplex::zero();
    result = result * ScaledComplex::from_complex(beta).pow(static_cast<int>(shift));
  }

  // Terms relative to j = 0, t_{j+1} / t_j = z (n - j) / ((k + j + 1)(j + 1)).
  using Wide = std::complex<long double>;
  const Wide zw(z.real(), z.imag());
  constexpr long double kRescale = 1e-1000L;
  Wide term = 1.0L;
  Wide sum = 1.0L;
  long double log_offset = 0.0L;
  for (unsigned j = 0; j < n; ++j) {
    term *= zw * static_cast<long double>(n - j) /
            (static_cast<long double>(shift + j + 1) * static_cast<long double>(j + 1));
    sum += term;
    if (std::abs(sum) > 1e1000L || std::abs(term) > 1e1000L) {
      term *= kRescale;
      sum *= kRescale;
      log_offset += 1000.0L * std::log(10.0L);
    }
  }
  if (sum == Wide{}) return ScaledComplex::zero();
  // n! C(m, n) = m! / k!
  const long double log_sum = std::log(std::abs(sum)) + log_offset;
  ScaledComplex poly = ScaledComplex::from_log(
      static_cast<double>(log_sum) + log_gamma(m + 1.0) - log_gamma(shift + 1.0),
      static_cast<double>(std::arg(sum)));
  return result * poly;
}

double log_pacs_norm2(std::complex<double> alpha, unsigned m) {
  return pacs_overlap(alpha, alpha, m, m).log_magnitude;
}

}  // namespace pacsent
