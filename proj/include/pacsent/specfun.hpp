#pragma once

#include <complex>

#include "pacsent/scaled_complex.hpp"

namespace pacsent {

/// Laguerre polynomial L_m(x) via the three-term recurrence
///   (k+1) L_{k+1} = (2k+1-x) L_k - k L_{k-1}.
double laguerre(unsigned m, double x);

/// ln Gamma(x) for x > 0. Throws DomainError otherwise.
double log_gamma(double x);

/// Regularized confluent hypergeometric function
///   1F1~(a; b; z) = sum_k (a)_k z^k / (Gamma(b+k) k!)
/// for integer a >= 1 and any integer b. Terms with b+k <= 0 vanish.
/// Throws ConvergenceError past 10000 terms.
ScaledComplex regularized_1f1(int a, int b, std::complex<double> z);

/// Largest |alpha|, |beta| accepted by pacs_overlap.
inline constexpr double kMaxCoherentAmplitude = 50.0;

/// Non-normalized overlap <alpha| a^m a^{dagger n} |beta>, i.e. the inner
/// product of a^{dagger m}|alpha> with a^{dagger n}|beta>:
///   exp(-(|alpha|^2+|beta|^2)/2) beta^{m-n} Gamma(1+m) 1F1~(1+m; 1+m-n; alpha* beta)
/// evaluated as a terminating polynomial, so it keeps full relative accuracy
/// when Re(alpha* beta) < 0.
/// Throws RangeError when |alpha| or |beta| exceeds kMaxCoherentAmplitude.
ScaledComplex pacs_overlap(std::complex<double> alpha, std::complex<double> beta, unsigned m,
                           unsigned n);

/// ln(m! L_m(-|alpha|^2)), the squared norm of a^{dagger m}|alpha>.
double log_pacs_norm2(std::complex<double> alpha, unsigned m);

}  // namespace pacsent
