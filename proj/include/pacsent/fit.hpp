#pragma once

#include <array>
#include <span>
#include <string>

namespace pacsent {

enum class FitModel {
  kTanh,      // a + b tanh(d (x - c)),   params (a, b, c, d)
  kGaussian,  // a + b exp(-(x - c)^2 / v^2), params (a, b, c, v)
};

struct DataPoint {
  double x = 0.0;
  double y = 0.0;
};

struct FitResult {
  FitModel model = FitModel::kTanh;
  std::array<double, 4> params{};
  double residual_rms = 0.0;
  bool converged = false;
  int iterations = 0;
};

std::string to_string(FitModel model);
/// "tanh" or "gaussian"; throws InvalidArgument otherwise.
FitModel parse_fit_model(const std::string& name);

double model_value(FitModel model, const std::array<double, 4>& params, double x);

/// Multi-start Levenberg-Marquardt fit. 8 starts; each stops when the
/// relative cost decrease falls below 1e-12 or after 500 iterations. The
/// best run is returned; non-convergence is reported in the result. Needs at
/// least 8 points (InvalidArgument otherwise). Sign conventions: d > 0 for
/// tanh, v > 0 for the Gaussian.
FitResult fit_tanh(std::span<const DataPoint> data);
FitResult fit_gaussian(std::span<const DataPoint> data);
FitResult fit(FitModel model, std::span<const DataPoint> data);

}  // namespace pacsent
