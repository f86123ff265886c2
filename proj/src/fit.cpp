#include "pacsent/fit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include <Eigen/Dense>

#include "pacsent/errors.hpp"

namespace pacsent {

namespace {

using Params = std::array<double, 4>;

constexpr int kMaxIterations = 500;
constexpr double kRelativeDecrease = 1e-12;
constexpr std::size_t kMinPoints = 8;

Eigen::Vector4d gradient(FitModel model, const Params& q, double x) {
  if (model == FitModel::kTanh) {
    const double t = std::tanh(q[3] * (x - q[2]));
    const double sech2 = 1.0 - t * t;
    return {1.0, t, -q[1] * q[3] * sech2, q[1] * (x - q[2]) * sech2};
  }
  const double dx = x - q[2];
  const double v2 = q[3] * q[3];
  const double e = std::exp(-dx * dx / v2);
  return {1.0, e, q[1] * e * 2.0 * dx / v2, q[1] * e * 2.0 * dx * dx / (v2 * q[3])};
}

double cost(FitModel model, const Params& q, std::span<const DataPoint> data) {
  double sum = 0.0;
  for (const auto& d : data) {
    const double r = model_value(model, q, d.x) - d.y;
    sum += r * r;
  }
  return std::isfinite(sum) ? 0.5 * sum : std::numeric_limits<double>::infinity();
}

FitResult levenberg_marquardt(FitModel model, Params q, std::span<const DataPoint> data) {
  FitResult result;
  result.model = model;
  double current = cost(model, q, data);
  double lambda = 1e-3;
  int iteration = 0;
  bool converged = false;

  while (iteration < kMaxIterations && std::isfinite(current)) {
    ++iteration;
    if (current < 1e-30) {
      converged = true;
      break;
    }
    Eigen::Matrix4d jtj = Eigen::Matrix4d::Zero();
    Eigen::Vector4d jtr = Eigen::Vector4d::Zero();
    for (const auto& d : data) {
      const Eigen::Vector4d g = gradient(model, q, d.x);
      const double r = model_value(model, q, d.x) - d.y;
      jtj += g * g.transpose();
      jtr += g * r;
    }
    const double diag_floor = 1e-12 * std::max(1.0, jtj.diagonal().maxCoeff());

    bool accepted = false;
    while (!accepted) {
      Eigen::Matrix4d damped = jtj;
      for (int i = 0; i < 4; ++i) damped(i, i) += lambda * std::max(jtj(i, i), diag_floor);
      const Eigen::Vector4d step = damped.ldlt().solve(-jtr);
      Params trial = q;
      for (int i = 0; i < 4; ++i) trial[i] += step(i);
      const double trial_cost = step.allFinite() ? cost(model, trial, data)
                                                 : std::numeric_limits<double>::infinity();
      if (trial_cost < current) {
        const double decrease = (current - trial_cost) / current;
        q = trial;
        current = trial_cost;
        lambda = std::max(lambda / 3.0, 1e-15);
        accepted = true;
        if (decrease < kRelativeDecrease) converged = true;
      } else {
        lambda *= 4.0;
        // No damped step reduces the cost: stationary point.
        if (lambda > 1e16) {
          converged = true;
          break;
        }
      }
    }
    if (converged) break;
  }

  if (model == FitModel::kTanh && q[3] < 0.0) {
    q[1] = -q[1];
    q[3] = -q[3];
  }
  if (model == FitModel::kGaussian) q[3] = std::abs(q[3]);

  result.params = q;
  result.iterations = iteration;
  result.converged = converged && std::isfinite(current);
  result.residual_rms = std::isfinite(current)
                            ? std::sqrt(2.0 * current / static_cast<double>(data.size()))
                            : std::numeric_limits<double>::infinity();
  return result;
}

struct Summary {
  double x_min, x_max, y_min, y_max, y_mean, y_median;
};

Summary summarize(std::span<const DataPoint> data) {
  Summary s{data[0].x, data[0].x, data[0].y, data[0].y, 0.0, 0.0};
  std::vector<double> ys;
  ys.reserve(data.size());
  for (const auto& d : data) {
    s.x_min = std::min(s.x_min, d.x);
    s.x_max = std::max(s.x_max, d.x);
    s.y_min = std::min(s.y_min, d.y);
    s.y_max = std::max(s.y_max, d.y);
    s.y_mean += d.y;
    ys.push_back(d.y);
  }
  s.y_mean /= static_cast<double>(data.size());
  std::nth_element(ys.begin(), ys.begin() + ys.size() / 2, ys.end());
  s.y_median = ys[ys.size() / 2];
  return s;
}

void check_data(std::span<const DataPoint> data) {
  if (data.size() < kMinPoints) {
    throw InvalidArgument("fit needs at least 8 data points, got " + std::to_string(data.size()));
  }
  for (const auto& d : data) {
    if (!std::isfinite(d.x) || !std::isfinite(d.y)) {
      throw InvalidArgument("fit data contains non-finite values");
    }
  }
}

std::vector<Params> tanh_starts(std::span<const DataPoint> data) {
  const Summary s = summarize(data);
  const double half_range = std::max(0.5 * (s.y_max - s.y_min), 1e-6);
  const double mid = 0.5 * (s.x_min + s.x_max);
  std::vector<Params> starts;
  for (double d : {0.1, 0.5, 1.0, 3.0}) {
    for (double sign : {1.0, -1.0}) starts.push_back({s.y_mean, sign * half_range, mid, d});
  }
  return starts;
}

std::vector<Params> gaussian_starts(std::span<const DataPoint> data) {
  const Summary s = summarize(data);
  const auto extreme = std::max_element(data.begin(), data.end(), [&](auto& l, auto& r) {
    return std::abs(l.y - s.y_median) < std::abs(r.y - s.y_median);
  });
  const double amplitude = extreme->y - s.y_median;
  const double mid = 0.5 * (s.x_min + s.x_max);
  std::vector<Params> starts;
  for (double v : {0.1, 0.5, 1.0, 3.0}) {
    starts.push_back({s.y_median, amplitude, extreme->x, v});
    starts.push_back({s.y_median, amplitude, mid, v});
  }
  return starts;
}

}  // namespace

std::string to_string(FitModel model) {
  return model == FitModel::kTanh ? "tanh" : "gaussian";
}

FitModel parse_fit_model(const std::string& name) {
  if (name == "tanh") return FitModel::kTanh;
  if (name == "gaussian") return FitModel::kGaussian;
  throw InvalidArgument("unknown fit model '" + name + "' (expected tanh or gaussian)");
}

double model_value(FitModel model, const Params& q, double x) {
  if (model == FitModel::kTanh) return q[0] + q[1] * std::tanh(q[3] * (x - q[2]));
  const double dx = x - q[2];
  return q[0] + q[1] * std::exp(-dx * dx / (q[3] * q[3]));
}

FitResult fit(FitModel model, std::span<const DataPoint> data) {
  check_data(data);
  const auto starts = model == FitModel::kTanh ? tanh_starts(data) : gaussian_starts(data);
  FitResult best;
  best.model = model;
  best.residual_rms = std::numeric_limits<double>::infinity();
  for (const auto& start : starts) {
    FitResult candidate = levenberg_marquardt(model, start, data);
    if (candidate.residual_rms < best.residual_rms) best = candidate;
  }
  return best;
}

FitResult fit_tanh(std::span<const DataPoint> data) { return fit(FitModel::kTanh, data); }

FitResult fit_gaussian(std::span<const DataPoint> data) {
  return fit(FitModel::kGaussian, data);
}

}  // namespace pacsent
