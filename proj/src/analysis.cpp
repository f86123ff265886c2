#include "pacsent/analysis.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "pacsent/entanglement.hpp"
#include "pacsent/errors.hpp"
#include "pacsent/qubit_embed.hpp"

namespace pacsent {

namespace {

constexpr std::array kSweepParameters{"alpha", "beta", "gamma", "alpha_beta", "u",
                                      "v",     "m",    "n",     "p"};

// Wootters margin above this counts as entangled on the p-grid.
constexpr double kPositiveMargin = 1e-12;

std::optional<QubitCoefficients> coefficients_or_degenerate(const SuperpositionSpec& spec) {
  if (spec.degenerate()) return std::nullopt;
  try {
    return qubit_coefficients(spec);
  } catch (const DegenerateSpecError&) {
    return std::nullopt;
  }
}

unsigned photon_count(double value) {
  const double rounded = std::round(value);
  if (rounded < 0.0) throw InvalidArgument("photon numbers must be nonnegative");
  return static_cast<unsigned>(rounded);
}

double margin_at(const QubitCoefficients& c, double p) {
  return wootters_margin(depolarize(c, p));
}

}  // namespace

Evaluation evaluate(const SuperpositionSpec& spec, std::optional<double> p) {
  spec.validate();
  if (p && !(*p >= 0.0 && *p <= kFullDepolarization)) {
    throw RangeError("p must lie in [0, 3/4]");
  }
  const auto c = coefficients_or_degenerate(spec);
  if (!c) return {0.0, true};
  if (!p) return {concurrence_pure(*c), false};
  return {concurrence_mixed(depolarize(*c, *p)), false};
}

double SweepAxis::value(std::size_t index) const {
  if (samples < 2) return min;
  const double t = static_cast<double>(index) / static_cast<double>(samples - 1);
  return index + 1 == samples ? max : min + t * (max - min);
}

bool is_sweep_parameter(const std::string& name) {
  return std::find(kSweepParameters.begin(), kSweepParameters.end(), name) !=
         kSweepParameters.end();
}

void SweepGrid::validate() const {
  if (axes.size() > 2) throw InvalidArgument("sweep grids support at most two axes");
  for (const auto& axis : axes) {
    if (!is_sweep_parameter(axis.name)) {
      throw InvalidArgument("unknown sweep parameter '" + axis.name + "'");
    }
    if (axis.samples < 2) throw InvalidArgument("axis '" + axis.name + "' needs >= 2 samples");
    if (!(axis.min < axis.max)) {
      throw InvalidArgument("axis '" + axis.name + "' needs min < max");
    }
    if ((axis.name == "u" || axis.name == "v") && (axis.min < -1.0 || axis.max > 1.0)) {
      throw InvalidArgument("weight axis '" + axis.name + "' must lie in [-1, 1]");
    }
    if ((axis.name == "m" || axis.name == "n") && axis.min < 0.0) {
      throw InvalidArgument("photon-number axis '" + axis.name + "' must be nonnegative");
    }
    if (axis.name == "p" && (axis.min < 0.0 || axis.max > kFullDepolarization)) {
      throw InvalidArgument("p axis must lie in [0, 3/4]");
    }
  }
  if (axes.size() == 2 && axes[0].name == axes[1].name) {
    throw InvalidArgument("sweep axes must be distinct");
  }
  if (p && !(*p >= 0.0 && *p <= kFullDepolarization)) {
    throw InvalidArgument("p must lie in [0, 3/4]");
  }
  fixed.validate();
}

SuperpositionSpec with_parameter(SuperpositionSpec spec, const std::string& name, double value) {
  if (name == "alpha") {
    spec.alpha = value;
  } else if (name == "beta") {
    spec.beta = value;
  } else if (name == "gamma") {
    spec.gamma = value;
  } else if (name == "alpha_beta") {
    spec.alpha = value;
    spec.beta = value;
  } else if (name == "u") {
    spec.u = value;
    spec.v = std::sqrt(std::max(0.0, 1.0 - value * value));
  } else if (name == "v") {
    spec.v = value;
    spec.u = std::sqrt(std::max(0.0, 1.0 - value * value));
  } else if (name == "m") {
    spec.m = photon_count(value);
  } else if (name == "n") {
    spec.n = photon_count(value);
  } else {
    throw InvalidArgument("'" + name + "' is not a superposition parameter");
  }
  return spec;
}

SweepTable sweep(const SweepGrid& grid) {
  grid.validate();
  SweepTable table;
  for (const auto& axis : grid.axes) table.columns.push_back(axis.name);

  const std::size_t outer = grid.axes.empty() ? 1 : grid.axes[0].samples;
  const std::size_t inner = grid.axes.size() < 2 ? 1 : grid.axes[1].samples;
  table.rows.reserve(outer * inner);

  for (std::size_t i = 0; i < outer; ++i) {
    for (std::size_t j = 0; j < inner; ++j) {
      SweepRow row;
      SuperpositionSpec spec = grid.fixed;
      std::optional<double> p = grid.p;
      for (std::size_t a = 0; a < grid.axes.size(); ++a) {
        const auto& axis = grid.axes[a];
        const double value = axis.value(a == 0 ? i : j);
        row.values.push_back(value);
        if (axis.name == "p") {
          p = value;
        } else {
          spec = with_parameter(spec, axis.name, value);
        }
      }
      // Integer axes report the value actually used.
      for (std::size_t a = 0; a < grid.axes.size(); ++a) {
        if (grid.axes[a].name == "m") row.values[a] = spec.m;
        if (grid.axes[a].name == "n") row.values[a] = spec.n;
      }
      const Evaluation e = evaluate(spec, p);
      row.concurrence = e.concurrence;
      row.degenerate = e.degenerate;
      table.rows.push_back(std::move(row));
    }
  }
  return table;
}

double p_critical(const SuperpositionSpec& spec, double tol) {
  spec.validate();
  if (!(tol >= 1e-10)) throw InvalidArgument("p_critical: tol must be >= 1e-10");
  const auto c = coefficients_or_degenerate(spec);
  if (!c) return 0.0;
  if (!(margin_at(*c, 0.0) > 0.0)) return 0.0;

  double lo = 0.0;
  double hi = -1.0;
  for (std::size_t k = 1; k < kBracketScanPoints; ++k) {
    const double p = kFullDepolarization * static_cast<double>(k) /
                     static_cast<double>(kBracketScanPoints - 1);
    if (margin_at(*c, p) > 0.0) {
      lo = p;
    } else {
      hi = p;
      break;
    }
  }
  if (hi < 0.0) throw BracketFailure("p_critical: concurrence does not vanish by p = 3/4");

  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (margin_at(*c, mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double p_critical_on_grid(const SuperpositionSpec& spec, std::size_t samples) {
  spec.validate();
  if (samples < 2) throw InvalidArgument("p_critical_on_grid: need >= 2 samples");
  const auto c = coefficients_or_degenerate(spec);
  if (!c) return 0.0;
  const SweepAxis axis{"p", 0.0, kFullDepolarization, samples};
  double last_entangled = 0.0;
  for (std::size_t k = 0; k < samples; ++k) {
    const double p = axis.value(k);
    if (margin_at(*c, p) > kPositiveMargin) {
      last_entangled = p;
    } else {
      break;
    }
  }
  return last_entangled;
}

}  // namespace pacsent
