#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pacsent/superposition.hpp"

namespace pacsent {

/// Concurrence of a spec, pure or after depolarization with probability p.
/// Degenerate specs (same ray in both branches, or a vanishing state) give 0.
struct Evaluation {
  double concurrence = 0.0;
  bool degenerate = false;
};

Evaluation evaluate(const SuperpositionSpec& spec, std::optional<double> p = std::nullopt);

/// Swept parameter names: alpha, beta, gamma (set the real amplitude),
/// alpha_beta (alpha = beta), u (v = +sqrt(1-u^2)), v (u = +sqrt(1-v^2)),
/// m, n (rounded to integers) and p.
struct SweepAxis {
  std::string name;
  double min = 0.0;
  double max = 1.0;
  std::size_t samples = 101;

  double value(std::size_t index) const;
  bool operator==(const SweepAxis&) const = default;
};

struct SweepGrid {
  std::vector<SweepAxis> axes;  // at most 2; none means one point
  SuperpositionSpec fixed;
  std::optional<double> p;

  /// Throws InvalidArgument on unknown names, samples < 2, min >= max or
  /// more than two axes.
  void validate() const;
};

struct SweepRow {
  std::vector<double> values;  // one per axis
  double concurrence = 0.0;
  bool degenerate = false;
};

struct SweepTable {
  std::vector<std::string> columns;  // axis names
  std::vector<SweepRow> rows;        // row-major over axes
};

bool is_sweep_parameter(const std::string& name);

/// Returns `spec` with parameter `name` set to `value` (p is not a spec field).
SuperpositionSpec with_parameter(SuperpositionSpec spec, const std::string& name, double value);

SweepTable sweep(const SweepGrid& grid);

inline constexpr double kFullDepolarization = 0.75;
inline constexpr std::size_t kBracketScanPoints = 64;
inline constexpr std::size_t kDefaultPSamples = 101;

/// Smallest p in [0, 3/4] at which the depolarized state stops being
/// entangled, by a 64-point bracketing scan followed by bisection to `tol`.
/// Returns 0 for states that are unentangled already.
double p_critical(const SuperpositionSpec& spec, double tol = 1e-10);

/// Largest p on the uniform `samples`-point grid over [0, 3/4] whose
/// depolarized concurrence is still positive (0 when none is). This is
/// p_crit at figure resolution.
double p_critical_on_grid(const SuperpositionSpec& spec, std::size_t samples = kDefaultPSamples);

}  // namespace pacsent
