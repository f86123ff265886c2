#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pacsent/analysis.hpp"
#include "pacsent/errors.hpp"
#include "pacsent/fit.hpp"
#include "pacsent/superposition.hpp"

namespace pacsent::cli {

/// File could not be read or written (exit code 4).
class IoError : public Error {
 public:
  using Error::Error;
};

enum class OutputFormat { kCsv, kJson };

/// Everything a CLI invocation needs. Flags and `key = value` config files
/// populate the same fields through apply_entry().
struct RunConfig {
  std::string command;
  SuperpositionSpec spec;  // weights as given; normalized when run
  std::optional<double> p;
  std::vector<SweepAxis> axes;
  OutputFormat format = OutputFormat::kCsv;
  bool oracle = false;
  std::string output;  // empty: stdout

  std::string pcrit_method = "bisect";  // bisect | grid
  double tol = 1e-10;
  std::size_t p_samples = kDefaultPSamples;

  std::string input;
  FitModel model = FitModel::kTanh;

  bool operator==(const RunConfig&) const = default;
};

/// "re", "re+imi", "re-imi" or "imi". Throws InvalidArgument.
std::complex<double> parse_complex(std::string_view text);
/// Exact (17-digit) text that parse_complex reads back unchanged.
std::string format_complex(std::complex<double> value);

/// "name:min:max:samples". Throws InvalidArgument.
SweepAxis parse_axis(std::string_view text);
std::string format_axis(const SweepAxis& axis);

/// Sets one field from its textual key/value. `axis` appends. Throws
/// InvalidArgument on unknown keys or malformed values.
void apply_entry(RunConfig& config, std::string_view key, std::string_view value);

/// Parses `key = value` lines; '#' starts a comment.
RunConfig parse_config(std::string_view text, RunConfig base = {});
RunConfig load_config(const std::string& path, RunConfig base = {});

/// Canonical text form; parse_config(serialize(c)) == c.
std::string serialize(const RunConfig& config);

/// Fixed 12-significant-digit formatting used for every numeric output.
std::string format_number(double value);

}  // namespace pacsent::cli
