#include "pacsent/cli/commands.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "pacsent/entanglement.hpp"
#include "pacsent/fock_oracle.hpp"
#include "pacsent/qubit_embed.hpp"
#include "pacsent/specfun.hpp"

namespace pacsent::cli {

namespace {

using nlohmann::json;

// JSON numbers go through the same 12-digit formatting as CSV.
double rounded(double value) { return std::stod(format_number(value)); }

SuperpositionSpec normalized_spec(const RunConfig& config) {
  return with_normalized_weights(config.spec);
}

double oracle_value(const SuperpositionSpec& spec, std::optional<double> p) {
  double pure = 0.0;
  try {
    pure = fock::oracle_concurrence(spec);
  } catch (const DegenerateSpecError&) {
    pure = 0.0;
  }
  return p ? fock::oracle_depolarized_concurrence(pure, *p) : pure;
}

void write_csv(std::ostream& out, const std::vector<std::string>& columns,
               const std::vector<std::vector<std::string>>& rows) {
  for (std::size_t k = 0; k < columns.size(); ++k) out << (k ? "," : "") << columns[k];
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t k = 0; k < row.size(); ++k) out << (k ? "," : "") << row[k];
    out << '\n';
  }
}

void write_json_rows(std::ostream& out, const std::vector<std::string>& columns,
                     const std::vector<std::vector<json>>& rows) {
  json array = json::array();
  for (const auto& row : rows) {
    json object = json::object();
    for (std::size_t k = 0; k < columns.size(); ++k) object[columns[k]] = row[k];
    array.push_back(std::move(object));
  }
  out << array.dump(2) << '\n';
}

// Writes a table in the configured format from numeric cells.
void emit_table(const RunConfig& config, std::ostream& out, const std::vector<std::string>& columns,
                const std::vector<std::vector<double>>& rows) {
  if (config.format == OutputFormat::kCsv) {
    std::vector<std::vector<std::string>> text;
    text.reserve(rows.size());
    for (const auto& row : rows) {
      std::vector<std::string> cells;
      for (double v : row) cells.push_back(format_number(v));
      text.push_back(std::move(cells));
    }
    write_csv(out, columns, text);
  } else {
    std::vector<std::vector<json>> values;
    for (const auto& row : rows) {
      std::vector<json> cells;
      for (double v : row) cells.emplace_back(rounded(v));
      values.push_back(std::move(cells));
    }
    write_json_rows(out, columns, values);
  }
}

void add_spec_options(CLI::App& app, std::vector<std::pair<std::string, std::string>>& entries,
                      const std::vector<std::string>& keys) {
  for (const auto& key : keys) {
    std::string flag = "--" + key;
    for (auto& ch : flag) {
      if (ch == '_') ch = '-';
    }
    app.add_option_function<std::vector<std::string>>(
           flag,
           [&entries, key](const std::vector<std::string>& values) {
             for (const auto& value : values) entries.emplace_back(key, value);
           },
           "sets '" + key + "'")
        ->expected(1)
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  }
}

}  // namespace

std::vector<DataPoint> read_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read table '" + path + "'");
  std::vector<DataPoint> data;
  std::string line;
  bool header = true;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    if (header) {
      header = false;
      continue;
    }
    std::istringstream cells(line);
    std::string x_text, y_text;
    if (!std::getline(cells, x_text, ',') || !std::getline(cells, y_text, ',')) {
      throw InvalidArgument("table '" + path + "' line " + std::to_string(line_no) +
                            ": expected at least two columns");
    }
    try {
      data.push_back({std::stod(x_text), std::stod(y_text)});
    } catch (const std::exception&) {
      throw InvalidArgument("table '" + path + "' line " + std::to_string(line_no) +
                            ": non-numeric cell");
    }
  }
  return data;
}

void cmd_overlap(const RunConfig& config, std::ostream& out) {
  const auto& s = config.spec;
  const ScaledComplex value = pacs_overlap(s.alpha, s.beta, s.m, s.n);
  const bool plain = value.representable();
  const std::complex<double> z = plain ? value.to_complex() : std::complex<double>{};
  const double log_magnitude = value.log_magnitude;
  if (config.format == OutputFormat::kCsv) {
    const auto log_text = value.is_zero() ? std::string("-inf") : format_number(log_magnitude);
    write_csv(out, {"log_magnitude", "phase", "re", "im"},
              {{log_text, format_number(value.phase), plain ? format_number(z.real()) : "",
                plain ? format_number(z.imag()) : ""}});
  } else {
    json j;
    j["log_magnitude"] = value.is_zero() ? json(nullptr) : json(rounded(log_magnitude));
    j["phase"] = rounded(value.phase);
    j["value"] = plain ? json{{"re", rounded(z.real())}, {"im", rounded(z.imag())}} : json(nullptr);
    out << j.dump(2) << '\n';
  }
}

void cmd_concurrence(const RunConfig& config, std::ostream& out) {
  const SuperpositionSpec spec = normalized_spec(config);
  const Evaluation e = evaluate(spec, config.p);
  std::vector<std::string> columns{"concurrence"};
  std::vector<double> row{e.concurrence};
  if (config.oracle) {
    const double oracle = oracle_value(spec, config.p);
    columns.insert(columns.end(), {"oracle", "abs_diff"});
    row.insert(row.end(), {oracle, std::abs(oracle - e.concurrence)});
  }
  columns.push_back("degenerate");
  row.push_back(e.degenerate ? 1.0 : 0.0);
  emit_table(config, out, columns, {row});
}

void cmd_sweep(const RunConfig& config, std::ostream& out) {
  SweepGrid grid;
  grid.axes = config.axes;
  grid.fixed = normalized_spec(config);
  grid.p = config.p;
  const SweepTable table = sweep(grid);

  std::vector<std::string> columns = table.columns;
  columns.push_back("concurrence");
  if (config.oracle) columns.insert(columns.end(), {"oracle", "abs_diff"});
  columns.push_back("degenerate");

  std::vector<std::vector<double>> rows;
  rows.reserve(table.rows.size());
  for (const auto& r : table.rows) {
    std::vector<double> row = r.values;
    row.push_back(r.concurrence);
    if (config.oracle) {
      SuperpositionSpec spec = grid.fixed;
      std::optional<double> p = grid.p;
      for (std::size_t a = 0; a < grid.axes.size(); ++a) {
        if (grid.axes[a].name == "p") {
          p = r.values[a];
        } else {
          spec = with_parameter(spec, grid.axes[a].name, r.values[a]);
        }
      }
      const double oracle = oracle_value(spec, p);
      row.insert(row.end(), {oracle, std::abs(oracle - r.concurrence)});
    }
    row.push_back(r.degenerate ? 1.0 : 0.0);
    rows.push_back(std::move(row));
  }
  emit_table(config, out, columns, rows);
}

void cmd_pcrit(const RunConfig& config, std::ostream& out) {
  if (config.axes.size() > 1) throw InvalidArgument("pcrit accepts at most one axis");
  const SuperpositionSpec base = normalized_spec(config);
  const bool grid = config.pcrit_method == "grid";
  const auto compute = [&](const SuperpositionSpec& spec) {
    return grid ? p_critical_on_grid(spec, config.p_samples) : p_critical(spec, config.tol);
  };
  // Exact threshold of the Schmidt-route concurrence C0: 3 C0 / (2 + 4 C0).
  const auto oracle = [&](const SuperpositionSpec& spec) {
    const double c0 = oracle_value(spec, std::nullopt);
    return 3.0 * c0 / (2.0 + 4.0 * c0);
  };

  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  if (config.axes.empty()) {
    columns = {"p_crit"};
    const double value = compute(base);
    std::vector<double> row{value};
    if (config.oracle) {
      const double o = oracle(base);
      row.insert(row.end(), {o, std::abs(o - value)});
    }
    rows.push_back(std::move(row));
  } else {
    const SweepAxis& axis = config.axes.front();
    if (axis.name == "p") throw InvalidArgument("pcrit cannot sweep p");
    SweepGrid check{{axis}, base, std::nullopt};
    check.validate();
    columns = {axis.name, "p_crit"};
    for (std::size_t k = 0; k < axis.samples; ++k) {
      const SuperpositionSpec spec = with_parameter(base, axis.name, axis.value(k));
      const double x = axis.name == "m" ? spec.m : axis.name == "n" ? spec.n : axis.value(k);
      const double value = compute(spec);
      std::vector<double> row{x, value};
      if (config.oracle) {
        const double o = oracle(spec);
        row.insert(row.end(), {o, std::abs(o - value)});
      }
      rows.push_back(std::move(row));
    }
  }
  if (config.oracle) columns.insert(columns.end(), {"oracle", "abs_diff"});
  emit_table(config, out, columns, rows);
}

void cmd_fit(const RunConfig& config, std::ostream& out) {
  if (config.input.empty()) throw InvalidArgument("fit requires --input");
  const auto data = read_table(config.input);
  const FitResult result = fit(config.model, data);
  const char* last = config.model == FitModel::kTanh ? "d" : "v";
  json j;
  j["model"] = to_string(result.model);
  j["params"] = {{"a", rounded(result.params[0])},
                 {"b", rounded(result.params[1])},
                 {"c", rounded(result.params[2])},
                 {last, rounded(result.params[3])}};
  j["residual_rms"] =
      std::isfinite(result.residual_rms) ? json(rounded(result.residual_rms)) : json(nullptr);
  j["converged"] = result.converged;
  j["iterations"] = result.iterations;
  j["points"] = data.size();
  out << j.dump(2) << '\n';
}

void execute(const RunConfig& config, std::ostream& out) {
  std::ofstream file;
  std::ostream* target = &out;
  if (!config.output.empty()) {
    file.open(config.output);
    if (!file) throw IoError("cannot write output file '" + config.output + "'");
    target = &file;
  }
  if (config.command == "overlap") {
    cmd_overlap(config, *target);
  } else if (config.command == "concurrence") {
    cmd_concurrence(config, *target);
  } else if (config.command == "sweep") {
    cmd_sweep(config, *target);
  } else if (config.command == "pcrit") {
    cmd_pcrit(config, *target);
  } else if (config.command == "fit") {
    cmd_fit(config, *target);
  } else {
    throw InvalidArgument("unknown command '" + config.command + "'");
  }
  if (file.is_open()) {
    file.flush();
    if (!file) throw IoError("failed writing '" + config.output + "'");
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entanglement of photon-added coherent state superpositions"};
  app.require_subcommand(1);

  const std::vector<std::string> spec_keys{"alpha", "beta", "gamma", "u", "v", "m", "n"};

  // Entries are applied in command-line order after the config file.
  std::vector<std::pair<std::string, std::string>> entries;
  std::string config_path;
  bool oracle = false;

  const auto common = [&](CLI::App* sub, bool with_spec) {
    sub->add_option("--config", config_path, "key = value configuration file");
    add_spec_options(*sub, entries, {"format", "output"});
    if (with_spec) {
      add_spec_options(*sub, entries, spec_keys);
      sub->add_flag("--oracle", oracle, "cross-check against the Fock-space oracle");
    }
  };

  auto* overlap = app.add_subcommand("overlap", "non-normalized PACS overlap <alpha|a^m a^{dag n}|beta>");
  overlap->add_option("--config", config_path, "key = value configuration file");
  add_spec_options(*overlap, entries, {"alpha", "beta", "m", "n", "format", "output"});

  auto* concurrence = app.add_subcommand("concurrence", "concurrence of one superposition");
  common(concurrence, true);
  add_spec_options(*concurrence, entries, {"p"});

  auto* sweep_cmd = app.add_subcommand("sweep", "concurrence over a parameter grid");
  common(sweep_cmd, true);
  add_spec_options(*sweep_cmd, entries, {"p", "axis"});

  auto* pcrit = app.add_subcommand("pcrit", "critical depolarization probability");
  common(pcrit, true);
  add_spec_options(*pcrit, entries, {"axis", "method", "tol", "p_samples"});

  auto* fit_cmd = app.add_subcommand("fit", "fit tanh or Gaussian models to a (x, p_crit) table");
  fit_cmd->add_option("--config", config_path, "key = value configuration file");
  add_spec_options(*fit_cmd, entries, {"input", "model", "output"});

  auto* recipe = app.add_subcommand("run", "execute a recipe file; its 'command' key picks the subcommand");
  recipe->add_option("--config", config_path, "key = value configuration file")->required();
  add_spec_options(*recipe, entries, {"format", "output"});

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kArgumentError;
  }

  try {
    RunConfig config;
    if (!config_path.empty()) config = load_config(config_path);
    const std::string name = app.get_subcommands().front()->get_name();
    if (name != "run") {
      config.command = name;
    } else if (config.command.empty()) {
      throw InvalidArgument("recipe '" + config_path + "' has no 'command' entry");
    }
    for (const auto& [key, value] : entries) apply_entry(config, key, value);
    if (oracle) config.oracle = true;
    execute(config, out);
    return kSuccess;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kArgumentError;
  } catch (const DegenerateSpecError& e) {
    err << "error: " << e.what() << '\n';
    return kArgumentError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kNumericRangeError;
  }
}

}  // namespace pacsent::cli
