#include "pacsent/cli/run_config.hpp"

#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace pacsent::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

double parse_double(std::string_view text, std::string_view what) {
  const std::string s(trim(text));
  char* end = nullptr;
  errno = 0;
  const double value = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE || !std::isfinite(value)) {
    throw InvalidArgument("invalid number for " + std::string(what) + ": '" + s + "'");
  }
  return value;
}

unsigned long long parse_unsigned(std::string_view text, std::string_view what) {
  const auto s = trim(text);
  unsigned long long value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw InvalidArgument("invalid nonnegative integer for " + std::string(what) + ": '" +
                          std::string(s) + "'");
  }
  return value;
}

bool parse_bool(std::string_view text, std::string_view what) {
  const auto s = trim(text);
  if (s == "true" || s == "1" || s == "yes" || s == "on") return true;
  if (s == "false" || s == "0" || s == "no" || s == "off") return false;
  throw InvalidArgument("invalid boolean for " + std::string(what) + ": '" + std::string(s) + "'");
}

// Round-trip exact representation for config serialization.
std::string exact(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

}  // namespace

std::complex<double> parse_complex(std::string_view text) {
  const std::string s(trim(text));
  if (s.empty()) throw InvalidArgument("empty complex value");
  if (s.back() != 'i') return {parse_double(s, "complex value"), 0.0};

  const std::string body = s.substr(0, s.size() - 1);
  // Split at the last sign that is not part of an exponent or the leading sign.
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const auto imag_part = [&](std::string_view t) {
    if (t == "+" || t.empty()) return 1.0;
    if (t == "-") return -1.0;
    return parse_double(t, "imaginary part");
  };
  if (split == std::string::npos) return {0.0, imag_part(body)};
  return {parse_double(std::string_view(body).substr(0, split), "real part"),
          imag_part(std::string_view(body).substr(split))};
}

std::string format_number(double value) {
  if (value == 0.0) return "0";
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.12g", value);
  return buffer;
}

std::string format_complex(std::complex<double> value) {
  if (value.imag() == 0.0) return exact(value.real());
  const std::string imag = exact(value.imag());
  return exact(value.real()) + (imag.front() == '-' ? "" : "+") + imag + "i";
}

SweepAxis parse_axis(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto colon = text.find(':', start);
    parts.push_back(trim(text.substr(start, colon - start)));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  if (parts.size() != 4) {
    throw InvalidArgument("axis must be name:min:max:samples, got '" + std::string(text) + "'");
  }
  SweepAxis axis;
  axis.name = std::string(parts[0]);
  axis.min = parse_double(parts[1], "axis min");
  axis.max = parse_double(parts[2], "axis max");
  axis.samples = parse_unsigned(parts[3], "axis samples");
  if (!is_sweep_parameter(axis.name)) {
    throw InvalidArgument("unknown sweep parameter '" + axis.name + "'");
  }
  return axis;
}

std::string format_axis(const SweepAxis& axis) {
  return axis.name + ":" + exact(axis.min) + ":" + exact(axis.max) + ":" +
         std::to_string(axis.samples);
}

void apply_entry(RunConfig& config, std::string_view key_text, std::string_view value) {
  const std::string key(trim(key_text));
  if (key == "command") {
    config.command = std::string(trim(value));
  } else if (key == "alpha") {
    config.spec.alpha = parse_complex(value);
  } else if (key == "beta") {
    config.spec.beta = parse_complex(value);
  } else if (key == "gamma") {
    config.spec.gamma = parse_complex(value);
  } else if (key == "u") {
    config.spec.u = parse_complex(value);
  } else if (key == "v") {
    config.spec.v = parse_complex(value);
  } else if (key == "m") {
    config.spec.m = static_cast<unsigned>(parse_unsigned(value, "m"));
  } else if (key == "n") {
    config.spec.n = static_cast<unsigned>(parse_unsigned(value, "n"));
  } else if (key == "p") {
    config.p = parse_double(value, "p");
  } else if (key == "axis") {
    config.axes.push_back(parse_axis(value));
  } else if (key == "format") {
    const auto f = trim(value);
    if (f == "csv") {
      config.format = OutputFormat::kCsv;
    } else if (f == "json") {
      config.format = OutputFormat::kJson;
    } else {
      throw InvalidArgument("format must be csv or json");
    }
  } else if (key == "oracle") {
    config.oracle = parse_bool(value, "oracle");
  } else if (key == "output") {
    config.output = std::string(trim(value));
  } else if (key == "method") {
    const std::string method(trim(value));
    if (method != "bisect" && method != "grid") {
      throw InvalidArgument("method must be bisect or grid");
    }
    config.pcrit_method = method;
  } else if (key == "tol") {
    config.tol = parse_double(value, "tol");
  } else if (key == "p_samples" || key == "p-samples") {
    config.p_samples = parse_unsigned(value, "p_samples");
  } else if (key == "input") {
    config.input = std::string(trim(value));
  } else if (key == "model") {
    config.model = parse_fit_model(std::string(trim(value)));
  } else {
    throw InvalidArgument("unknown configuration key '" + key + "'");
  }
}

RunConfig parse_config(std::string_view text, RunConfig base) {
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto newline = text.find('\n', start);
    std::string_view line = text.substr(start, newline - start);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) {
      const auto eq = line.find('=');
      if (eq == std::string_view::npos) {
        throw InvalidArgument("config line " + std::to_string(line_no) + ": expected key = value");
      }
      apply_entry(base, line.substr(0, eq), line.substr(eq + 1));
    }
    if (newline == std::string_view::npos) break;
    start = newline + 1;
  }
  return base;
}

RunConfig load_config(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str(), std::move(base));
}

std::string serialize(const RunConfig& c) {
  std::ostringstream out;
  if (!c.command.empty()) out << "command = " << c.command << '\n';
  out << "alpha = " << format_complex(c.spec.alpha) << '\n'
      << "beta = " << format_complex(c.spec.beta) << '\n'
      << "gamma = " << format_complex(c.spec.gamma) << '\n'
      << "u = " << format_complex(c.spec.u) << '\n'
      << "v = " << format_complex(c.spec.v) << '\n'
      << "m = " << c.spec.m << '\n'
      << "n = " << c.spec.n << '\n';
  if (c.p) out << "p = " << exact(*c.p) << '\n';
  for (const auto& axis : c.axes) out << "axis = " << format_axis(axis) << '\n';
  out << "format = " << (c.format == OutputFormat::kCsv ? "csv" : "json") << '\n'
      << "oracle = " << (c.oracle ? "true" : "false") << '\n';
  if (!c.output.empty()) out << "output = " << c.output << '\n';
  out << "method = " << c.pcrit_method << '\n'
      << "tol = " << exact(c.tol) << '\n'
      << "p_samples = " << c.p_samples << '\n';
  if (!c.input.empty()) out << "input = " << c.input << '\n';
  out << "model = " << to_string(c.model) << '\n';
  return out.str();
}

}  // namespace pacsent::cli
