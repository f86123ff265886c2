#include "pacsent/superposition.hpp"

#include <cmath>
#include <string>

#include "pacsent/errors.hpp"

namespace pacsent {

namespace {
bool finite(std::complex<double> x) { return std::isfinite(x.real()) && std::isfinite(x.imag()); }
}  // namespace

void SuperpositionSpec::validate() const {
  if (!finite(alpha) || !finite(beta) || !finite(gamma) || !finite(u) || !finite(v)) {
    throw InvalidArgument("superposition spec has non-finite entries");
  }
  const double weight = std::norm(u) + std::norm(v);
  if (std::abs(weight - 1.0) > 1e-12) {
    throw InvalidArgument("superposition weights must satisfy |u|^2+|v|^2 = 1, got " +
                          std::to_string(weight));
  }
}

SuperpositionSpec with_normalized_weights(SuperpositionSpec spec) {
  const double norm = std::sqrt(std::norm(spec.u) + std::norm(spec.v));
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw InvalidArgument("superposition weights u and v cannot both vanish");
  }
  spec.u /= norm;
  spec.v /= norm;
  return spec;
}

}  // namespace pacsent
