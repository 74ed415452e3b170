#pragma once

#include <optional>
#include <string>

#include "mct/analytic.hpp"
#include "mct/model.hpp"

namespace mct {

struct Solution {
  double lambda = 0.0;
  /// "closed form", "spectral", "difference chain", "quadrature", ...
  std::string method;
  bool low_precision = false;
  /// Exact reduced fraction when the parameters are exact rationals of modest size.
  std::optional<std::string> rational;
};

/// Mean cycle time for a classified model, or nullopt for NoClosedForm.
std::optional<Solution> solve(const AnalyticCase& c);

/// Exact rational value of rational-function families, as "num/den".
std::optional<std::string> exact_rational(const AnalyticCase& c);

}  // namespace mct
