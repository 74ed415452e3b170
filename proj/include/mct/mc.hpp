#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mct/model.hpp"

namespace mct::mc {

struct SimConfig {
  std::uint64_t steps = 200000;
  std::uint32_t replications = 32;
  std::uint64_t seed = 42;
  std::uint64_t renorm_period = 64;
  /// 0 selects min(hardware threads, MCT_THREADS).
  unsigned threads = 0;
};

inline constexpr std::uint64_t kMinSteps = 1000;
inline constexpr std::uint32_t kMinReplications = 2;

/// Throws Error(InvalidConfig) when the configuration violates the floors.
void validate(const SimConfig& cfg);

struct Estimate {
  double lambda_hat = 0.0;
  double std_error = 0.0;
  std::vector<double> per_replication;
  std::uint64_t steps = 0;
  std::uint32_t replications = 0;
  std::uint64_t seed = 0;
};

/// Runs one replication of z(k) = A(k) z(k-1) from z(0) = 0 and returns ||z(k)|| / k.
double simulate_replication(const MatrixModel& m, std::uint64_t steps, std::uint64_t renorm_period,
                            std::uint64_t seed, std::uint64_t replication);

/// Replications run on independent substreams, in parallel when allowed.
Estimate simulate(const MatrixModel& m, const SimConfig& cfg);

/// Estimate for a fixed number of steps without the desk-scale floor; used for
/// bias studies that need short runs.
Estimate simulate_unchecked(const MatrixModel& m, const SimConfig& cfg);

struct ExactValue {
  double lambda = 0.0;
  std::string method;
};

using ExactSolver = std::function<std::optional<ExactValue>(const AnalyticCase&)>;

struct Comparison {
  AnalyticCase analytic_case;
  std::optional<ExactValue> exact;
  Estimate estimate;
  /// (lambda_hat - exact) / stderr; absent without an exact value.
  std::optional<double> z_score;
};

/// Classifies m, evaluates the exact value when one exists, and simulates.
Comparison compare(const MatrixModel& m, const SimConfig& cfg);
Comparison compare(const MatrixModel& m, const SimConfig& cfg, const ExactSolver& solver);

}  // namespace mct::mc
