#include "mct/mc.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>
#include <thread>

#include "mct/error.hpp"
#include "mct/random.hpp"
#include "mct/semiring.hpp"
#include "mct/solve.hpp"

namespace mct::mc {

void validate(const SimConfig& cfg) {
  if (cfg.steps < kMinSteps)
    throw Error(Errc::InvalidConfig, "steps must be >= " + std::to_string(kMinSteps));
  if (cfg.replications < kMinReplications)
    throw Error(Errc::InvalidConfig, "replications must be >= " + std::to_string(kMinReplications));
  if (cfg.renorm_period < 1) throw Error(Errc::InvalidConfig, "renorm_period must be >= 1");
}

double simulate_replication(const MatrixModel& m, std::uint64_t steps, std::uint64_t renorm_period,
                            std::uint64_t seed, std::uint64_t replication) {
  RandomStream stream = RandomStream::substream(seed, replication);
  MaxPlusVector2 z{0.0, 0.0};
  double shift = 0.0;
  for (std::uint64_t k = 1; k <= steps; ++k) {
    const MaxPlusMatrix2 a{sample(m.a11, stream), sample(m.a12, stream), sample(m.a21, stream),
                           sample(m.a22, stream)};
    z = mat_vec(a, z);
    if (k % renorm_period == 0) {
      const double n = norm(z).value();
      z = {z.x.value() - n, z.y.value() - n};
      shift += n;
    }
  }
  const double lambda = (shift + norm(z).value()) / static_cast<double>(steps);
  if (!std::isfinite(lambda))
    throw Error(Errc::NonFinite, "state vector overflowed; check the model and renorm_period");
  return lambda;
}

namespace {

unsigned thread_count(const SimConfig& cfg) {
  unsigned n = cfg.threads;
  if (n == 0) {
    n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("MCT_THREADS")) {
      const long cap = std::strtol(env, nullptr, 10);
      if (cap > 0) n = std::min(n, static_cast<unsigned>(cap));
    }
  }
  return std::max(1u, std::min(n, cfg.replications));
}

}  // namespace

Estimate simulate_unchecked(const MatrixModel& m, const SimConfig& cfg) {
  if (cfg.steps < 1 || cfg.replications < 1 || cfg.renorm_period < 1)
    throw Error(Errc::InvalidConfig, "steps, replications and renorm_period must be positive");

  Estimate est;
  est.steps = cfg.steps;
  est.replications = cfg.replications;
  est.seed = cfg.seed;
  est.per_replication.assign(cfg.replications, 0.0);

  std::atomic<std::uint32_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (std::uint32_t r = next++; r < cfg.replications; r = next++) {
      try {
        est.per_replication[r] = simulate_replication(m, cfg.steps, cfg.renorm_period, cfg.seed, r);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
        return;
      }
    }
  };
  const unsigned n = thread_count(cfg);
  if (n == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  double sum = 0.0;
  for (double v : est.per_replication) sum += v;
  est.lambda_hat = sum / cfg.replications;
  if (cfg.replications > 1) {
    double ss = 0.0;
    for (double v : est.per_replication) ss += (v - est.lambda_hat) * (v - est.lambda_hat);
    est.std_error = std::sqrt(ss / (cfg.replications - 1)) / std::sqrt(double(cfg.replications));
  }
  return est;
}

Estimate simulate(const MatrixModel& m, const SimConfig& cfg) {
  validate(cfg);
  return simulate_unchecked(m, cfg);
}

Comparison compare(const MatrixModel& m, const SimConfig& cfg) {
  return compare(m, cfg, [](const AnalyticCase& c) -> std::optional<ExactValue> {
    if (auto s = solve(c)) return ExactValue{s->lambda, s->method};
    return std::nullopt;
  });
}

Comparison compare(const MatrixModel& m, const SimConfig& cfg, const ExactSolver& solver) {
  Comparison out;
  out.analytic_case = classify(m);
  out.exact = solver(out.analytic_case);
  out.estimate = simulate(m, cfg);
  if (out.exact) {
    double diff = out.estimate.lambda_hat - out.exact->lambda;
    // Deterministic models reproduce the exact value up to summation rounding.
    if (std::abs(diff) <= 1e-12 * std::max(1.0, std::abs(out.exact->lambda))) diff = 0.0;
    if (out.estimate.std_error > 0.0) {
      out.z_score = diff / out.estimate.std_error;
    } else {
      out.z_score = diff == 0.0 ? 0.0 : std::copysign(std::numeric_limits<double>::infinity(), diff);
    }
  }
  return out;
}

}  // namespace mct::mc
