#include "mct/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "mct/chain.hpp"
#include "mct/closed_forms.hpp"
#include "mct/error.hpp"
#include "mct/numerics.hpp"

namespace mct {

namespace {

namespace cf = closed_forms;

void require_rate(double r, const char* name) {
  if (!(std::isfinite(r) && r > 0.0))
    throw Error(Errc::UnsupportedParam, std::string(name) + " must be a positive finite rate");
}

void require_constant(double c) {
  if (!(std::isfinite(c) && c >= 0.0))
    throw Error(Errc::UnsupportedParam, "constant entry must be finite and >= 0");
}

// Published to three decimals only.
constexpr double kUniformLimit = 0.719;
constexpr double kDiscreteUniformM2 = 0.803;

}  // namespace

Rate lambda_iid(IidKind kind, double param) {
  switch (kind) {
    case IidKind::Exponential:
      require_rate(param, "mu");
      return {cf::iid_exponential(param)};
    case IidKind::Uniform01:
      if (!(std::isfinite(param) && param > 0.0))
        throw Error(Errc::UnsupportedParam, "uniform upper end must be > 0");
      return {kUniformLimit * param, true};
    case IidKind::Bernoulli:
      if (!(param >= 0.0 && param <= 1.0))
        throw Error(Errc::UnsupportedParam, "bernoulli p must lie in [0, 1]");
      return {cf::iid_bernoulli(param)};
    case IidKind::Geometric:
      if (!(param >= 0.0 && param < 1.0))
        throw Error(Errc::UnsupportedParam, "geometric p must lie in [0, 1)");
      return {cf::iid_geometric(param)};
    case IidKind::DiscreteUniform: {
      if (!(param >= 0.0 && param == std::floor(param) && param < 4294967296.0))
        throw Error(Errc::UnsupportedParam, "discrete uniform m must be a nonnegative integer");
      const auto m = static_cast<std::uint32_t>(param);
      if (m == 1) return {6.0 / 7.0};
      // The published m = 2 value is normalized by m (support rescaled to [0, 1]).
      if (m == 2) return {2.0 * kDiscreteUniformM2, true};
      const Distribution d = DiscreteUniform{m};
      return chain::lambda_discrete(MatrixModel{d, d, d, d});
    }
  }
  throw Error(Errc::UnsupportedParam, "unknown i.i.d. family");
}

Rate lambda_diag_offdiag_exp(double mu, double nu) {
  require_rate(mu, "mu");
  require_rate(nu, "nu");
  return {cf::diag_offdiag_exponential(mu, nu)};
}

Rate lambda_zero_pattern_exp(ZeroPattern pattern, double p1, double p2) {
  require_rate(p1, "first rate");
  require_rate(p2, "second rate");
  switch (pattern) {
    case ZeroPattern::ZeroOffdiag: return {cf::zero_offdiag(p1, p2)};
    case ZeroPattern::ZeroDiag: return {cf::zero_diag(p1, p2)};
    case ZeroPattern::ZeroRow:
    case ZeroPattern::ZeroColumn: return {cf::zero_row(p1, p2)};
  }
  throw Error(Errc::UnsupportedParam, "unknown zero pattern");
}

Rate lambda_one_zero_entry_exp(OneZeroCase which, double mu, double other) {
  require_rate(mu, "mu");
  require_rate(other, "second rate");
  switch (which) {
    case OneZeroCase::OneZeroDiag_SigmaEqMu: return {cf::one_zero_diag_sigma_eq_mu(mu, other)};
    case OneZeroCase::OneZeroDiag_SigmaEqNu: return {cf::one_zero_diag_sigma_eq_nu(mu, other)};
    case OneZeroCase::OneZeroOffdiag_NuEqMu: return {cf::one_zero_offdiag_nu_eq_mu(mu, other)};
    case OneZeroCase::OneZeroOffdiag_TauEqMu: return {cf::one_zero_offdiag_tau_eq_mu(mu, other)};
  }
  throw Error(Errc::UnsupportedParam, "unknown one-zero case");
}

Rate lambda_const_diag_one_random(double mu, double c) {
  require_rate(mu, "mu");
  require_constant(c);
  const double C = std::exp(-mu * c);
  const double x = mu * c * C;
  return {c + 2.0 * C * C * C / (mu * (2.0 - 4.0 * x + x * x))};
}

Rate lambda_zero_row_const_diag(double nu, double c) {
  require_rate(nu, "nu");
  require_constant(c);
  const double e = std::exp(-2.0 * nu * c);
  return {c + 2.0 * e / (nu * (2.0 + e))};
}

double zero_row_ratio(const Distribution& law, double c, double t) {
  return cdf(law, t) * cdf(law, c - t);
}

namespace {

void require_zero_row_law(const Distribution& law, double c) {
  require_constant(c);
  if (support_min(law) < 0.0)
    throw Error(Errc::UnsupportedParam, "the random entry must be nonnegative");
}

// Jumps and kinks of t -> F(t) F(c - t) on (0, c).
std::vector<double> zero_row_cuts(const Distribution& law, double c) {
  std::vector<double> cuts = breakpoints(law, 0.0, c);
  const std::size_t n = cuts.size();
  for (std::size_t i = 0; i < n; ++i) cuts.push_back(c - cuts[i]);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  return cuts;
}

// G(t) < 1 must hold almost everywhere on (0, c); probe every piece between
// cuts plus a uniform grid.
void check_ratio(const Distribution& law, double c, const std::vector<double>& cuts) {
  if (c == 0.0) return;
  std::vector<double> probes;
  std::vector<double> edges = cuts;
  edges.insert(edges.begin(), 0.0);
  edges.push_back(c);
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) probes.push_back(0.5 * (edges[i] + edges[i + 1]));
  constexpr int kGrid = 1024;
  for (int i = 1; i < kGrid; ++i) probes.push_back(c * i / kGrid);
  for (double t : probes) {
    if (zero_row_ratio(law, c, t) >= kRatioDegenerateThreshold)
      throw Error(Errc::RatioDegenerate,
                  "F(t) F(c - t) reaches 1 at t = " + std::to_string(t) + " (c = " +
                      std::to_string(c) + ")");
  }
}

}  // namespace

Rate lambda_zero_row_general(const Distribution& law, double c) {
  require_zero_row_law(law, c);
  const double a = mean(law);
  if (c == 0.0) return {a};
  const auto cuts = zero_row_cuts(law, c);
  check_ratio(law, c, cuts);
  auto integrand = [&](double t) {
    const double f = cdf(law, t);
    const double g = f * cdf(law, c - t);
    return g * (1.0 - f) / (1.0 - g);
  };
  return {a + integrate_piecewise(integrand, 0.0, c, cuts).value};
}

Rate lambda_zero_row_exp_const(double mu, double c) {
  require_rate(mu, "mu");
  require_constant(c);
  const double s = std::sqrt(4.0 * std::exp(mu * c) - 1.0);
  return {0.5 * c + std::exp(-mu * c) / mu + (3.0 * std::atan(s) - std::numbers::pi) / (mu * s)};
}

Rate lambda_three_const_symmetric(double mu, double c) {
  require_rate(mu, "mu");
  require_constant(c);
  const double e = std::exp(-mu * c);
  return {c + 2.0 * e / (mu * (2.0 + e - 2.0 * e * e + e * e * e))};
}

FixedPointState fixed_point_ab(double mu, double c, double tol) {
  require_rate(mu, "mu");
  require_constant(c);
  const double C = std::exp(-mu * c);
  const double x = mu * c * C;
  FixedPointState s;
  // Spectral radius x (1 + sqrt(2)/2) <= e^-1 (1 + sqrt(2)/2) < 0.63.
  constexpr std::uint64_t kMaxIterations = 100000;
  while (s.iterations < kMaxIterations) {
    const double a = x * s.a + x * s.b + x * C;
    const double b = 0.5 * x * s.a + x * s.b + x * C;
    ++s.iterations;
    const double change = std::max(std::abs(a - s.a), std::abs(b - s.b));
    s.a = a;
    s.b = b;
    if (change < tol) break;
  }
  return s;
}

FixedPointState fixed_point_ab_limit(double mu, double c) {
  require_rate(mu, "mu");
  require_constant(c);
  const double C = std::exp(-mu * c);
  const double x = mu * c * C;
  const double d = 2.0 - 4.0 * x + x * x;
  return {2.0 * x * C / d, (2.0 - x) * x * C / d, 0};
}

IncrementDistribution increment_distribution_const_diag(double mu, double c) {
  require_rate(mu, "mu");
  require_constant(c);
  const double C = std::exp(-mu * c);
  const double x = mu * c * C;
  const double d = 2.0 - 4.0 * x + x * x;
  const double k = 2.0 * C * C / d;

  IncrementDistribution out;
  out.cdf = [=](double t) {
    if (t <= 0.0) return 0.0;
    if (t <= c) return k * (1.0 - mu * C * t) * std::expm1(mu * t);
    return -std::expm1(-mu * t);
  };
  const double p = 1.0 - C * (4.0 - 6.0 * x + x * x - 2.0 * C + 2.0 * x * C) / d;
  out.atom = Atom{c, p};

  // Density of the absolutely continuous part on (0, c).
  auto density = [=](double t) {
    const double e = std::exp(mu * t);
    return k * (mu * (1.0 - mu * C * t) * e - mu * C * (e - 1.0));
  };
  const double body = integrate([&](double t) { return t * density(t); }, 0.0, c).value;
  const double tail = C * (c + 1.0 / mu);  // integral of t mu e^{-mu t} over (c, inf)
  out.mean = c * p + body + tail;
  return out;
}

IncrementDistribution increment_distribution_zero_row(const Distribution& law, double c) {
  require_zero_row_law(law, c);
  const auto cuts = zero_row_cuts(law, c);
  check_ratio(law, c, cuts);

  IncrementDistribution out;
  out.cdf = [law, c](double t) {
    if (t <= 0.0) return 0.0;
    const double f = cdf(law, t);
    if (t > c) return f;
    const double fc = cdf(law, c - t);
    return f * (1.0 - fc) / (1.0 - f * fc);
  };
  // E X = int_0^inf (1 - Phi); beyond c, Phi = F and int_c^inf (1 - F) = a - int_0^c (1 - F).
  const auto survival = integrate_piecewise([&](double t) { return 1.0 - out.cdf(t); }, 0.0, c, cuts);
  const auto law_survival =
      integrate_piecewise([&](double t) { return 1.0 - cdf(law, t); }, 0.0, c, cuts);
  out.mean = survival.value + mean(law) - law_survival.value;
  return out;
}

double zero_row_phi_k(const Distribution& law, double c, unsigned k, double t) {
  if (k == 0) return t > 0.0 ? 1.0 : 0.0;
  if (t <= 0.0) return 0.0;
  const double f = cdf(law, t);
  if (t > c) return f;
  return f * (1.0 - zero_row_phi_k(law, c, k - 1, c - t));
}

}  // namespace mct
