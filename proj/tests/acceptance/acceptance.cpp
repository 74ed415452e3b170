// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <fmt/format.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mct/analytic.hpp"
#include "mct/chain.hpp"
#include "mct/cli.hpp"
#include "mct/closed_forms.hpp"
#include "mct/mc.hpp"
#include "mct/spectral.hpp"

using namespace mct;
using boost::multiprecision::cpp_rational;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

int failures = 0;

void criterion(int n, const std::string& title, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!o.pass) ++failures;
  fmt::print("[{}] {:>2}. {} ({:.2f}s){}{}\n", o.pass ? "PASS" : "FAIL", n, title, secs,
             o.detail.empty() ? "" : " -- ", o.detail);
  for (const auto& note : o.notes) fmt::print("        note: {}\n", note);
}

MatrixModel iid(const Distribution& d) { return {d, d, d, d}; }

cpp_rational q(long n, long d = 1) { return cpp_rational(n) / d; }

std::string str(const cpp_rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

double sweep_value(const std::string& name, const std::string& vary, double at,
                   const std::string& fixed) {
  cli::SweepSpec spec{name, vary, 0.0, 3.0, 61, {}};
  const auto eq = fixed.find('=');
  spec.fixed[fixed.substr(0, eq)] = std::stod(fixed.substr(eq + 1));
  std::ostringstream csv, err;
  if (cli::cmd_sweep(spec, csv, err) != cli::kOk) throw std::runtime_error(err.str());
  std::istringstream in(csv.str());
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    const auto comma = line.find(',');
    if (std::stod(line.substr(0, comma)) == at) return std::stod(line.substr(comma + 1));
  }
  throw std::runtime_error("grid point missing");
}

}  // namespace

int main() {
  criterion(1, "exact constants 407/228, 6/7, 1.25", [] {
    Outcome o;
    const double a = lambda_iid(IidKind::Exponential, 1).lambda;
    const double b = chain::lambda_discrete(iid(DiscreteUniform{1})).lambda;
    const double c = lambda_zero_pattern_exp(ZeroPattern::ZeroOffdiag, 1, 1).lambda;
    o.require(std::abs(a - 407.0 / 228) <= 1e-12, fmt::format("iid exp {:.15f}", a));
    o.require(std::abs(b - 6.0 / 7) <= 1e-12, fmt::format("chain DU(1) {:.15f}", b));
    o.require(std::abs(c - 1.25) <= 1e-12, fmt::format("zero offdiag {:.15f}", c));
    return o;
  });

  criterion(2, "exact rational reductions", [] {
    namespace cf = closed_forms;
    Outcome o;
    const std::vector<std::pair<cpp_rational, cpp_rational>> checks = {
        {cf::diag_offdiag_exponential(q(1), q(1)), q(407, 228)},
        {cf::one_zero_diag_sigma_eq_mu(q(1), q(1)), q(439, 278)},
        {cf::one_zero_diag_sigma_eq_nu(q(1), q(1)), q(439, 278)},
        {cf::one_zero_offdiag_nu_eq_mu(q(1), q(1)), q(515, 352)},
        {cf::one_zero_offdiag_tau_eq_mu(q(1), q(1)), q(515, 352)},
    };
    for (const auto& [got, want] : checks)
      o.require(got == want, fmt::format("{} != {}", str(got), str(want)));
    return o;
  });

  criterion(3, "spectral vs catalog on a 5x5 rate grid", [] {
    Outcome o;
    const std::vector<double> rates = {0.25, 0.5, 1.0, 2.0, 4.0};
    double worst = 0.0;
    for (double mu : rates) {
      worst = std::max(worst, std::abs(spectral::lambda_pure_random({mu, mu, mu, mu}).lambda -
                                       407.0 / (228 * mu)));
      for (double nu : rates) {
        worst = std::max(worst, std::abs(spectral::lambda_pure_random({mu, nu, nu, mu}).lambda -
                                         lambda_diag_offdiag_exp(mu, nu).lambda));
      }
    }
    o.require(worst <= 1e-10, fmt::format("max deviation {:.3e}", worst));
    o.notes.push_back(fmt::format("max deviation {:.3e}", worst));
    return o;
  });

  criterion(4, "symmetry invariance (spectral 1e-10, chain 1e-12)", [] {
    Outcome o;
    std::mt19937_64 gen(4);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    double worst_s = 0.0;
    for (int i = 0; i < 50; ++i) {
      const double m = std::exp(u(gen)), n = std::exp(u(gen)), s = std::exp(u(gen)), t = std::exp(u(gen));
      const double base = spectral::lambda_pure_random({m, n, s, t}).lambda;
      for (const spectral::RateQuad r : {spectral::RateQuad{m, s, n, t}, spectral::RateQuad{t, s, n, m},
                                         spectral::RateQuad{t, n, s, m}})
        worst_s = std::max(worst_s, std::abs(spectral::lambda_pure_random(r).lambda - base));
    }
    const std::vector<MatrixModel> discrete = {
        {Bernoulli{0.3}, DiscreteUniform{2}, Constant{1}, Bernoulli{0.8}},
        {DiscreteUniform{1}, Constant{0}, Constant{0}, DiscreteUniform{3}},
        {Constant{0.5}, Bernoulli{0.5}, Bernoulli{0.1}, DiscreteUniform{2}},
        {Bernoulli{0.6}, Bernoulli{0.5}, DiscreteUniform{1}, Constant{0}},
        {DiscreteUniform{2}, DiscreteUniform{1}, Bernoulli{0.9}, DiscreteUniform{3}},
    };
    double worst_c = 0.0;
    for (const auto& m : discrete) {
      const double base = chain::lambda_discrete(m).lambda;
      for (Symmetry g : kSymmetries)
        worst_c = std::max(worst_c, std::abs(chain::lambda_discrete(transform_apply(m, g)).lambda - base));
    }
    o.require(worst_s <= 1e-10, fmt::format("spectral {:.3e}", worst_s));
    o.require(worst_c <= 1e-12, fmt::format("chain {:.3e}", worst_c));
    o.notes.push_back(fmt::format("max deviation: spectral {:.3e}, chain {:.3e}", worst_s, worst_c));
    return o;
  });

  criterion(5, "zero-row quadrature vs arctan closed form", [] {
    Outcome o;
    double worst = 0.0;
    for (double mu : {0.25, 0.5, 1.0, 2.0, 4.0})
      for (double c : {0.0, 0.5, 1.0, 2.0, 5.0})
        worst = std::max(worst, std::abs(lambda_zero_row_general(Exponential{mu}, c).lambda -
                                         lambda_zero_row_exp_const(mu, c).lambda));
    o.require(worst <= 1e-8, fmt::format("max deviation {:.3e}", worst));
    o.notes.push_back(fmt::format("max deviation {:.3e}", worst));
    return o;
  });

  criterion(6, "sweep reproduces reference curve points", [] {
    Outcome o;
    const double f1a = sweep_value("ConstDiagOneRandom", "c", 1.0, "mu=1");
    const double f1b = sweep_value("ConstDiagOneRandom", "c", 1.0, "mu=2");
    const double f3 = sweep_value("ZeroRowGeneral", "c", 1.0, "mu=1");
    o.require(std::abs(f1a - 1.15) <= 1e-5, fmt::format("const diag mu=1: {:.7f}", f1a));
    o.require(std::abs(f1b - 1.0025) <= 1e-5, fmt::format("const diag mu=2: {:.7f}", f1b));
    // Curve read at 10.7361 on a 0.1 scale.
    o.require(std::abs(f3 - 1.07361) <= 1e-5, fmt::format("zero row exp mu=1: {:.7f}", f3));
    o.notes.push_back(fmt::format("const diag {:.7f} / {:.7f}; zero row exp {:.7f} vs 1.07361", f1a, f1b, f3));
    o.notes.push_back(fmt::format(
        "the alternative reference 1.073661 is off by {:.2e}",
        std::abs(f3 - 1.073661)));
    return o;
  });

  criterion(7, "formula-vs-chain oracles", [] {
    Outcome o;
    double worst_printed = 0.0, worst_corrected = 0.0, worst_geo = 0.0;
    for (int k = 1; k <= 9; ++k) {
      const double p = k / 10.0;
      const double ch = chain::lambda_discrete(iid(Bernoulli{p})).lambda;
      const double s = 1 - p;
      const double printed = 1 - (1 + 2 * p) * std::pow(s, 4) / (1 - 2 * p * s * (1 - 3 * p + p * p));
      worst_printed = std::max(worst_printed, std::abs(printed - ch));
      worst_corrected = std::max(worst_corrected, std::abs(closed_forms::iid_bernoulli(p) - ch));
    }
    for (int k = 1; k <= 8; ++k) {
      const double p = k / 10.0;
      worst_geo = std::max(worst_geo, std::abs(closed_forms::iid_geometric(p) -
                                               chain::lambda_discrete(iid(Geometric{p})).lambda));
    }
    const double du2 = chain::lambda_discrete(iid(DiscreteUniform{2})).lambda / 2;
    o.require(worst_printed <= 1e-12,
              fmt::format("printed Bernoulli formula vs chain: max deviation {:.3e}", worst_printed));
    o.require(worst_geo <= 1e-6, fmt::format("geometric {:.3e}", worst_geo));
    o.require(std::abs(du2 - 0.803) <= 5e-4, fmt::format("m=2 {:.6f}", du2));
    o.notes.push_back(fmt::format("Bernoulli with the denominator sign flipped to +: max deviation {:.3e}",
                                  worst_corrected));
    o.notes.push_back(fmt::format("geometric max deviation {:.3e}; m=2 chain/m = {:.6f}", worst_geo, du2));
    return o;
  });

  criterion(8, "fixed point, increment law and convergence", [] {
    Outcome o;
    double worst_ab = 0.0, worst_mean = 0.0;
    for (double mu : {0.5, 1.0, 2.0}) {
      for (double c : {0.0, 0.3, 1.0, 2.5}) {
        const auto it = fixed_point_ab(mu, c, 1e-15);
        const auto lim = fixed_point_ab_limit(mu, c);
        worst_ab = std::max({worst_ab, std::abs(it.a - lim.a), std::abs(it.b - lim.b)});
        worst_mean = std::max(worst_mean, std::abs(increment_distribution_const_diag(mu, c).mean -
                                                   lambda_const_diag_one_random(mu, c).lambda));
      }
    }
    o.require(worst_ab <= 1e-12, fmt::format("(a, b) {:.3e}", worst_ab));
    o.require(worst_mean <= 1e-8, fmt::format("increment mean {:.3e}", worst_mean));

    bool gaps_ok = true;
    for (const auto& [law, c] : {std::pair<Distribution, double>{Exponential{1}, 1.0},
                                 std::pair<Distribution, double>{Exponential{1}, 3.0},
                                 std::pair<Distribution, double>{UniformContinuous{0, 2}, 2.5}}) {
      const auto lim = increment_distribution_zero_row(law, c);
      double gmax = 0.0;
      for (int i = 1; i < 1000; ++i) gmax = std::max(gmax, zero_row_ratio(law, c, c * i / 1000));
      for (unsigned k = 2; k <= 50; ++k) {
        double gap = 0.0;
        for (int i = 0; i <= 200; ++i) {
          const double t = 1.2 * c * i / 200;
          gap = std::max(gap, std::abs(zero_row_phi_k(law, c, k, t) - lim.cdf(t)));
        }
        gaps_ok = gaps_ok && gap < std::pow(gmax, k / 2) + 1e-15;
      }
    }
    o.require(gaps_ok, "Phi_k sup-gap bound violated");
    o.notes.push_back(fmt::format("(a, b) {:.3e}; increment mean {:.3e}", worst_ab, worst_mean));
    return o;
  });

  criterion(9, "Monte Carlo battery, |z| <= 4 with at most one excursion", [] {
    Outcome o;
    const Distribution z = Constant{0};
    const Distribution one = Constant{1};
    auto e = [](double r) { return Distribution(Exponential{r}); };
    const std::vector<std::pair<std::string, MatrixModel>> battery = {
        {"iid exp(1)", iid(e(1))},
        {"diag/offdiag (1,2)", {e(1), e(2), e(2), e(1)}},
        {"zero offdiag (1,2)", {e(1), z, z, e(2)}},
        {"zero diag (1,2)", {z, e(1), e(2), z}},
        {"zero row (1,2)", {e(1), e(2), z, z}},
        {"one zero diag sigma=mu", {e(1), e(2), e(1), z}},
        {"one zero diag sigma=nu", {e(1), e(2), e(2), z}},
        {"one zero offdiag nu=mu", {e(1), e(1), z, e(2)}},
        {"one zero offdiag tau=mu", {e(1), e(2), z, e(1)}},
        {"const diag (1,1)", {e(1), z, z, one}},
        {"zero row const diag (1,1)", {one, e(1), z, z}},
        {"zero row exp const (1,1)", {e(1), one, z, z}},
        {"three const (1,1)", {e(1), one, one, one}},
        {"pure (1,2,3,4)", {e(1), e(2), e(3), e(4)}},
        {"Bernoulli 0.5", iid(Bernoulli{0.5})},
        {"DiscreteUniform(1)", iid(DiscreteUniform{1})},
    };
    int excursions = 0;
    std::uint64_t seed = 900;
    std::string worst;
    double worst_z = 0.0;
    for (const auto& [name, m] : battery) {
      mc::SimConfig cfg;
      cfg.seed = seed++;
      const auto c = mc::compare(m, cfg);
      if (!c.z_score) {
        o.require(false, name + ": no exact value");
        continue;
      }
      const double zz = std::abs(*c.z_score);
      if (zz > 4) ++excursions;
      if (zz > worst_z) {
        worst_z = zz;
        worst = name;
      }
    }
    o.require(excursions <= 1, fmt::format("{} models with |z| > 4", excursions));
    o.notes.push_back(fmt::format("{} models, {} excursions, largest |z| = {:.2f} ({})", battery.size(),
                                  excursions, worst_z, worst));
    return o;
  });

  // Criterion 10 names results that are out of reach; report them without a verdict.
  {
    mc::SimConfig cfg;
    const auto u = mc::simulate(iid(UniformContinuous{0, 1}), cfg);
    fmt::print("[SKIP] 10. excluded by design: uniform[0,1] beyond 3 decimals, n=3 value 0.979\n");
    fmt::print("        note: uniform MC {:.6f} +- {:.6f} vs reference 0.719\n", u.lambda_hat, u.std_error);
  }

  fmt::print("{} of 9 graded criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
