#include "mct/cli.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

#include "mct/chain.hpp"
#include "mct/closed_forms.hpp"
#include "mct/error.hpp"
#include "mct/model_json.hpp"
#include "mct/solve.hpp"
#include "mct/spectral.hpp"

namespace mct::cli {

namespace {

std::string lambda_text(double lambda, const std::optional<std::string>& rational) {
  auto s = fmt::format("λ = {:.6f}", lambda);
  if (rational) s += fmt::format(" (= {})", *rational);
  return s;
}

std::string headline(const AnalyticCase& c, const Solution& s) {
  std::string name(to_string(c.family));
  if (c.family == Family::ZeroRowGeneral) name += "/" + s.method;
  return fmt::format("{}, {}", name, lambda_text(s.lambda, s.rational));
}

std::string params_text(const AnalyticCase& c) {
  std::string s;
  for (const auto& [k, v] : c.params) {
    if (!s.empty()) s += ", ";
    s += fmt::format("{}={:.12g}", k, v);
  }
  if (c.law) s += (s.empty() ? "" : ", ") + fmt::format("law={}", describe(*c.law));
  return s;
}

// Input problems surface as exit 2 with the library's message.
template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    fmt::print(err, "error: {}\n", e.what());
    switch (e.code()) {
      case Errc::InvalidModel:
      case Errc::InvalidConfig:
      case Errc::InvalidArgument:
      case Errc::UnsupportedParam: return kUsage;
      default: return kCrossCheckFailed;
    }
  }
}

using ParamMap = std::map<std::string, double>;

struct SweepCase {
  std::vector<std::string> params;
  std::function<double(const ParamMap&)> eval;
};

const std::map<std::string, SweepCase>& sweep_cases() {
  static const std::map<std::string, SweepCase> cases = [] {
    std::map<std::string, SweepCase> m;
    auto rate = [](const Rate& r) { return r.lambda; };
    m["IidExponential"] = {{"mu"}, [=](const ParamMap& p) {
                             return rate(lambda_iid(IidKind::Exponential, p.at("mu")));
                           }};
    m["IidBernoulli"] = {{"p"}, [=](const ParamMap& p) {
                           return rate(lambda_iid(IidKind::Bernoulli, p.at("p")));
                         }};
    m["IidGeometric"] = {{"p"}, [=](const ParamMap& p) {
                           return rate(lambda_iid(IidKind::Geometric, p.at("p")));
                         }};
    m["DiagOffdiagExponential"] = {{"mu", "nu"}, [=](const ParamMap& p) {
                                     return rate(lambda_diag_offdiag_exp(p.at("mu"), p.at("nu")));
                                   }};
    m["PureExponential"] = {{"mu", "nu", "sigma", "tau"}, [=](const ParamMap& p) {
                              return rate(spectral::lambda_pure_random(
                                  {p.at("mu"), p.at("nu"), p.at("sigma"), p.at("tau")}));
                            }};
    m["ZeroOffdiag"] = {{"mu", "tau"}, [=](const ParamMap& p) {
                          return rate(lambda_zero_pattern_exp(ZeroPattern::ZeroOffdiag, p.at("mu"),
                                                              p.at("tau")));
                        }};
    m["ZeroDiag"] = {{"nu", "sigma"}, [=](const ParamMap& p) {
                       return rate(lambda_zero_pattern_exp(ZeroPattern::ZeroDiag, p.at("nu"),
                                                           p.at("sigma")));
                     }};
    m["ZeroRow"] = {{"mu", "nu"}, [=](const ParamMap& p) {
                      return rate(
                          lambda_zero_pattern_exp(ZeroPattern::ZeroRow, p.at("mu"), p.at("nu")));
                    }};
    m["OneZeroDiag_SigmaEqMu"] = {{"mu", "nu"}, [=](const ParamMap& p) {
                                    return rate(lambda_one_zero_entry_exp(
                                        OneZeroCase::OneZeroDiag_SigmaEqMu, p.at("mu"), p.at("nu")));
                                  }};
    m["OneZeroDiag_SigmaEqNu"] = {{"mu", "nu"}, [=](const ParamMap& p) {
                                    return rate(lambda_one_zero_entry_exp(
                                        OneZeroCase::OneZeroDiag_SigmaEqNu, p.at("mu"), p.at("nu")));
                                  }};
    m["OneZeroOffdiag_NuEqMu"] = {{"mu", "tau"}, [=](const ParamMap& p) {
                                    return rate(lambda_one_zero_entry_exp(
                                        OneZeroCase::OneZeroOffdiag_NuEqMu, p.at("mu"), p.at("tau")));
                                  }};
    m["OneZeroOffdiag_TauEqMu"] = {{"mu", "nu"}, [=](const ParamMap& p) {
                                     return rate(lambda_one_zero_entry_exp(
                                         OneZeroCase::OneZeroOffdiag_TauEqMu, p.at("mu"), p.at("nu")));
                                   }};
    m["ConstDiagOneRandom"] = {{"mu", "c"}, [=](const ParamMap& p) {
                                 return rate(lambda_const_diag_one_random(p.at("mu"), p.at("c")));
                               }};
    m["ZeroRowConstDiag"] = {{"nu", "c"}, [=](const ParamMap& p) {
                               return rate(lambda_zero_row_const_diag(p.at("nu"), p.at("c")));
                             }};
    // Exponential alpha; the general-law variant has no scalar parameterization.
    m["ZeroRowGeneral"] = {{"mu", "c"}, [=](const ParamMap& p) {
                             return rate(lambda_zero_row_exp_const(p.at("mu"), p.at("c")));
                           }};
    m["ThreeConstSymmetric"] = {{"mu", "c"}, [=](const ParamMap& p) {
                                  return rate(lambda_three_const_symmetric(p.at("mu"), p.at("c")));
                                }};
    return m;
  }();
  return cases;
}

MatrixModel iid(const Distribution& d) { return {d, d, d, d}; }

// The Bernoulli expression with the denominator sign exactly as published.
double bernoulli_as_published(double p) {
  const double q = 1.0 - p;
  return 1.0 - (1.0 + 2.0 * p) * std::pow(q, 4) / (1.0 - 2.0 * p * q * (1.0 - 3.0 * p + p * p));
}

}  // namespace

std::vector<std::string> sweep_case_names() {
  std::vector<std::string> out;
  for (const auto& [name, _] : sweep_cases()) out.push_back(name);
  return out;
}

int cmd_analytic(const std::string& model_path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto model = load_model(model_path);
    const auto c = classify(model);
    const auto s = solve(c);
    if (!s) {
      fmt::print(out, "NoClosedForm: no exact method applies; use `mct simulate {}`\n", model_path);
      return int(kNoClosedForm);
    }
    fmt::print(out, "{}\n", headline(c, *s));
    fmt::print(out, "  transform: {}\n", to_string(c.transform));
    fmt::print(out, "  params: {}\n", params_text(c));
    fmt::print(out, "  method: {}{}\n", s->method,
               s->low_precision ? " (published to 3 decimals)" : "");
    return int(kOk);
  });
}

int cmd_simulate(const std::string& model_path, const mc::SimConfig& cfg,
                 const std::string& csv_path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto model = load_model(model_path);
    const auto est = mc::simulate(model, cfg);
    fmt::print(out, "λ̂ = {:.6f}, stderr = {:.6f} (steps={}, reps={}, seed={})\n",
               est.lambda_hat, est.std_error, est.steps, est.replications, est.seed);
    if (!csv_path.empty()) {
      std::ofstream csv(csv_path);
      if (!csv) {
        fmt::print(err, "error: cannot write {}\n", csv_path);
        return int(kUsage);
      }
      csv << "replication,lambda_hat\n";
      for (std::size_t i = 0; i < est.per_replication.size(); ++i) {
        fmt::print(csv, "{},{:.12g}\n", i, est.per_replication[i]);
      }
    }
    return int(kOk);
  });
}

int cmd_compare(const std::string& model_path, const mc::SimConfig& cfg,
                const mc::ExactSolver& solver, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto model = load_model(model_path);
    const auto cmp = mc::compare(model, cfg, solver);
    fmt::print(out, "family: {}\n", to_string(cmp.analytic_case.family));
    if (cmp.exact) {
      fmt::print(out, "exact:  {:.6f} ({})\n", cmp.exact->lambda, cmp.exact->method);
    } else {
      fmt::print(out, "exact:  n/a\n");
    }
    fmt::print(out, "λ̂:      {:.6f}\n", cmp.estimate.lambda_hat);
    fmt::print(out, "stderr: {:.6f}\n", cmp.estimate.std_error);
    if (!cmp.z_score) return int(kOk);
    fmt::print(out, "z:      {:.3f}\n", *cmp.z_score);
    if (std::abs(*cmp.z_score) > 4.0) {
      fmt::print(out, "cross-check FAILED (|z| > 4)\n");
      return int(kCrossCheckFailed);
    }
    return int(kOk);
  });
}

int cmd_sweep(const SweepSpec& spec, std::ostream& csv, std::ostream& err) {
  const auto& cases = sweep_cases();
  const auto it = cases.find(spec.case_name);
  if (it == cases.end()) {
    fmt::print(err, "error: unknown sweep case '{}'\n", spec.case_name);
    return kUsage;
  }
  const auto& names = it->second.params;
  auto known = [&](const std::string& n) {
    return std::find(names.begin(), names.end(), n) != names.end();
  };
  if (!known(spec.vary)) {
    fmt::print(err, "error: case {} has no parameter '{}'\n", spec.case_name, spec.vary);
    return kUsage;
  }
  for (const auto& [k, _] : spec.fixed) {
    if (!known(k) || k == spec.vary) {
      fmt::print(err, "error: bad fixed parameter '{}' for case {}\n", k, spec.case_name);
      return kUsage;
    }
  }
  for (const auto& n : names) {
    if (n != spec.vary && !spec.fixed.count(n)) {
      fmt::print(err, "error: missing fixed parameter '{}'\n", n);
      return kUsage;
    }
  }
  if (!(spec.from < spec.to) || spec.points < 2) {
    fmt::print(err, "error: need from < to and at least 2 points\n");
    return kUsage;
  }
  return guarded(err, [&] {
    std::string body = "param,lambda\n";
    ParamMap p = spec.fixed;
    for (unsigned i = 0; i < spec.points; ++i) {
      const double x = spec.from + (spec.to - spec.from) * i / (spec.points - 1);
      p[spec.vary] = x;
      body += fmt::format("{:.12g},{:.12g}\n", x, it->second.eval(p));
    }
    csv << body;
    return int(kOk);
  });
}

int cmd_table(std::uint64_t seed, std::ostream& out) {
  struct Row {
    std::string label;
    std::string published;
    double published_value;
    std::string method;
    double recomputed;
  };
  std::vector<Row> rows;

  const double du1 = chain::lambda_discrete(iid(DiscreteUniform{1})).lambda;
  rows.push_back({"n=2, m=1", "6/7", 6.0 / 7.0, "difference chain", du1});
  const double du2 = chain::lambda_discrete(iid(DiscreteUniform{2})).lambda;
  rows.push_back({"n=2, m=2 (per unit of m)", "0.803", 0.803, "difference chain / m", du2 / 2.0});

  mc::SimConfig cfg;
  cfg.seed = seed;
  const auto uni = mc::simulate(iid(UniformContinuous{0.0, 1.0}), cfg);
  rows.push_back({"uniform[0,1] (m -> inf)", "0.719", 0.719,
                  fmt::format("monte carlo, seed {}", seed), uni.lambda_hat});

  for (double p : {0.25, 0.5, 0.75}) {
    const double ch = chain::lambda_discrete(iid(Bernoulli{p})).lambda;
    rows.push_back({fmt::format("Bernoulli p={}", p), "printed formula", bernoulli_as_published(p),
                    "difference chain", ch});
    rows.push_back({fmt::format("Bernoulli p={}", p), "sign-corrected", closed_forms::iid_bernoulli(p),
                    "difference chain", ch});
  }
  for (double p : {0.2, 0.5}) {
    rows.push_back({fmt::format("geometric p={}", p), "N(p)/D(p)", closed_forms::iid_geometric(p),
                    "difference chain", chain::lambda_discrete(iid(Geometric{p})).lambda});
  }
  rows.push_back({"iid exp mu=1", "407/228", 407.0 / 228.0, "spectral",
                  spectral::lambda_pure_random({1, 1, 1, 1}).lambda});
  constexpr double kZero = 1e8;
  rows.push_back({"zero offdiag mu=tau=1", "5/4", 1.25, "spectral, offdiag rate 1e8",
                  spectral::lambda_pure_random({1, kZero, kZero, 1}).lambda});
  rows.push_back({"diag/offdiag mu=nu=1", "407/228", 407.0 / 228.0, "closed form",
                  lambda_diag_offdiag_exp(1, 1).lambda});
  rows.push_back({"one zero diag sigma=mu=nu=1", "439/278", 439.0 / 278.0, "spectral, diag rate 1e8",
                  spectral::lambda_pure_random({1, 1, 1, kZero}).lambda});

  fmt::print(out, "{:<30} {:>16} {:>12}  {:<28} {:>12} {:>10}\n", "case", "published", "value",
             "recomputed by", "value", "|diff|");
  for (const auto& r : rows) {
    fmt::print(out, "{:<30} {:>16} {:>12.6f}  {:<28} {:>12.6f} {:>10.2e}\n", r.label, r.published,
               r.published_value, r.method, r.recomputed, std::abs(r.published_value - r.recomputed));
  }
  return kOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mean cycle time of 2x2 random max-plus systems", "mct"};
  app.require_subcommand(1);

  std::string model_path;
  std::string csv_path;
  mc::SimConfig cfg;
  auto add_sim_flags = [&](CLI::App* sub) {
    sub->add_option("model", model_path, "model JSON file")->required();
    sub->add_option("--steps", cfg.steps, "steps per replication");
    sub->add_option("--reps", cfg.replications, "replications");
    sub->add_option("--seed", cfg.seed, "base seed");
    sub->add_option("--renorm", cfg.renorm_period, "renormalization period");
  };

  auto* analytic = app.add_subcommand("analytic", "classify a model and evaluate lambda exactly");
  analytic->add_option("model", model_path, "model JSON file")->required();

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimate of lambda");
  add_sim_flags(simulate);
  simulate->add_option("--csv", csv_path, "per-replication CSV output");

  auto* compare = app.add_subcommand("compare", "exact value against Monte Carlo");
  add_sim_flags(compare);

  SweepSpec sweep_spec;
  std::vector<std::string> fixed;
  std::string output;
  auto* sweep = app.add_subcommand("sweep", "tabulate lambda over a parameter grid");
  sweep->add_option("--case", sweep_spec.case_name, "family name")->required();
  sweep->add_option("--vary", sweep_spec.vary, "parameter to vary")->required();
  sweep->add_option("--from", sweep_spec.from)->required();
  sweep->add_option("--to", sweep_spec.to)->required();
  sweep->add_option("--points", sweep_spec.points)->required();
  sweep->add_option("--fixed", fixed, "name=value")->take_all();
  sweep->add_option("--output,-o", output, "CSV path (stdout when omitted)");

  std::uint64_t table_seed = 42;
  auto* table = app.add_subcommand("table", "published reference values next to recomputations");
  table->add_option("--seed", table_seed);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kUsage;
  }

  if (*analytic) return cmd_analytic(model_path, out, err);
  if (*simulate) return cmd_simulate(model_path, cfg, csv_path, out, err);
  if (*compare) {
    return cmd_compare(model_path, cfg, [](const AnalyticCase& c) -> std::optional<mc::ExactValue> {
      auto s = solve(c);
      if (!s) return std::nullopt;
      return mc::ExactValue{s->lambda, s->method};
    }, out, err);
  }
  if (*sweep) {
    for (const auto& kv : fixed) {
      const auto eq = kv.find('=');
      double v = 0.0;
      try {
        if (eq == std::string::npos) throw std::invalid_argument(kv);
        std::size_t used = 0;
        v = std::stod(kv.substr(eq + 1), &used);
        if (used != kv.size() - eq - 1) throw std::invalid_argument(kv);
      } catch (const std::exception&) {
        fmt::print(err, "error: --fixed expects name=value, got '{}'\n", kv);
        return kUsage;
      }
      sweep_spec.fixed[kv.substr(0, eq)] = v;
    }
    if (output.empty()) return cmd_sweep(sweep_spec, out, err);
    std::ostringstream buf;
    const int rc = cmd_sweep(sweep_spec, buf, err);
    if (rc != kOk) return rc;
    std::ofstream f(output);
    if (!f) {
      fmt::print(err, "error: cannot write {}\n", output);
      return kUsage;
    }
    f << buf.str();
    return kOk;
  }
  if (*table) return cmd_table(table_seed, out);
  return kUsage;
}

}  // namespace mct::cli
