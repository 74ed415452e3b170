#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "mct/mc.hpp"

namespace mct::cli {

enum ExitCode : int {
  kOk = 0,
  kCrossCheckFailed = 1,
  kUsage = 2,
  kNoClosedForm = 3,
};

/// Entry point shared by the executable and the tests.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cmd_analytic(const std::string& model_path, std::ostream& out, std::ostream& err);
int cmd_simulate(const std::string& model_path, const mc::SimConfig& cfg,
                 const std::string& csv_path, std::ostream& out, std::ostream& err);
int cmd_compare(const std::string& model_path, const mc::SimConfig& cfg,
                const mc::ExactSolver& solver, std::ostream& out, std::ostream& err);

struct SweepSpec {
  std::string case_name;
  std::string vary;
  double from = 0.0;
  double to = 0.0;
  unsigned points = 0;
  std::map<std::string, double> fixed;
};

/// Writes "param,lambda" rows to `csv`.
int cmd_sweep(const SweepSpec& spec, std::ostream& csv, std::ostream& err);
int cmd_table(std::uint64_t seed, std::ostream& out);

/// Cases and parameter names accepted by sweep.
std::vector<std::string> sweep_case_names();

}  // namespace mct::cli
