#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace bpham::cli {

enum ExitCode : int {
  kOk = 0,
  kFailed = 1,
  kInvalidInput = 2,
  kStrictFailure = 3,
  kBudgetExceeded = 4,
};

struct RunConfig {
  std::string command;
  int n = 0;
  std::string faults_path;
  std::string source;
  std::string target;
  std::string mode = "strict";
  std::uint64_t seed = 0;
  int trials = 0;
  int max_faults = 0;
  std::string kind = "cycle";
  std::string format = "json";
  std::string out;
  double time_budget = 60.0;
  std::string artifact;
};

int cmd_cycle(const RunConfig& config);
int cmd_path(const RunConfig& config);
int cmd_verify(const RunConfig& config);
int cmd_fuzz(const RunConfig& config);
int cmd_stats(const RunConfig& config);
int cmd_tightness(const RunConfig& config);

int run(int argc, char** argv);

}  // namespace bpham::cli
