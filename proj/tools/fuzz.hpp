#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "bpham/constructor.hpp"
#include "bpham/fault_model.hpp"
#include "io.hpp"

namespace bpham::cli {

inline constexpr const char* kVersion = "bpham 1.0.0";

enum class FuzzKind { kCycle, kPath, kBoth };

struct FuzzConfig {
  int n = 4;
  int trials = 100;
  int max_faults = 0;
  std::uint64_t seed = 0;
  FuzzKind kind = FuzzKind::kCycle;
  BuildMode mode = BuildMode::kStrict;
};

struct FuzzFailure {
  int trial = 0;
  std::string construction;  // "cycle" or "path"
  std::string outcome;       // "verification" or "strict"
  std::string reason;
  json instance;
};

struct FuzzReport {
  int trials_run = 0;
  int successes = 0;
  int verification_failures = 0;
  int strict_failures = 0;
  int fallback_invocations = 0;
  std::map<std::string, int> histogram;
  std::vector<FuzzFailure> failures;
};

std::uint64_t splitmix64(std::uint64_t x);

// Uniform integer in [0, bound) by rejection.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound);

SignedPermutation sample_vertex(int n, std::mt19937_64& rng);

// Exactly `count` elements: a uniformly drawn number of matching pairs,
// grown as a greedy random matching, then faulty edges avoiding V(F^mv).
FaultSet sample_faults(int n, int count, std::mt19937_64& rng);

FuzzReport run_fuzz(const FuzzConfig& config);
json fuzz_report_json(const FuzzConfig& config, const FuzzReport& report);

}  // namespace bpham::cli
