#include "fuzz.hpp"

#include <algorithm>
#include <set>

#include "bpham/errors.hpp"
#include "bpham/oracle.hpp"

namespace bpham::cli {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

SignedPermutation sample_vertex(int n, std::mt19937_64& rng) {
  std::vector<int> s(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) s[static_cast<std::size_t>(i)] = i + 1;
  for (int i = n - 1; i > 0; --i) {
    const auto j = static_cast<std::size_t>(draw(rng, static_cast<std::uint64_t>(i + 1)));
    std::swap(s[static_cast<std::size_t>(i)], s[j]);
  }
  for (auto& x : s) {
    if (draw(rng, 2)) x = -x;
  }
  return SignedPermutation(std::span<const int>(s));
}

FaultSet sample_faults(int n, int count, std::mt19937_64& rng) {
  FaultSet f{n, {}, {}};
  const int pairs = static_cast<int>(draw(rng, static_cast<std::uint64_t>(count + 1)));
  std::set<SignedPermutation> matched;
  std::set<Edge> used;
  while (static_cast<int>(f.matching_pairs.size()) < pairs) {
    const auto a = sample_vertex(n, rng);
    const auto b = prefix_reversal(a, 1 + static_cast<int>(draw(rng, static_cast<std::uint64_t>(n))));
    if (matched.count(a) || matched.count(b)) continue;
    matched.insert(a);
    matched.insert(b);
    used.insert(make_edge(a, b));
    f.matching_pairs.emplace_back(a, b);
  }
  while (f.size() < count) {
    const auto a = sample_vertex(n, rng);
    const auto b = prefix_reversal(a, 1 + static_cast<int>(draw(rng, static_cast<std::uint64_t>(n))));
    if (matched.count(a) || matched.count(b) || !used.insert(make_edge(a, b)).second) continue;
    f.faulty_edges.emplace_back(a, b);
  }
  return f;
}

namespace {

std::string kind_text(FuzzKind k) {
  switch (k) {
    case FuzzKind::kCycle: return "cycle";
    case FuzzKind::kPath: return "path";
    case FuzzKind::kBoth: return "both";
  }
  return "cycle";
}

std::string violations_text(const VerificationReport& r) {
  std::string s;
  for (const auto& v : r.violations) {
    if (!s.empty()) s += "; ";
    s += std::string(kind_name(v.kind)) + " " + std::to_string(v.position) + " " + v.detail;
    if (s.size() > 400) break;
  }
  return s;
}

// Outcome of one construction: true on verified success.
template <class Build, class Verify>
bool attempt(FuzzReport& report, int trial, const char* what, const json& instance,
             Build&& build, Verify&& verify) {
  auto fail = [&](const char* outcome, std::string reason) {
    report.failures.push_back({trial, what, outcome, std::move(reason), instance});
    return false;
  };
  try {
    const auto result = build();
    report.fallback_invocations += result.fallback_invocations;
    for (const auto& [label, count] : result.trace.histogram()) report.histogram[label] += count;
    const auto check = verify(result.vertices);
    if (!check.ok) return fail("verification", violations_text(check));
    return true;
  } catch (const StrictModeFailure& e) {
    return fail("strict", e.what());
  } catch (const InternalError& e) {
    return fail("verification", std::string("internal: ") + e.what());
  }
}

}  // namespace

FuzzReport run_fuzz(const FuzzConfig& config) {
  FuzzReport report;
  const int n = config.n;
  const BuildOptions options{config.mode};
  for (int t = 0; t < config.trials; ++t) {
    std::mt19937_64 rng(splitmix64(config.seed + static_cast<std::uint64_t>(t)));
    bool ok = true;
    bool strict = false;
    const std::size_t before = report.failures.size();
    if (config.kind != FuzzKind::kPath) {
      const FaultSet f = sample_faults(n, config.max_faults, rng);
      if (!validate(f, n - 2).ok) throw std::logic_error("sampler produced an invalid fault set");
      ok = attempt(report, t, "cycle", json{{"faults", faults_json(f)}},
                   [&] { return hamiltonian_cycle(n, f, options); },
                   [&](const auto& c) { return verify_cycle(n, f, c); }) && ok;
    }
    if (config.kind != FuzzKind::kCycle) {
      const int k = std::min(config.max_faults, n - 3);
      const FaultSet f = sample_faults(n, k, rng);
      if (!validate(f, n - 3).ok) throw std::logic_error("sampler produced an invalid fault set");
      const auto gone = fault_vertices(f).matched;
      SignedPermutation u = sample_vertex(n, rng);
      while (gone.count(u)) u = sample_vertex(n, rng);
      SignedPermutation v = sample_vertex(n, rng);
      while (gone.count(v) || v == u) v = sample_vertex(n, rng);
      const json instance{{"faults", faults_json(f)},
                          {"source", vertex_json(u)},
                          {"target", vertex_json(v)}};
      ok = attempt(report, t, "path", instance,
                   [&] { return hamiltonian_path(n, u, v, f, options); },
                   [&](const auto& p) { return verify_path(n, f, u, v, p); }) && ok;
    }
    for (std::size_t i = before; i < report.failures.size(); ++i) {
      strict = strict || report.failures[i].outcome == "strict";
    }
    ++report.trials_run;
    if (ok) {
      ++report.successes;
    } else if (strict) {
      ++report.strict_failures;
    } else {
      ++report.verification_failures;
    }
  }
  return report;
}

json fuzz_report_json(const FuzzConfig& config, const FuzzReport& report) {
  json failures = json::array();
  for (const auto& f : report.failures) {
    failures.push_back(json{{"trial", f.trial},
                            {"construction", f.construction},
                            {"outcome", f.outcome},
                            {"reason", f.reason},
                            {"instance", f.instance}});
  }
  json histogram = json::object();
  for (const auto& [label, count] : report.histogram) histogram[label] = count;
  return json{{"command", "fuzz"},
              {"version", kVersion},
              {"n", config.n},
              {"kind", kind_text(config.kind)},
              {"mode", config.mode == BuildMode::kStrict ? "strict" : "fallback"},
              {"seed", config.seed},
              {"trials", config.trials},
              {"max_faults", config.max_faults},
              {"trials_run", report.trials_run},
              {"successes", report.successes},
              {"verification_failures", report.verification_failures},
              {"strict_failures", report.strict_failures},
              {"fallback_invocations", report.fallback_invocations},
              {"histogram", histogram},
              {"failures", failures}};
}

}  // namespace bpham::cli
