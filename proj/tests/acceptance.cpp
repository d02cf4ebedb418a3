#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "bpham/bp_graph.hpp"
#include "bpham/constructor.hpp"
#include "bpham/fault_model.hpp"
#include "bpham/oracle.hpp"
#include "fuzz.hpp"
#include "io.hpp"

using namespace bpham;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::uint64_t factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

Outcome structural_counts() {
  Outcome o;
  long checked = 0;
  for (int n = 1; n <= 5; ++n) {
    const auto vs = all_vertices(n);
    std::uint64_t degree_sum = 0;
    for (const auto& u : vs) degree_sum += neighbors(u).size();
    const std::uint64_t v_want = (1ULL << n) * factorial(n);
    const std::uint64_t e_want = n * factorial(n) * (1ULL << (n - 1));
    if (vs.size() != v_want || degree_sum / 2 != e_want || vertex_count(n) != v_want ||
        edge_count(n) != e_want) {
      o.pass = false;
      o.detail += " counts@n=" + std::to_string(n);
    }
    if (n < 3) continue;
    std::map<std::pair<int, int>, std::uint64_t> e;
    for (const auto& u : vs) ++e[{u.last(), out_neighbor(u).last()}];
    const std::uint64_t cross = factorial(n - 2) * (1ULL << (n - 2));
    for (int i : subgraph_indices(n)) {
      for (int j : subgraph_indices(n)) {
        if (i == j) continue;
        const std::uint64_t want = j == -i ? 0 : cross;
        const auto it = e.find({i, j});
        const std::uint64_t got = it == e.end() ? 0 : it->second;
        ++checked;
        if (got != want || cross_edge_count(n, i, j) != want) {
          o.pass = false;
          o.detail += " E(" + std::to_string(i) + "," + std::to_string(j) + ")@n=" +
                      std::to_string(n);
        }
      }
    }
  }
  o.detail = std::to_string(checked) + " cross-edge entries" + o.detail;
  return o;
}

Outcome separation() {
  Outcome o;
  long same = 0, cross = 0, bad = 0;
  std::map<int, long> bad_at;
  std::string example;
  for (int n = 3; n <= 4; ++n) {
    for (const auto& u : all_vertices(n)) {
      std::map<SignedPermutation, int> dist{{u, 0}};
      std::vector<SignedPermutation> frontier{u};
      for (int d = 1; d <= 3; ++d) {
        std::vector<SignedPermutation> next;
        for (const auto& x : frontier) {
          for (const auto& y : neighbors(x)) {
            if (dist.emplace(y, d).second) next.push_back(y);
          }
        }
        frontier = std::move(next);
      }
      const int tu = out_neighbor(u).last();
      for (const auto& [v, d] : dist) {
        if (d == 0) continue;
        const bool in_same = v.last() == u.last();
        if (in_same && d > 2) continue;
        (in_same ? same : cross)++;
        if (out_neighbor(v).last() == tu) {
          ++bad;
          ++bad_at[d];
          if (example.empty()) example = to_string(u) + " / " + to_string(v);
        }
      }
    }
  }
  o.pass = bad == 0;
  o.detail = std::to_string(same) + " same-subgraph and " + std::to_string(cross) +
             " cross-subgraph ordered pairs, " + std::to_string(bad) + " exceptions";
  for (const auto& [d, k] : bad_at) {
    o.detail += ", " + std::to_string(k) + " at distance " + std::to_string(d);
  }
  if (!example.empty()) o.detail += ", e.g. " + example;
  return o;
}

Outcome fixtures() {
  Outcome o;
  const auto id = SignedPermutation::identity(3);
  int ok = 0;
  for (int k = 1; k <= 3; ++k) {
    FaultSet f{3, {{id, prefix_reversal(id, k)}}, {}};
    const auto& cyc = bp3_fixtures()[static_cast<std::size_t>(k - 1)];
    if (cyc.size() == 46 && verify_cycle(3, f, cyc).ok) ++ok;
  }
  o.pass = ok == 3;
  o.detail = std::to_string(ok) + "/3 verified";
  return o;
}

Outcome bp3_sweep() {
  Outcome o;
  std::set<Edge> edges;
  for (const auto& u : all_vertices(3)) {
    for (const auto& v : neighbors(u)) edges.insert(make_edge(u, v));
  }
  int ok = 0, total = 0;
  for (const auto& e : edges) {
    for (int as_pair = 0; as_pair < 2; ++as_pair) {
      FaultSet f{3, {}, {}};
      (as_pair ? f.matching_pairs : f.faulty_edges).push_back({e.a, e.b});
      ++total;
      try {
        const auto c = hamiltonian_cycle(3, f);
        if (verify_cycle(3, f, c.vertices).ok && c.vertices.size() == (as_pair ? 46u : 48u)) ++ok;
      } catch (const std::exception&) {
      }
    }
  }
  o.pass = ok == 144 && total == 144;
  o.detail = std::to_string(ok) + "/" + std::to_string(total);
  return o;
}

Outcome fuzz(int n, int trials, int max_faults, cli::FuzzKind kind, std::uint64_t seed,
             double limit) {
  const auto t0 = Clock::now();
  cli::FuzzConfig cfg;
  cfg.n = n;
  cfg.trials = trials;
  cfg.max_faults = max_faults;
  cfg.kind = kind;
  cfg.seed = seed;
  const auto r = cli::run_fuzz(cfg);
  Outcome o;
  const double s = seconds_since(t0);
  o.pass = r.successes == trials && r.fallback_invocations == 0 && s < limit;
  char buf[64];
  std::snprintf(buf, sizeof buf, " in %.2f s (limit %.0f s)", s, limit);
  o.detail = "n=" + std::to_string(n) + " " + std::to_string(r.successes) + "/" +
             std::to_string(trials) + buf;
  if (!r.failures.empty()) o.detail += " first failure: " + r.failures.front().reason;
  return o;
}

Outcome smoke() {
  Outcome o;
  const int n = 6;
  std::mt19937_64 rng(6);
  int ok = 0;
  double worst = 0;
  for (int t = 0; t < 20; ++t) {
    const bool path = t >= 10;
    const auto f = cli::sample_faults(n, path ? 3 : 4, rng);
    const auto t0 = Clock::now();
    try {
      if (!path) {
        const auto c = hamiltonian_cycle(n, f);
        if (verify_cycle(n, f, c.vertices).ok) ++ok;
      } else {
        const auto gone = fault_vertices(f).matched;
        auto u = cli::sample_vertex(n, rng);
        while (gone.count(u)) u = cli::sample_vertex(n, rng);
        auto v = cli::sample_vertex(n, rng);
        while (gone.count(v) || v == u) v = cli::sample_vertex(n, rng);
        const auto p = hamiltonian_path(n, u, v, f);
        if (verify_path(n, f, u, v, p.vertices).ok) ++ok;
      }
    } catch (const std::exception&) {
    }
    worst = std::max(worst, seconds_since(t0));
  }
  o.pass = ok == 20 && worst < 30.0;
  char buf[96];
  std::snprintf(buf, sizeof buf, "%d/20 verified, slowest construction %.2f s", ok, worst);
  o.detail = buf;
  return o;
}

Outcome tightness() {
  Outcome o;
  int rejected = 0;
  for (int n = 3; n <= 5; ++n) {
    const auto f = tightness_witness_cycle(n);
    const auto id = SignedPermutation::identity(n);
    if (f.size() == n - 1 && validate(f, n - 1).structurally_valid() &&
        !validate(f, n - 2).within_bound && residual_degree(f, id) == 1) {
      ++rejected;
    }
  }
  const auto cs = exhaustive_cycle_search(3, tightness_witness_cycle(3), std::chrono::seconds(60));
  const auto pw = tightness_witness_path(3);
  const auto ps = exhaustive_path_search(3, pw.faults, pw.source, pw.target, std::chrono::seconds(60));
  o.pass = rejected == 3 && cs.status == SearchStatus::kProvenAbsent &&
           ps.status == SearchStatus::kProvenAbsent && pw.faults.size() == 1;
  o.detail = std::to_string(rejected) + "/3 degree-1 rejections, cycle search " +
             std::string(status_name(cs.status)) + ", path search " +
             std::string(status_name(ps.status));
  return o;
}

Outcome ordering() {
  Outcome o;
  const std::vector<int> all = subgraph_indices(5);
  long calls = 0, failures = 0;
  for (unsigned mask = 0; mask < (1u << all.size()); ++mask) {
    if (std::popcount(mask) < 5) continue;
    std::vector<int> set;
    for (std::size_t b = 0; b < all.size(); ++b) {
      if (mask >> b & 1u) set.push_back(all[b]);
    }
    for (int first : set) {
      for (int last : set) {
        if (first == last) continue;
        ++calls;
        try {
          if (!is_valid_ordering(order_subgraphs(set, first, last), set, first, last)) ++failures;
        } catch (const std::exception&) {
          ++failures;
        }
      }
    }
  }
  o.pass = failures == 0;
  o.detail = std::to_string(calls) + " calls, " + std::to_string(failures) + " failures";
  return o;
}

Outcome coverage() {
  Outcome o;
  const std::vector<std::string> wanted = {
      "L18/1",       "L18/2.1",     "L18/2.2",     "L18/3.1", "L18/3.2.1",
      "L18/3.2.2.1", "L18/3.2.2.2", "L18/3.2.3.1", "L18/3.2.3.2", "L19/1",
      "L19/2.1",     "L19/2.2",     "L19/2.3.1",   "L19/2.3.2"};
  std::map<int, std::set<std::string>> seen;
  int fallbacks = 0, bad = 0, runs = 0;
  for (const auto& j : cli::read_json_file(BPHAM_TEST_DATA "/scenarios.json")) {
    const int n = j.at("n").get<int>();
    const auto label = j.at("label").get<std::string>();
    const auto f = cli::faults_from_json(j.at("faults"));
    ++runs;
    try {
      CaseTrace trace;
      if (j.at("kind") == "cycle") {
        const auto c = hamiltonian_cycle(n, f);
        if (!verify_cycle(n, f, c.vertices).ok) ++bad;
        fallbacks += c.fallback_invocations;
        trace = c.trace;
      } else {
        const auto u = cli::vertex_from_json(j.at("source"));
        const auto v = cli::vertex_from_json(j.at("target"));
        const auto p = hamiltonian_path(n, u, v, f);
        if (!verify_path(n, f, u, v, p.vertices).ok) ++bad;
        fallbacks += p.fallback_invocations;
        trace = p.trace;
      }
      for (const auto& r : trace.records()) seen[n].insert(r.label);
      if (!trace.has_label(label)) ++bad;
    } catch (const std::exception& e) {
      ++bad;
      std::printf("  scenario %s n=%d: %s\n", label.c_str(), n, e.what());
    }
  }
  int covered = 0;
  std::string missing;
  for (const auto& w : wanted) {
    for (int n : {4, 5}) {
      if (seen[n].count(w)) {
        ++covered;
      } else {
        missing += " " + w + "@" + std::to_string(n);
      }
    }
  }
  o.pass = bad == 0 && fallbacks == 0 && missing.empty();
  o.detail = std::to_string(covered) + "/" + std::to_string(2 * wanted.size()) +
             " label/dimension combinations over " + std::to_string(runs) + " scenarios, " +
             std::to_string(fallbacks) + " fallback invocations" +
             (missing.empty() ? "" : ", missing:" + missing);
  return o;
}

Outcome determinism() {
  Outcome o;
  bool same = true;
  for (auto kind : {cli::FuzzKind::kCycle, cli::FuzzKind::kPath}) {
    for (int n : {4, 5}) {
      cli::FuzzConfig cfg;
      cfg.n = n;
      cfg.trials = 50;
      cfg.max_faults = kind == cli::FuzzKind::kCycle ? n - 2 : n - 3;
      cfg.kind = kind;
      cfg.seed = 2024;
      const auto a = cli::fuzz_report_json(cfg, cli::run_fuzz(cfg)).dump();
      const auto b = cli::fuzz_report_json(cfg, cli::run_fuzz(cfg)).dump();
      same = same && a == b;
    }
  }
  std::mt19937_64 r1(11), r2(11);
  const auto f1 = cli::sample_faults(5, 3, r1);
  const auto f2 = cli::sample_faults(5, 3, r2);
  const auto c1 = hamiltonian_cycle(5, f1);
  const auto c2 = hamiltonian_cycle(5, f2);
  same = same && f1 == f2 && c1.vertices == c2.vertices && c1.trace == c2.trace;
  o.pass = same;
  o.detail = same ? "fuzz reports and artifacts identical across reruns" : "reruns differ";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    double limit;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "structural counts", 30, structural_counts},
      {2, "out-subgraph separation", 120, separation},
      {3, "BP3 fixtures", 10, fixtures},
      {4, "BP3 single-fault sweep", 10, bp3_sweep},
      {5, "cycle fuzz", 360,
       [] {
         auto a = fuzz(4, 1000, 2, cli::FuzzKind::kCycle, 5, 60);
         auto b = fuzz(5, 500, 3, cli::FuzzKind::kCycle, 5, 300);
         return Outcome{a.pass && b.pass, a.detail + ", " + b.detail};
       }},
      {6, "path fuzz", 360,
       [] {
         auto a = fuzz(4, 1000, 1, cli::FuzzKind::kPath, 6, 60);
         auto b = fuzz(5, 500, 2, cli::FuzzKind::kPath, 6, 300);
         return Outcome{a.pass && b.pass, a.detail + ", " + b.detail};
       }},
      {7, "n=6 smoke", 600, smoke},
      {8, "tightness witnesses", 120, tightness},
      {9, "subgraph ordering", 60, ordering},
      {10, "case coverage", 120, coverage},
      {11, "determinism", 120, determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double s = seconds_since(t0);
    const bool pass = o.pass && s < c.limit;
    if (!pass) ++failed;
    std::printf("criterion %d: %s %s: %s (%.2f s, limit %.0f s)\n", c.id, pass ? "PASS" : "FAIL",
                c.name.c_str(), o.detail.c_str(), s, c.limit);
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
