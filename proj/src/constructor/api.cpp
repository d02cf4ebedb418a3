#include <algorithm>
#include <set>

#include "bpham/constructor.hpp"
#include "bpham/errors.hpp"
#include "builder.hpp"

namespace bpham {

namespace {

using detail::Builder;
using detail::Obstacles;
using detail::Path;
using detail::Stuck;

void check_dim(int n) {
  if (n < 3 || n > kMaxConstructionDim) {
    throw UsageError("dimension must lie in 3.." + std::to_string(kMaxConstructionDim));
  }
}

void check_faults(const FaultSet& faults, int n, int bound) {
  if (faults.n != n) throw UsageError("fault set dimension differs from n");
  const auto report = validate(faults, bound);
  if (!report.structurally_valid()) {
    for (const auto& v : report.violations) {
      if (v.kind != "budget exceeded") throw UsageError("invalid fault set: " + v.kind + " " + v.detail);
    }
  }
  if (!report.within_bound) {
    throw UsageError("fault budget exceeded: |F| = " + std::to_string(report.size) + " > " +
                     std::to_string(bound));
  }
}

void check_vertex(const SignedPermutation& u, int n, const Obstacles& obs) {
  if (u.size() != n) throw UsageError("endpoint " + to_string(u) + " not in BP_" + std::to_string(n));
  if (obs.removed(u)) throw UsageError("endpoint " + to_string(u) + " is a faulty vertex");
}

// Cheap self-check; a failure here is a construction bug.
void check_walk(const Path& p, bool closed, const Obstacles& obs, const CaseTrace& trace) {
  std::set<SignedPermutation> seen;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!seen.insert(p[i]).second) throw InternalError("repeated vertex " + to_string(p[i]), trace);
    if (obs.removed(p[i])) throw InternalError("faulty vertex " + to_string(p[i]), trace);
    if (i + 1 == p.size() && !closed) break;
    const auto& q = p[(i + 1) % p.size()];
    if (!adjacent(p[i], q) || obs.faulty(p[i], q)) {
      throw InternalError("bad step " + to_string(p[i]) + " -> " + to_string(q), trace);
    }
  }
}

struct Outcome {
  Path vertices;
  CaseTrace trace;
  int fallbacks = 0;
};

// Strict run first; in fallback mode a failed strict run is repeated with
// search rescue in small sub-instances, and for n <= 4 in the whole graph.
template <class Run, class Whole>
Outcome execute(const BuildOptions& options, int n, Run&& run, Whole&& whole) {
  Builder strict(false);
  try {
    Path p = run(strict);
    return {std::move(p), strict.trace(), 0};
  } catch (const Stuck& e) {
    if (options.mode == BuildMode::kStrict) throw StrictModeFailure(e.what(), strict.trace());
  }
  Builder rescue(true);
  try {
    Path p = run(rescue);
    return {std::move(p), rescue.trace(), rescue.fallbacks()};
  } catch (const Stuck& e) {
    if (n > 4) throw StrictModeFailure(e.what(), rescue.trace());
  }
  rescue.trace().rollback(0);
  try {
    Path p = whole(rescue);
    return {std::move(p), rescue.trace(), rescue.fallbacks()};
  } catch (const Stuck& e) {
    throw StrictModeFailure(e.what(), rescue.trace());
  }
}

VertexPath as_path(Outcome o) { return {std::move(o.vertices), std::move(o.trace), o.fallbacks}; }
VertexCycle as_cycle(Outcome o) { return {std::move(o.vertices), std::move(o.trace), o.fallbacks}; }

std::vector<int> checked_set(std::span<const int> index_set, int n) {
  std::vector<int> set(index_set.begin(), index_set.end());
  for (int i : set) {
    if (!is_subgraph_index(n, i)) throw UsageError("index " + std::to_string(i) + " not in [n]");
  }
  if (std::set<int>(set.begin(), set.end()).size() != set.size()) {
    throw UsageError("repeated subgraph index");
  }
  return set;
}

void check_chain_budget(const std::vector<int>& set, int n, const Obstacles& obs) {
  for (int i : set) {
    if (obs.count_in(i) > n - 4) throw UsageError("|F_i| > n - 4 for i = " + std::to_string(i));
  }
}

}  // namespace

VertexPath chain_path(std::span<const int> index_set, const SignedPermutation& u,
                      const SignedPermutation& v, const FaultSet& faults,
                      const BuildOptions& options) {
  const int n = faults.n;
  check_dim(n);
  const auto set = checked_set(index_set, n);
  if (set.size() < 5) throw UsageError("chain_path needs |I| >= 5");
  check_faults(faults, n, n - 2);
  const Obstacles obs = Obstacles::from(faults);
  check_vertex(u, n, obs);
  check_vertex(v, n, obs);
  if (last_symbol(u) == last_symbol(v)) throw UsageError("chain_path ends share a subgraph");
  if (!detail::contains(set, last_symbol(u)) || !detail::contains(set, last_symbol(v))) {
    throw UsageError("chain_path ends outside I");
  }
  check_chain_budget(set, n, obs);
  auto o = execute(
      options, n, [&](Builder& b) { return b.chain(n, set, u, v, obs); },
      [&](Builder&) -> Path { throw Stuck("no whole-graph rescue for chain_path"); });
  check_walk(o.vertices, false, obs, o.trace);
  return as_path(std::move(o));
}

VertexPath loop_path(std::span<const int> index_set, const SignedPermutation& u,
                     const SignedPermutation& v, const FaultSet& faults,
                     const BuildOptions& options) {
  const int n = faults.n;
  check_dim(n);
  const auto set = checked_set(index_set, n);
  if (set.size() < 6) throw UsageError("loop_path needs |I| >= 6");
  check_faults(faults, n, n - 2);
  const Obstacles obs = Obstacles::from(faults);
  check_vertex(u, n, obs);
  check_vertex(v, n, obs);
  if (u == v) throw UsageError("loop_path ends coincide");
  if (last_symbol(u) != last_symbol(v)) throw UsageError("loop_path ends in different subgraphs");
  if (!detail::contains(set, last_symbol(u))) throw UsageError("loop_path ends outside I");
  check_chain_budget(set, n, obs);
  auto o = execute(
      options, n, [&](Builder& b) { return b.loop(n, set, u, v, obs); },
      [&](Builder&) -> Path { throw Stuck("no whole-graph rescue for loop_path"); });
  check_walk(o.vertices, false, obs, o.trace);
  return as_path(std::move(o));
}

VertexCycle hamiltonian_cycle(int n, const FaultSet& faults, const BuildOptions& options) {
  check_dim(n);
  check_faults(faults, n, n - 2);
  const Obstacles obs = Obstacles::from(faults);
  auto o = execute(
      options, n, [&](Builder& b) { return b.cycle(n, obs); },
      [&](Builder& b) { return b.fallback_cycle(n, obs); });
  check_walk(o.vertices, true, obs, o.trace);
  return as_cycle(std::move(o));
}

VertexPath hamiltonian_path(int n, const SignedPermutation& u, const SignedPermutation& v,
                            const FaultSet& faults, const BuildOptions& options) {
  check_dim(n);
  check_faults(faults, n, n - 3);
  const Obstacles obs = Obstacles::from(faults);
  check_vertex(u, n, obs);
  check_vertex(v, n, obs);
  if (u == v) throw UsageError("path endpoints coincide");
  auto o = execute(
      options, n, [&](Builder& b) { return b.path(n, u, v, obs); },
      [&](Builder& b) { return b.fallback_path(n, u, v, obs); });
  check_walk(o.vertices, false, obs, o.trace);
  return as_path(std::move(o));
}

VertexCycle base_cycle_bp3(const FaultSet& faults) {
  if (faults.n != 3) throw UsageError("base_cycle_bp3 works on BP_3");
  if (faults.size() > 1) throw UsageError("base_cycle_bp3 accepts at most one fault");
  return hamiltonian_cycle(3, faults);
}

VertexPath base_path_bp3(const SignedPermutation& u, const SignedPermutation& v) {
  return hamiltonian_path(3, u, v, FaultSet{3, {}, {}});
}

}  // namespace bpham
