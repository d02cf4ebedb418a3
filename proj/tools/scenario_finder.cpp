// Searches concentrated fault placements for instances whose strict
// construction exercises each case label; prints one JSON line per label.
#include <iostream>
#include <set>

#include <CLI11.hpp>

#include "bpham/bp_graph.hpp"
#include "bpham/constructor.hpp"
#include "bpham/errors.hpp"
#include "fuzz.hpp"
#include "io.hpp"

using namespace bpham;
using namespace bpham::cli;

namespace {

// An edge of BP_n inside subgraph h, or an n-dimensional one leaving it.
std::pair<SignedPermutation, SignedPermutation> edge_in(int n, int h, std::mt19937_64& rng,
                                                       bool internal) {
  for (;;) {
    const auto a = sample_vertex(n, rng);
    if (a.last() != h) continue;
    const int k = internal ? 1 + static_cast<int>(draw(rng, static_cast<std::uint64_t>(n - 1))) : n;
    return {a, prefix_reversal(a, k)};
  }
}

FaultSet concentrated(int n, int total, int inside, int h, std::mt19937_64& rng) {
  for (;;) {
    FaultSet f{n, {}, {}};
    const auto idx = subgraph_indices(n);
    for (int e = 0; e < total; ++e) {
      const int where = e < inside ? h : idx[static_cast<std::size_t>(draw(rng, idx.size()))];
      const auto [a, b] = edge_in(n, where, rng, e < inside || draw(rng, 4) != 0);
      if (draw(rng, 2)) {
        f.matching_pairs.emplace_back(a, b);
      } else {
        f.faulty_edges.emplace_back(a, b);
      }
    }
    if (validate(f, total).ok) return f;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"case scenario finder"};
  int n = 5;
  int trials = 20000;
  std::uint64_t seed = 1;
  app.add_option("--n", n);
  app.add_option("--trials", trials);
  app.add_option("--seed", seed);
  CLI11_PARSE(app, argc, argv);

  std::set<std::string> seen;
  std::mt19937_64 rng(seed);
  const auto idx = subgraph_indices(n);
  for (int t = 0; t < trials; ++t) {
    const int h = idx[static_cast<std::size_t>(draw(rng, idx.size()))];
    const bool cycle = draw(rng, 2) == 0;
    const int total = cycle ? n - 2 : n - 3;
    const int inside = total - static_cast<int>(draw(rng, 2));
    const FaultSet f = concentrated(n, total, inside, h, rng);
    json inst{{"kind", cycle ? "cycle" : "path"}, {"n", n}, {"faults", faults_json(f)}};
    CaseTrace trace;
    try {
      if (cycle) {
        trace = hamiltonian_cycle(n, f).trace;
      } else {
        const auto gone = fault_vertices(f).matched;
        SignedPermutation u = sample_vertex(n, rng);
        SignedPermutation v = sample_vertex(n, rng);
        // Bias the endpoints towards H, -H and shared subgraphs.
        const int mode = static_cast<int>(draw(rng, 4));
        auto pick = [&](int s) {
          for (;;) {
            auto x = sample_vertex(n, rng);
            if (x.last() == s && !gone.count(x)) return x;
          }
        };
        if (mode == 0) u = pick(h);
        if (mode == 1) u = pick(-h), v = pick(-h);
        if (mode == 2) u = pick(idx[static_cast<std::size_t>(draw(rng, idx.size()))]), v = pick(u.last());
        if (gone.count(u) || gone.count(v) || u == v) continue;
        inst["source"] = vertex_json(u);
        inst["target"] = vertex_json(v);
        trace = hamiltonian_path(n, u, v, f).trace;
      }
    } catch (const StrictModeFailure& e) {
      std::cerr << "strict failure: " << e.what() << " " << inst.dump() << "\n";
      continue;
    } catch (const InternalError& e) {
      std::cerr << "internal error: " << e.what() << " " << inst.dump() << "\n";
      continue;
    }
    for (const auto& r : trace.records()) {
      const std::string key = r.label + "@" + std::to_string(r.depth);
      if (r.depth > 1 || !seen.insert(key).second) continue;
      json out = inst;
      out["label"] = r.label;
      out["depth"] = r.depth;
      out["detail"] = r.detail;
      std::cout << out.dump() << "\n";
    }
  }
  return 0;
}
