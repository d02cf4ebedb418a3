#pragma once

#include <array>
#include <span>
#include <vector>

#include "bpham/fault_model.hpp"
#include "bpham/signed_perm.hpp"
#include "bpham/trace.hpp"

namespace bpham {

enum class BuildMode {
  kStrict,    // a prescribed candidate scan that comes up empty is an error
  kFallback,  // rerun with bounded exhaustive search in small sub-instances
};

struct BuildOptions {
  BuildMode mode = BuildMode::kStrict;
};

// Consecutive vertices are adjacent; no repeats.
struct VertexPath {
  std::vector<SignedPermutation> vertices;
  CaseTrace trace;
  int fallback_invocations = 0;
};

// Like VertexPath with an implicit closing edge from back() to front().
struct VertexCycle {
  std::vector<SignedPermutation> vertices;
  CaseTrace trace;
  int fallback_invocations = 0;
};

// Permutation of an index set I ⊆ [n] with fixed ends and no two
// consecutive complementary indices (k_j != -k_{j+1}).
struct SubgraphOrdering {
  std::vector<int> indices;
  friend bool operator==(const SubgraphOrdering&, const SubgraphOrdering&) = default;
};

bool is_valid_ordering(const SubgraphOrdering& ordering, std::span<const int> index_set,
                       int first, int last);

// Backtracking search; always succeeds for |I| >= 5. Throws NoOrdering when
// no arrangement exists and UsageError on malformed input.
SubgraphOrdering order_subgraphs(std::span<const int> index_set, int first, int last);

// Hamiltonian path between u and v (different subgraphs) through every
// fault-free vertex of the subgraphs listed in I. Requires |I| >= 5,
// |F| <= n - 2 and |F_i| <= n - 4 for i in I.
VertexPath chain_path(std::span<const int> index_set, const SignedPermutation& u,
                      const SignedPermutation& v, const FaultSet& faults,
                      const BuildOptions& options = {});

// As chain_path with u, v in the same subgraph; requires |I| >= 6.
VertexPath loop_path(std::span<const int> index_set, const SignedPermutation& u,
                     const SignedPermutation& v, const FaultSet& faults,
                     const BuildOptions& options = {});

// Hamiltonian cycle of BP_n - V(F^mv) avoiding F^e, for n >= 3 and
// |F| <= n - 2.
VertexCycle hamiltonian_cycle(int n, const FaultSet& faults, const BuildOptions& options = {});

// Hamiltonian path of BP_n - V(F^mv) between u and v avoiding F^e, for
// n >= 3 and |F| <= n - 3.
VertexPath hamiltonian_path(int n, const SignedPermutation& u, const SignedPermutation& v,
                            const FaultSet& faults, const BuildOptions& options = {});

// BP_3 with at most one fault element.
VertexCycle base_cycle_bp3(const FaultSet& faults);
VertexPath base_path_bp3(const SignedPermutation& u, const SignedPermutation& v);

// Hamiltonian cycles of BP_3 - {123, k(123)} for k = 1, 2, 3 (index k - 1).
const std::array<std::vector<SignedPermutation>, 3>& bp3_fixtures();

}  // namespace bpham
