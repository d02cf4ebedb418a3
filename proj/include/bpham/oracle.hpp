#pragma once

#include <chrono>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bpham/fault_model.hpp"
#include "bpham/signed_perm.hpp"

namespace bpham {

enum class ViolationKind {
  kNonAdjacent,
  kRepeatedVertex,
  kMissingVertex,
  kFaultyVertexUsed,
  kFaultyEdgeUsed,
  kWrongEndpoints,
  kWrongLength,
};

std::string_view kind_name(ViolationKind kind);

struct WalkViolation {
  ViolationKind kind;
  long position = -1;  // index in the walk, -1 when not positional
  std::string detail;
};

struct VerificationReport {
  bool ok = true;
  std::vector<WalkViolation> violations;

  bool has(ViolationKind kind) const;
};

VerificationReport verify_cycle(int n, const FaultSet& faults,
                                std::span<const SignedPermutation> cycle);
VerificationReport verify_path(int n, const FaultSet& faults, const SignedPermutation& u,
                               const SignedPermutation& v,
                               std::span<const SignedPermutation> path);

enum class SearchStatus { kFound, kProvenAbsent, kTimeout };

std::string_view status_name(SearchStatus status);

struct SearchResult {
  SearchStatus status = SearchStatus::kTimeout;
  std::vector<SignedPermutation> witness;  // set when found
  std::uint64_t nodes = 0;
  double seconds = 0.0;
};

inline constexpr int kMaxSearchDim = 4;

// Complete depth-first search over BP_n - V(F^mv) - F^e for n <= 4.
// ProvenAbsent only after exhausting the search space.
SearchResult exhaustive_cycle_search(int n, const FaultSet& faults,
                                     std::chrono::milliseconds time_budget);
SearchResult exhaustive_path_search(int n, const FaultSet& faults, const SignedPermutation& u,
                                    const SignedPermutation& v,
                                    std::chrono::milliseconds time_budget);

// n - 1 faulty edges at the identity: beyond the cycle tolerance by one.
FaultSet tightness_witness_cycle(int n);

struct PathWitness {
  FaultSet faults;  // n - 2 faulty edges at the identity
  SignedPermutation source;
  SignedPermutation target;
};

// Endpoints are the two neighbours of the identity left unblocked.
PathWitness tightness_witness_path(int n);

// Number of usable edges at u in BP_n - F (0 for a deleted vertex).
int residual_degree(const FaultSet& faults, const SignedPermutation& u);

}  // namespace bpham
