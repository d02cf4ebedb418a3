#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bpham/bp_graph.hpp"
#include "bpham/signed_perm.hpp"

namespace bpham {

using VertexPair = std::pair<SignedPermutation, SignedPermutation>;

// Hybrid fault set F = F^mv ∪ F^e of BP_n. Matching pairs name both
// end-vertices of an edge; those vertices are deleted. Faulty edges are
// deleted while their endpoints stay.
struct FaultSet {
  int n = 0;
  std::vector<VertexPair> matching_pairs;
  std::vector<VertexPair> faulty_edges;

  int size() const { return static_cast<int>(matching_pairs.size() + faulty_edges.size()); }
  bool empty() const { return size() == 0; }

  friend bool operator==(const FaultSet&, const FaultSet&) = default;
};

struct Violation {
  std::string kind;    // "invalid vertex", "not an edge", "not a matching", ...
  std::string detail;  // offending element in text form
};

struct ValidationReport {
  bool ok = true;
  bool within_bound = true;
  int size = 0;
  std::vector<Violation> violations;

  // Violations other than the budget check.
  bool structurally_valid() const;
};

// Total: never throws, lists every violated invariant.
ValidationReport validate(const FaultSet& faults, int bound);

struct FaultVertices {
  std::set<SignedPermutation> matched;  // V(F^mv): deleted from the graph
  std::set<SignedPermutation> all;      // V(F): also endpoints of faulty edges
};

FaultVertices fault_vertices(const FaultSet& faults);

// F_i: elements whose carrier edge lies inside BP_n^i.
struct FaultRestriction {
  int index = 0;
  std::vector<VertexPair> matching_pairs;
  std::vector<VertexPair> faulty_edges;
  int size() const { return static_cast<int>(matching_pairs.size() + faulty_edges.size()); }
};

FaultRestriction restrict_to(const FaultSet& faults, int i);

// Elements whose carrier is an n-dimensional edge; they belong to no F_i.
FaultRestriction straddling(const FaultSet& faults);

// Each pair ordered by endpoint text form, then elements sorted the same way.
FaultSet canonicalize(FaultSet faults);

}  // namespace bpham
