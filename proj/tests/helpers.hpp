#pragma once

#include <string>
#include <vector>

#include "bpham/fault_model.hpp"
#include "bpham/signed_perm.hpp"

namespace bpham::test {

inline SignedPermutation V(const std::string& text) { return parse_vertex(text); }

inline VertexPair P(const std::string& a, const std::string& b) { return {V(a), V(b)}; }

inline FaultSet faults(int n, std::vector<VertexPair> pairs, std::vector<VertexPair> edges = {}) {
  return FaultSet{n, std::move(pairs), std::move(edges)};
}

// The five-element example on BP_3: two pairs and three faulty edges.
inline FaultSet example_bp3() {
  return faults(3, {P("1,2,3", "-1,2,3"), P("1,-2,3", "-3,2,-1")},
                {P("-2,1,3", "2,1,3"), P("-1,-2,3", "-3,2,1"), P("-1,2,-3", "-2,1,-3")});
}

}  // namespace bpham::test
