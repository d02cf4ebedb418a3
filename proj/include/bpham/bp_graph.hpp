#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "bpham/signed_perm.hpp"

namespace bpham {

// Practical ceiling for constructions (output size 2^n * n!).
inline constexpr int kMaxConstructionDim = 8;
// Ceiling for breadth-first distance queries.
inline constexpr int kMaxDistanceDim = 6;

// Unordered vertex pair, stored with a < b.
struct Edge {
  SignedPermutation a;
  SignedPermutation b;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Normalizes endpoint order; throws DomainError unless u, v are adjacent.
Edge make_edge(const SignedPermutation& u, const SignedPermutation& v);

// k if v = prefix_reversal(u, k), 0 when not adjacent.
int edge_dimension(const SignedPermutation& u, const SignedPermutation& v);
bool adjacent(const SignedPermutation& u, const SignedPermutation& v);

std::vector<SignedPermutation> neighbors(const SignedPermutation& u);

// The subgraph BP_n^i containing u is indexed by its last symbol.
inline int last_symbol(const SignedPermutation& u) { return u.last(); }

// The n-neighbor; lies in subgraph -u_1.
SignedPermutation out_neighbor(const SignedPermutation& u);

// Subgraph indices [n] in canonical order 1, -1, 2, -2, ..., n, -n.
std::vector<int> subgraph_indices(int n);
bool is_subgraph_index(int n, int i);

std::uint64_t vertex_count(int n);
std::uint64_t edge_count(int n);
// (n-2)! * 2^(n-2) for i != -j, 0 for i == -j.
std::uint64_t cross_edge_count(int n, int i, int j);

// All vertices of BP_n in lexicographic order.
void for_each_vertex(int n, const std::function<void(const SignedPermutation&)>& fn);
std::vector<SignedPermutation> all_vertices(int n);

// Vertices u of BP_n^i whose out-neighbor lies in BP_n^j (u_n = i, u_1 = -j),
// lexicographic. Empty when i == -j.
std::vector<SignedPermutation> cross_edge_sources(int n, int i, int j);

// Edges between BP_n^i and BP_n^j ordered by the BP_n^i endpoint. Throws
// DomainError when i == j.
std::vector<Edge> cross_edges(int n, int i, int j);

// Shortest-path length by BFS; CapabilityError for n > kMaxDistanceDim.
int distance(const SignedPermutation& u, const SignedPermutation& v);

// BP_n^i -> BP_{n-1}: drop the last symbol and relabel the remaining
// absolute values by rank, keeping signs.
SignedPermutation subgraph_embed(const SignedPermutation& u);
// Checked form: DomainError unless last_symbol(u) == i.
SignedPermutation subgraph_embed(int i, const SignedPermutation& u);
SignedPermutation subgraph_lift(int i, const SignedPermutation& w);

}  // namespace bpham
