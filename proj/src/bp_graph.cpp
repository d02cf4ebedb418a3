#include "bpham/bp_graph.hpp"

#include <cstdlib>
#include <deque>
#include <unordered_map>

#include "bpham/errors.hpp"

namespace bpham {

namespace {

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

void check_dim(int n) {
  if (n < 1 || n > SignedPermutation::kMaxDim) throw DomainError("dimension out of range");
}

// Fills positions [pos, end) with unused symbols in increasing signed order,
// which yields lexicographic enumeration.
void fill_lex(PermBuilder& b, std::array<bool, 9>& used, int n, int pos, int end,
              const std::function<void()>& leaf) {
  if (pos == end) {
    leaf();
    return;
  }
  for (int s = -n; s <= n; ++s) {
    if (s == 0 || used[static_cast<std::size_t>(std::abs(s))]) continue;
    used[static_cast<std::size_t>(std::abs(s))] = true;
    b.set(pos, s);
    fill_lex(b, used, n, pos + 1, end, leaf);
    used[static_cast<std::size_t>(std::abs(s))] = false;
  }
}

}  // namespace

Edge make_edge(const SignedPermutation& u, const SignedPermutation& v) {
  if (!adjacent(u, v)) throw DomainError("not an edge: " + to_string(u) + " / " + to_string(v));
  return u < v ? Edge{u, v} : Edge{v, u};
}

int edge_dimension(const SignedPermutation& u, const SignedPermutation& v) {
  if (u.size() != v.size() || u == v) return 0;
  const int n = u.size();
  // The dimension is the last position where u and v differ.
  int k = n;
  while (k > 0 && u[k - 1] == v[k - 1]) --k;
  return prefix_reversal(u, k) == v ? k : 0;
}

bool adjacent(const SignedPermutation& u, const SignedPermutation& v) {
  return edge_dimension(u, v) != 0;
}

std::vector<SignedPermutation> neighbors(const SignedPermutation& u) {
  std::vector<SignedPermutation> out;
  out.reserve(static_cast<std::size_t>(u.size()));
  for (int k = 1; k <= u.size(); ++k) out.push_back(prefix_reversal(u, k));
  return out;
}

SignedPermutation out_neighbor(const SignedPermutation& u) {
  return prefix_reversal(u, u.size());
}

std::vector<int> subgraph_indices(int n) {
  std::vector<int> out;
  for (int i = 1; i <= n; ++i) {
    out.push_back(i);
    out.push_back(-i);
  }
  return out;
}

bool is_subgraph_index(int n, int i) { return i != 0 && std::abs(i) <= n; }

std::uint64_t vertex_count(int n) { return (std::uint64_t{1} << n) * factorial(n); }

std::uint64_t edge_count(int n) {
  return static_cast<std::uint64_t>(n) * factorial(n) * (std::uint64_t{1} << (n - 1));
}

std::uint64_t cross_edge_count(int n, int i, int j) {
  if (i == -j || n < 2) return 0;
  return factorial(n - 2) * (std::uint64_t{1} << (n - 2));
}

void for_each_vertex(int n, const std::function<void(const SignedPermutation&)>& fn) {
  check_dim(n);
  PermBuilder b(n);
  std::array<bool, 9> used{};
  fill_lex(b, used, n, 0, n, [&] { fn(b.build()); });
}

std::vector<SignedPermutation> all_vertices(int n) {
  std::vector<SignedPermutation> out;
  out.reserve(vertex_count(n));
  for_each_vertex(n, [&](const SignedPermutation& u) { out.push_back(u); });
  return out;
}

std::vector<SignedPermutation> cross_edge_sources(int n, int i, int j) {
  check_dim(n);
  if (!is_subgraph_index(n, i) || !is_subgraph_index(n, j)) {
    throw DomainError("subgraph index out of range");
  }
  std::vector<SignedPermutation> out;
  if (n < 2 || std::abs(i) == std::abs(j)) return out;
  PermBuilder b(n);
  std::array<bool, 9> used{};
  b.set(0, -j).set(n - 1, i);
  used[static_cast<std::size_t>(std::abs(i))] = true;
  used[static_cast<std::size_t>(std::abs(j))] = true;
  fill_lex(b, used, n, 1, n - 1, [&] { out.push_back(b.build()); });
  return out;
}

std::vector<Edge> cross_edges(int n, int i, int j) {
  if (i == j) throw DomainError("cross_edges: identical subgraph indices");
  std::vector<Edge> out;
  for (const auto& u : cross_edge_sources(n, i, j)) out.push_back(make_edge(u, out_neighbor(u)));
  return out;
}

int distance(const SignedPermutation& u, const SignedPermutation& v) {
  if (u.size() != v.size()) throw DomainError("distance: length mismatch");
  if (u.size() > kMaxDistanceDim) throw CapabilityError("distance limited to n <= 6");
  if (u == v) return 0;
  std::unordered_map<std::uint64_t, int> dist{{u.key(), 0}};
  std::deque<SignedPermutation> queue{u};
  while (!queue.empty()) {
    const SignedPermutation x = queue.front();
    queue.pop_front();
    const int d = dist[x.key()];
    for (int k = 1; k <= x.size(); ++k) {
      const SignedPermutation y = prefix_reversal(x, k);
      if (y == v) return d + 1;
      if (dist.emplace(y.key(), d + 1).second) queue.push_back(y);
    }
  }
  throw DomainError("distance: unreachable vertex");
}

SignedPermutation subgraph_embed(const SignedPermutation& u) {
  const int n = u.size();
  if (n < 2) throw DomainError("subgraph_embed needs n >= 2");
  const int removed = std::abs(u.last());
  PermBuilder b(n - 1);
  for (int p = 0; p < n - 1; ++p) {
    const int s = u[p];
    const int a = std::abs(s);
    const int r = a > removed ? a - 1 : a;
    b.set(p, s > 0 ? r : -r);
  }
  return b.build();
}

SignedPermutation subgraph_embed(int i, const SignedPermutation& u) {
  if (u.size() < 2 || u.last() != i) throw DomainError("subgraph_embed: vertex not in BP_n^i");
  return subgraph_embed(u);
}

SignedPermutation subgraph_lift(int i, const SignedPermutation& w) {
  const int n = w.size() + 1;
  if (!is_subgraph_index(n, i)) throw DomainError("subgraph_lift: index out of range");
  const int removed = std::abs(i);
  PermBuilder b(n);
  for (int p = 0; p < n - 1; ++p) {
    const int s = w[p];
    const int r = std::abs(s);
    const int a = r >= removed ? r + 1 : r;
    b.set(p, s > 0 ? a : -a);
  }
  b.set(n - 1, i);
  return b.build();
}

}  // namespace bpham
