#include "bpham/oracle.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "bpham/bp_graph.hpp"
#include "bpham/errors.hpp"

namespace bpham {

namespace {

using Clock = std::chrono::steady_clock;

std::pair<std::uint64_t, std::uint64_t> undirected(const SignedPermutation& a,
                                                   const SignedPermutation& b) {
  return a.key() < b.key() ? std::pair(a.key(), b.key()) : std::pair(b.key(), a.key());
}

struct PairHash {
  std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& p) const noexcept {
    return std::hash<std::uint64_t>{}(p.first * 0x9E3779B97F4A7C15ULL ^ p.second);
  }
};

bool one_flip_apart(const SignedPermutation& a, const SignedPermutation& b) {
  if (a.size() != b.size()) return false;
  for (int k = 1; k <= a.size(); ++k) {
    if (prefix_reversal(a, k) == b) return true;
  }
  return false;
}

struct FaultIndex {
  std::unordered_set<std::uint64_t> deleted;
  std::unordered_set<std::pair<std::uint64_t, std::uint64_t>, PairHash> edges;

  explicit FaultIndex(const FaultSet& faults) {
    for (const auto& [a, b] : faults.matching_pairs) {
      deleted.insert(a.key());
      deleted.insert(b.key());
    }
    for (const auto& [a, b] : faults.faulty_edges) edges.insert(undirected(a, b));
  }
  bool gone(const SignedPermutation& u) const { return deleted.count(u.key()) != 0; }
  bool cut(const SignedPermutation& a, const SignedPermutation& b) const {
    return edges.count(undirected(a, b)) != 0;
  }
};

VerificationReport verify_walk(int n, const FaultSet& faults,
                               std::span<const SignedPermutation> walk, bool closed) {
  VerificationReport r;
  auto add = [&](ViolationKind k, long pos, std::string detail) {
    r.violations.push_back({k, pos, std::move(detail)});
  };
  const FaultIndex index(faults);
  const std::uint64_t expected = vertex_count(n) - 2 * faults.matching_pairs.size();
  if (walk.size() != expected) {
    add(ViolationKind::kWrongLength, -1,
        std::to_string(walk.size()) + " != " + std::to_string(expected));
  }
  std::unordered_set<std::uint64_t> seen;
  std::uint64_t distinct_valid = 0;
  for (std::size_t i = 0; i < walk.size(); ++i) {
    const auto& u = walk[i];
    const long pos = static_cast<long>(i);
    const bool valid = u.size() == n && is_valid_signed_permutation(u.to_vector());
    if (!valid) {
      add(ViolationKind::kNonAdjacent, pos, to_string(u) + " is not a vertex of BP_" + std::to_string(n));
      continue;
    }
    if (!seen.insert(u.key()).second) {
      add(ViolationKind::kRepeatedVertex, pos, to_string(u));
    } else if (index.gone(u)) {
      add(ViolationKind::kFaultyVertexUsed, pos, to_string(u));
    } else {
      ++distinct_valid;
    }
  }
  const std::size_t steps = closed ? walk.size() : (walk.empty() ? 0 : walk.size() - 1);
  for (std::size_t i = 0; i < steps && walk.size() > 1; ++i) {
    const auto& a = walk[i];
    const auto& b = walk[(i + 1) % walk.size()];
    const long pos = static_cast<long>(i);
    if (!one_flip_apart(a, b)) {
      add(ViolationKind::kNonAdjacent, pos, to_string(a) + " -> " + to_string(b));
    } else if (index.cut(a, b)) {
      add(ViolationKind::kFaultyEdgeUsed, pos, to_string(a) + " -> " + to_string(b));
    }
  }
  if (distinct_valid < expected) {
    std::string detail = std::to_string(expected - distinct_valid) + " vertices not visited";
    if (n <= 5) {
      for_each_vertex(n, [&](const SignedPermutation& u) {
        if (detail.find(':') == std::string::npos && !index.gone(u) && !seen.count(u.key())) {
          detail += ": first " + to_string(u);
        }
      });
    }
    add(ViolationKind::kMissingVertex, -1, detail);
  }
  r.ok = r.violations.empty();
  return r;
}

// Lexicographic depth-first search with residual-degree and periodic
// connectivity pruning.
class HamSearch {
 public:
  HamSearch(int n, const FaultSet& faults, std::chrono::milliseconds budget)
      : deadline_(Clock::now() + budget) {
    if (n < 1 || n > kMaxSearchDim) throw CapabilityError("exhaustive search limited to n <= 4");
    const FaultIndex index(faults);
    for_each_vertex(n, [&](const SignedPermutation& u) {
      if (!index.gone(u)) verts_.push_back(u);
    });
    std::unordered_map<std::uint64_t, int> at;
    for (std::size_t i = 0; i < verts_.size(); ++i) at.emplace(verts_[i].key(), static_cast<int>(i));
    adj_.resize(verts_.size());
    for (std::size_t i = 0; i < verts_.size(); ++i) {
      for (int k = 1; k <= n; ++k) {
        const auto w = prefix_reversal(verts_[i], k);
        const auto it = at.find(w.key());
        if (it != at.end() && !index.cut(verts_[i], w)) adj_[i].push_back(it->second);
      }
      std::sort(adj_[i].begin(), adj_[i].end());
    }
    index_ = std::move(at);
  }

  int index_of(const SignedPermutation& u) const {
    const auto it = index_.find(u.key());
    return it == index_.end() ? -1 : it->second;
  }

  SearchResult run(int start, int target) {
    const auto t0 = Clock::now();
    SearchResult res;
    start_ = start;
    target_ = target;
    visited_.assign(verts_.size(), 0);
    if (!initially_feasible()) {
      res.status = SearchStatus::kProvenAbsent;
    } else {
      visited_[static_cast<std::size_t>(start)] = 1;
      path_.push_back(start);
      const bool found = dfs(start);
      if (found) {
        res.status = SearchStatus::kFound;
        for (int i : path_) res.witness.push_back(verts_[static_cast<std::size_t>(i)]);
      } else {
        res.status = timed_out_ ? SearchStatus::kTimeout : SearchStatus::kProvenAbsent;
      }
    }
    res.nodes = nodes_;
    res.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return res;
  }

  std::size_t size() const { return verts_.size(); }

 private:
  bool cycle() const { return target_ < 0; }

  int need(int w) const { return (!cycle() && (w == target_ || w == start_)) ? 1 : 2; }

  bool initially_feasible() const {
    const std::size_t n = verts_.size();
    if (cycle() && n < 3) return false;
    if (!cycle() && n == 1) return false;
    for (std::size_t w = 0; w < n; ++w) {
      if (static_cast<int>(adj_[w].size()) < need(static_cast<int>(w))) return false;
    }
    return true;
  }

  int free_edges(int w, int head) const {
    int c = 0;
    for (int x : adj_[static_cast<std::size_t>(w)]) {
      if (!visited_[static_cast<std::size_t>(x)] || x == head || (cycle() && x == start_)) ++c;
    }
    return c;
  }

  bool out_of_time() {
    if ((nodes_ & 1023) == 0 && Clock::now() > deadline_) timed_out_ = true;
    return timed_out_;
  }

  bool dfs(int head) {
    ++nodes_;
    if (out_of_time()) return false;
    if (path_.size() == verts_.size()) {
      if (!cycle()) return head == target_;
      const auto& a = adj_[static_cast<std::size_t>(head)];
      return std::binary_search(a.begin(), a.end(), start_);
    }
    for (int c : adj_[static_cast<std::size_t>(head)]) {
      if (visited_[static_cast<std::size_t>(c)]) continue;
      if (c == target_ && path_.size() + 1 != verts_.size()) continue;
      visited_[static_cast<std::size_t>(c)] = 1;
      path_.push_back(c);
      if (prune_ok(head, c) && dfs(c)) return true;
      path_.pop_back();
      visited_[static_cast<std::size_t>(c)] = 0;
      if (timed_out_) return false;
    }
    return false;
  }

  bool prune_ok(int old_head, int head) {
    if (path_.size() == verts_.size()) return true;
    for (int w : adj_[static_cast<std::size_t>(old_head)]) {
      if (!visited_[static_cast<std::size_t>(w)] && free_edges(w, head) < need(w)) return false;
    }
    if (cycle()) {
      bool open = false;
      for (int x : adj_[static_cast<std::size_t>(start_)]) open = open || !visited_[static_cast<std::size_t>(x)];
      if (!open) return false;
    }
    if (path_.size() % 32 != 0) return true;
    std::vector<char> mark(verts_.size(), 0);
    std::vector<int> stack{head};
    std::size_t reached = 0;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int y : adj_[static_cast<std::size_t>(x)]) {
        if (visited_[static_cast<std::size_t>(y)] || mark[static_cast<std::size_t>(y)]) continue;
        mark[static_cast<std::size_t>(y)] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
    return reached == verts_.size() - path_.size();
  }

  Clock::time_point deadline_;
  std::vector<SignedPermutation> verts_;
  std::vector<std::vector<int>> adj_;
  std::unordered_map<std::uint64_t, int> index_;
  std::vector<char> visited_;
  std::vector<int> path_;
  int start_ = 0;
  int target_ = -1;
  std::uint64_t nodes_ = 0;
  bool timed_out_ = false;
};

FaultSet edges_at_identity(int n, int count) {
  FaultSet f{n, {}, {}};
  const auto id = SignedPermutation::identity(n);
  for (int k = 1; k <= count; ++k) f.faulty_edges.emplace_back(id, prefix_reversal(id, k));
  return f;
}

}  // namespace

std::string_view kind_name(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kNonAdjacent: return "NonAdjacent";
    case ViolationKind::kRepeatedVertex: return "RepeatedVertex";
    case ViolationKind::kMissingVertex: return "MissingVertex";
    case ViolationKind::kFaultyVertexUsed: return "FaultyVertexUsed";
    case ViolationKind::kFaultyEdgeUsed: return "FaultyEdgeUsed";
    case ViolationKind::kWrongEndpoints: return "WrongEndpoints";
    case ViolationKind::kWrongLength: return "WrongLength";
  }
  return "Unknown";
}

std::string_view status_name(SearchStatus status) {
  switch (status) {
    case SearchStatus::kFound: return "Found";
    case SearchStatus::kProvenAbsent: return "ProvenAbsent";
    case SearchStatus::kTimeout: return "Timeout";
  }
  return "Unknown";
}

bool VerificationReport::has(ViolationKind kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [kind](const WalkViolation& v) { return v.kind == kind; });
}

VerificationReport verify_cycle(int n, const FaultSet& faults,
                                std::span<const SignedPermutation> cycle) {
  return verify_walk(n, faults, cycle, true);
}

VerificationReport verify_path(int n, const FaultSet& faults, const SignedPermutation& u,
                               const SignedPermutation& v,
                               std::span<const SignedPermutation> path) {
  VerificationReport r = verify_walk(n, faults, path, false);
  if (path.empty() || path.front() != u || path.back() != v) {
    r.violations.push_back({ViolationKind::kWrongEndpoints, -1,
                            "expected " + to_string(u) + " .. " + to_string(v)});
    r.ok = false;
  }
  return r;
}

SearchResult exhaustive_cycle_search(int n, const FaultSet& faults,
                                     std::chrono::milliseconds time_budget) {
  HamSearch s(n, faults, time_budget);
  if (s.size() == 0) return {SearchStatus::kProvenAbsent, {}, 0, 0.0};
  return s.run(0, -1);
}

SearchResult exhaustive_path_search(int n, const FaultSet& faults, const SignedPermutation& u,
                                    const SignedPermutation& v,
                                    std::chrono::milliseconds time_budget) {
  if (u == v) throw UsageError("path search endpoints coincide");
  HamSearch s(n, faults, time_budget);
  const int a = s.index_of(u);
  const int b = s.index_of(v);
  if (a < 0 || b < 0) throw UsageError("path search endpoint is missing from the graph");
  return s.run(a, b);
}

FaultSet tightness_witness_cycle(int n) {
  if (n < 3) throw DomainError("tightness witness needs n >= 3");
  return edges_at_identity(n, n - 1);
}

PathWitness tightness_witness_path(int n) {
  if (n < 3) throw DomainError("tightness witness needs n >= 3");
  const auto id = SignedPermutation::identity(n);
  return {edges_at_identity(n, n - 2), prefix_reversal(id, n - 1), prefix_reversal(id, n)};
}

int residual_degree(const FaultSet& faults, const SignedPermutation& u) {
  const FaultIndex index(faults);
  if (index.gone(u)) return 0;
  int d = 0;
  for (int k = 1; k <= u.size(); ++k) {
    const auto w = prefix_reversal(u, k);
    d += !index.gone(w) && !index.cut(u, w);
  }
  return d;
}

}  // namespace bpham
