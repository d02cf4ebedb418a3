#include <algorithm>
#include <numeric>

#include "bpham/errors.hpp"
#include "builder.hpp"

namespace bpham::detail {

namespace {

struct Graph {
  std::vector<SP> verts;
  std::vector<std::vector<int>> adj;
};

Graph make_graph(int m, const Obstacles& obs) {
  if (m > 4) throw CapabilityError("small search limited to m <= 4");
  Graph g;
  for (const auto& u : all_vertices(m)) {
    if (!obs.removed(u)) g.verts.push_back(u);
  }
  const Positions pos(g.verts);
  g.adj.resize(g.verts.size());
  for (std::size_t i = 0; i < g.verts.size(); ++i) {
    for (int k = 1; k <= m; ++k) {
      const SP w = prefix_reversal(g.verts[i], k);
      const int j = pos.at(w);
      if (j >= 0 && !obs.faulty(g.verts[i], w)) g.adj[i].push_back(j);
    }
  }
  return g;
}

class Dfs {
 public:
  Dfs(const Graph& g, int start, int target, std::int64_t budget)
      : g_(g), n_(static_cast<int>(g.verts.size())), start_(start), target_(target),
        budget_(budget), visited_(g.verts.size(), 0), mark_(g.verts.size(), 0) {}

  std::optional<std::vector<int>> run() {
    visited_[static_cast<std::size_t>(start_)] = 1;
    path_.push_back(start_);
    if (step(start_)) return path_;
    return std::nullopt;
  }

 private:
  bool cycle() const { return target_ < 0; }

  int free_degree(int w, int head) const {
    int d = 0;
    for (int x : g_.adj[static_cast<std::size_t>(w)]) {
      if (!visited_[static_cast<std::size_t>(x)] || x == head || (cycle() && x == start_)) ++d;
    }
    return d;
  }

  bool step(int head) {
    if (++nodes_ > budget_) return false;
    if (static_cast<int>(path_.size()) == n_) {
      if (!cycle()) return head == target_;
      const auto& a = g_.adj[static_cast<std::size_t>(head)];
      return std::find(a.begin(), a.end(), start_) != a.end();
    }
    std::vector<std::pair<int, int>> cand;
    for (int c : g_.adj[static_cast<std::size_t>(head)]) {
      if (visited_[static_cast<std::size_t>(c)]) continue;
      if (c == target_ && static_cast<int>(path_.size()) != n_ - 1) continue;
      int onward = 0;
      for (int x : g_.adj[static_cast<std::size_t>(c)]) onward += !visited_[static_cast<std::size_t>(x)];
      cand.emplace_back(onward, c);
    }
    std::sort(cand.begin(), cand.end());
    for (const auto& [deg, c] : cand) {
      visited_[static_cast<std::size_t>(c)] = 1;
      path_.push_back(c);
      if (feasible(head, c) && step(c)) return true;
      path_.pop_back();
      visited_[static_cast<std::size_t>(c)] = 0;
      if (nodes_ > budget_) return false;
    }
    return false;
  }

  bool feasible(int old_head, int head) {
    const int placed = static_cast<int>(path_.size());
    if (placed == n_) return true;
    for (int w : g_.adj[static_cast<std::size_t>(old_head)]) {
      if (visited_[static_cast<std::size_t>(w)]) continue;
      if (free_degree(w, head) < (w == target_ ? 1 : 2)) return false;
    }
    if (cycle()) {
      bool open = false;
      for (int x : g_.adj[static_cast<std::size_t>(start_)]) {
        open = open || !visited_[static_cast<std::size_t>(x)];
      }
      if (!open) return false;
    }
    if (n_ > 64 && placed % 4 != 0) return true;
    return connected(head, n_ - placed);
  }

  // Every unvisited vertex reachable from the head through unvisited ones.
  bool connected(int head, int remaining) {
    ++stamp_;
    std::vector<int> stack{head};
    int seen = 0;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int y : g_.adj[static_cast<std::size_t>(x)]) {
        auto& mk = mark_[static_cast<std::size_t>(y)];
        if (visited_[static_cast<std::size_t>(y)] || mk == stamp_) continue;
        mk = stamp_;
        ++seen;
        stack.push_back(y);
      }
    }
    return seen == remaining;
  }

  const Graph& g_;
  int n_;
  int start_;
  int target_;
  std::int64_t budget_;
  std::int64_t nodes_ = 0;
  std::vector<char> visited_;
  std::vector<int> mark_;
  int stamp_ = 0;
  std::vector<int> path_;
};

Path to_path(const Graph& g, const std::vector<int>& idx) {
  Path out;
  out.reserve(idx.size());
  for (int i : idx) out.push_back(g.verts[static_cast<std::size_t>(i)]);
  return out;
}

}  // namespace

std::optional<Path> search_cycle(int m, const Obstacles& obs, std::int64_t node_budget) {
  const Graph g = make_graph(m, obs);
  if (g.verts.size() < 3) return std::nullopt;
  auto found = Dfs(g, 0, -1, node_budget).run();
  if (!found) return std::nullopt;
  return to_path(g, *found);
}

std::optional<Path> search_path(int m, const SP& u, const SP& v, const Obstacles& obs,
                                std::int64_t node_budget) {
  const Graph g = make_graph(m, obs);
  const Positions pos(g.verts);
  const int s = pos.at(u);
  const int t = pos.at(v);
  if (s < 0 || t < 0 || s == t) return std::nullopt;
  auto found = Dfs(g, s, t, node_budget).run();
  if (!found) return std::nullopt;
  return to_path(g, *found);
}

std::optional<std::pair<Path, Path>> search_split(int m, const SP& u, const SP& v,
                                                  const Obstacles& obs,
                                                  const std::vector<SP>& exits,
                                                  std::int64_t node_budget) {
  Graph g = make_graph(m, obs);
  const Positions pos(g.verts);
  const int s = pos.at(u);
  const int t = pos.at(v);
  if (s < 0 || t < 0 || s == t) return std::nullopt;
  // A virtual vertex joined to every exit marks the cut between the paths.
  const int z = static_cast<int>(g.verts.size());
  g.verts.push_back(u);
  g.adj.emplace_back();
  for (const auto& x : exits) {
    const int i = pos.at(x);
    if (i < 0) continue;
    g.adj[static_cast<std::size_t>(i)].push_back(z);
    g.adj[static_cast<std::size_t>(z)].push_back(i);
  }
  auto found = Dfs(g, s, t, node_budget).run();
  if (!found) return std::nullopt;
  const auto cut = std::find(found->begin(), found->end(), z);
  const std::vector<int> head(found->begin(), cut);
  const std::vector<int> tail(cut + 1, found->end());
  return std::make_pair(to_path(g, head), to_path(g, tail));
}

}  // namespace bpham::detail
