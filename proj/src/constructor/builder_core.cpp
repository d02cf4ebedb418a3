#include <algorithm>
#include <map>
#include <mutex>
#include <optional>

#include "bpham/errors.hpp"
#include "builder.hpp"

namespace bpham::detail {

namespace {

std::string join(const std::vector<int>& xs) {
  std::string s;
  for (int x : xs) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

// argmax |F_i| in canonical order; ties go to the earlier index.
int heaviest(int m, const Obstacles& obs) {
  int best = 1;
  int best_count = -1;
  for (int i : subgraph_indices(m)) {
    const int c = obs.count_in(i);
    if (c > best_count) {
      best = i;
      best_count = c;
    }
  }
  return best;
}

// Some subgraph loses a single vertex: an orphan or a straddling pair.
bool lone_vertices(const Obstacles& obs) {
  return !obs.orphans.empty() ||
         std::any_of(obs.pairs.begin(), obs.pairs.end(),
                     [](const VertexPair& p) { return sub(p.first) != sub(p.second); });
}

bool neighbours_ok(const std::map<int, std::vector<int>>& need, int s, int before, int after) {
  const auto it = need.find(s);
  if (it == need.end()) return true;
  if (it->second.size() > 2) return false;
  for (int r : it->second) {
    if (r != before && r != after) return false;
  }
  return it->second.size() < 2 || it->second[0] != it->second[1];
}

bool grow_order(std::vector<int>& seq, std::vector<int>& rest, std::vector<bool>& used, int last,
                const std::map<int, std::vector<int>>& need) {
  const auto check_prev = [&](int next) {
    const std::size_t k = seq.size() - 1;
    return neighbours_ok(need, seq[k], k == 0 ? 0 : seq[k - 1], next);
  };
  if (seq.size() == rest.size() + 1) {
    if (seq.back() == -last || !check_prev(last)) return false;
    if (!neighbours_ok(need, last, seq.back(), 0)) return false;
    seq.push_back(last);
    return true;
  }
  for (std::size_t i = 0; i < rest.size(); ++i) {
    if (used[i] || rest[i] == -seq.back() || !check_prev(rest[i])) continue;
    used[i] = true;
    seq.push_back(rest[i]);
    if (grow_order(seq, rest, used, last, need)) return true;
    seq.pop_back();
    used[i] = false;
  }
  return false;
}

// A valid ordering that also puts each subgraph next to the ones its dead
// ends lead to.
std::optional<std::vector<int>> constrained_order(const std::vector<int>& set, int first,
                                                  int last,
                                                  const std::map<int, std::vector<int>>& need) {
  std::vector<int> rest;
  for (int i : set) {
    if (i != first && i != last) rest.push_back(i);
  }
  std::vector<int> seq{first};
  std::vector<bool> used(rest.size(), false);
  if (!grow_order(seq, rest, used, last, need)) return std::nullopt;
  return seq;
}

int level_size(const Obstacles& obs) {
  return static_cast<int>(obs.pairs.size() + obs.edges.size());
}

Path translate(const SP& w, const Path& p) {
  Path out;
  out.reserve(p.size());
  for (const auto& x : p) out.push_back(left_translate(w, x));
  return out;
}

const Path& free_bp3_cycle() {
  static const Path cycle = [] {
    auto c = search_cycle(3, Obstacles{}, kLeafBudget);
    if (!c) throw std::logic_error("BP_3 has no Hamiltonian cycle");
    return *c;
  }();
  return cycle;
}

// Fault-free BP_3 paths from the identity, keyed by the other end; other
// sources are left translates.
Path free_bp3_path(const SP& u, const SP& v) {
  static std::mutex mu;
  static std::map<SP, Path> cache;
  const SP w = compose(inverse(u), v);
  {
    std::lock_guard lock(mu);
    const auto it = cache.find(w);
    if (it != cache.end()) return translate(u, it->second);
  }
  auto p = search_path(3, SP::identity(3), w, Obstacles{}, kLeafBudget);
  if (!p) throw std::logic_error("BP_3 is not Hamiltonian connected");
  {
    std::lock_guard lock(mu);
    cache.emplace(w, *p);
  }
  return translate(u, *p);
}

}  // namespace

Builder::Scope::Scope(Builder& b, std::string label, std::string detail) : b_(b) {
  b_.trace_.add(std::move(label), b_.depth_, std::move(detail));
  ++b_.depth_;
}

void Builder::internal(const std::string& what) const { throw InternalError(what, trace_); }

void Builder::assert_distinct(int a, int b, const char* where) const {
  if (a == b) internal(std::string(where) + ": spliced out-neighbours share subgraph " +
                       std::to_string(a));
}

Path Builder::cycle(int m, const Obstacles& obs) {
  if (m == 3) return leaf_cycle(obs);
  if (level_size(obs) > m - 2) internal("cycle budget exceeded at m=" + std::to_string(m));
  Path c;
  const std::size_t mark = trace_.checkpoint();
  const int depth = depth_;
  try {
    c = dispatch_cycle(m, obs);
  } catch (const Stuck&) {
    if (m != 4 || !lone_vertices(obs)) throw;
    trace_.rollback(mark);
    depth_ = depth;
    c = relay_cycle(obs);
  }
  if (c.size() != vertex_count(m) - static_cast<std::uint64_t>(obs.removed_count())) {
    internal("cycle length mismatch at m=" + std::to_string(m));
  }
  return c;
}

Path Builder::dispatch_cycle(int m, const Obstacles& obs) {
  const int h = heaviest(m, obs);
  const int f1 = obs.count_in(h);
  if (f1 <= m - 4) return cycle_case1(m, h, obs);
  if (f1 > m - 3) return cycle_case3(m, h, obs);
  return cycle_case2(m, h, obs);
}

Path Builder::path(int m, const SP& u, const SP& v, const Obstacles& obs) {
  if (u == v || obs.removed(u) || obs.removed(v)) throw Stuck("inadmissible path endpoints");
  if (m == 3) return leaf_path(u, v, obs);
  if (level_size(obs) > m - 3) internal("path budget exceeded at m=" + std::to_string(m));
  Path p;
  const std::size_t mark = trace_.checkpoint();
  const int depth = depth_;
  try {
    const int h = heaviest(m, obs);
    p = obs.count_in(h) <= m - 4 ? path_case1(m, u, v, obs) : path_case2(m, h, u, v, obs);
  } catch (const Stuck&) {
    if (m != 4 || !lone_vertices(obs)) throw;
    trace_.rollback(mark);
    depth_ = depth;
    p = relay_path(u, v, obs);
  }
  if (p.size() != vertex_count(m) - static_cast<std::uint64_t>(obs.removed_count()) ||
      p.front() != u || p.back() != v) {
    internal("path length mismatch at m=" + std::to_string(m));
  }
  return p;
}

Path Builder::relay_cycle(const Obstacles& obs) {
  auto all = subgraph_indices(4);
  Scope s(*this, "BP4/relay", obs.describe());
  Relaxed r(*this);
  auto starts = all;
  std::stable_sort(starts.begin(), starts.end(),
                   [&](int a, int b) { return obs.removed_in(a) > obs.removed_in(b); });
  int tries = 0;
  for (int h : starts) {
    for (int t : minus(all, {h, -h})) {
      for (const auto& u : cross_edge_sources(4, h, t)) {
        const SP y = nb(u);
        if (!obs.usable(u, y)) continue;
        if (++tries > 4 * kScanAttempts) throw Stuck("BP4/relay: no cycle");
        Path out;
        if (attempt([&] { out = chain(4, all, u, y, obs); })) return out;
        break;
      }
    }
  }
  throw Stuck("BP4/relay: no cycle");
}

Path Builder::relay_path(const SP& u, const SP& v, const Obstacles& obs) {
  const auto all = subgraph_indices(4);
  Scope s(*this, "BP4/relay", obs.describe());
  Relaxed r(*this);
  if (sub(u) != sub(v)) return chain(4, all, u, v, obs);
  Path out;
  if (attempt([&] { out = loop(4, all, u, v, obs); })) return out;
  // No u-v path inside the subgraph: cover it by two paths instead and
  // chain the other subgraphs between their far ends.
  const int k1 = sub(u);
  const auto rest = minus(all, {k1});
  const Obstacles local = obs.restrict_embed(k1);
  std::vector<SP> exits;
  for (const auto& x : all_vertices(4)) {
    if (sub(x) == k1 && obs.usable(x, nb(x))) exits.push_back(x);
  }
  int tries = 0;
  for (const auto& x0 : exits) {
    if (++tries > kScanAttempts) break;
    std::vector<SP> allowed{subgraph_embed(x0)};
    for (const auto& y : exits) {
      if (sub(nb(y)) != sub(nb(x0))) allowed.push_back(subgraph_embed(y));
    }
    const auto split = search_split(3, subgraph_embed(u), subgraph_embed(v), local, allowed,
                                    kLeafBudget);
    if (!split) continue;
    Path a = split->first;
    Path b = split->second;
    for (auto& x : a) x = subgraph_lift(k1, x);
    for (auto& x : b) x = subgraph_lift(k1, x);
    if (sub(nb(a.back())) == sub(nb(b.front()))) continue;
    if (attempt([&] {
          Scope sc(*this, "BP3/split", "x=" + vtext(a.back()) + " y=" + vtext(b.front()));
          out = a;
          append(out, chain(4, rest, nb(a.back()), nb(b.front()), obs));
          append(out, b);
        })) {
      return out;
    }
  }
  throw Stuck("BP4/relay: no split of the endpoint subgraph");
}

Path Builder::leaf_cycle(const Obstacles& obs) {
  if (obs.empty()) {
    Scope s(*this, "BP3/search", "fault-free");
    return free_bp3_cycle();
  }
  if (obs.pairs.size() == 1 && obs.orphans.empty() && obs.edges.empty()) {
    const auto& [a, b] = obs.pairs.front();
    const int k = edge_dimension(a, b);
    Scope s(*this, "BP3/fixture", "k=" + std::to_string(k));
    return translate(a, bp3_fixtures()[static_cast<std::size_t>(k - 1)]);
  }
  Scope s(*this, "BP3/search", obs.describe());
  auto c = search_cycle(3, obs, kLeafBudget);
  if (!c) throw Stuck("BP3: no Hamiltonian cycle with " + obs.describe());
  return *c;
}

Path Builder::leaf_path(const SP& u, const SP& v, const Obstacles& obs) {
  if (obs.empty()) {
    Scope s(*this, "BP3/path", "");
    return free_bp3_path(u, v);
  }
  Scope s(*this, "BP3/search", obs.describe());
  auto p = search_path(3, u, v, obs, kLeafBudget);
  if (!p) throw Stuck("BP3: no Hamiltonian path with " + obs.describe());
  return *p;
}

Path Builder::fallback_cycle(int m, const Obstacles& obs) {
  ++fallbacks_;
  Scope s(*this, "FALLBACK/search", "m=" + std::to_string(m) + " " + obs.describe());
  auto c = search_cycle(m, obs, kFallbackBudget);
  if (!c) throw Stuck("fallback search found no cycle");
  return *c;
}

Path Builder::fallback_path(int m, const SP& u, const SP& v, const Obstacles& obs) {
  ++fallbacks_;
  Scope s(*this, "FALLBACK/search", "m=" + std::to_string(m) + " " + obs.describe());
  auto p = search_path(m, u, v, obs, kFallbackBudget);
  if (!p) throw Stuck("fallback search found no path");
  return *p;
}

Path Builder::sub_cycle(int m, int i, const Obstacles& obs) {
  const Obstacles local = obs.restrict_embed(i);
  if (!relaxed_ && level_size(local) > (m - 1) - 2) {
    internal("recursive cycle budget exceeded in subgraph " + std::to_string(i));
  }
  if (!obs.dead_ends(m, i).empty()) throw Stuck("dead end inside a sub cycle");
  Path c;
  if (fallback_ && m - 1 <= 4) {
    const std::size_t mark = trace_.checkpoint();
    try {
      c = cycle(m - 1, local);
    } catch (const Stuck&) {
      trace_.rollback(mark);
      c = fallback_cycle(m - 1, local);
    }
  } else {
    c = cycle(m - 1, local);
  }
  for (auto& x : c) x = subgraph_lift(i, x);
  return c;
}

Path Builder::sub_path(int m, int i, const SP& a, const SP& b, const Obstacles& obs) {
  if (sub(a) != i || sub(b) != i) throw Stuck("sub path endpoints outside subgraph");
  const Obstacles local = obs.restrict_embed(i);
  if (!relaxed_ && level_size(local) > (m - 1) - 3) {
    internal("recursive path budget exceeded in subgraph " + std::to_string(i));
  }
  for (const auto& d : obs.dead_ends(m, i)) {
    if (d != a && d != b) throw Stuck("dead end inside a sub path");
  }
  const SP la = subgraph_embed(a);
  const SP lb = subgraph_embed(b);
  Path p;
  if (fallback_ && m - 1 <= 4) {
    const std::size_t mark = trace_.checkpoint();
    try {
      p = path(m - 1, la, lb, local);
    } catch (const Stuck&) {
      trace_.rollback(mark);
      p = fallback_path(m - 1, la, lb, local);
    }
  } else {
    p = path(m - 1, la, lb, local);
  }
  for (auto& x : p) x = subgraph_lift(i, x);
  return p;
}

Path Builder::ext(int m, const std::vector<int>& set, const SP& a, const SP& b,
                  const Obstacles& obs) {
  if (sub(a) != sub(b)) return chain(m, set, a, b, obs);
  if (set.size() >= 6) return loop(m, set, a, b, obs);
  throw Stuck("same-subgraph ends with fewer than six subgraphs");
}

Path Builder::chain(int m, const std::vector<int>& set, const SP& u, const SP& v,
                    const Obstacles& obs) {
  if (sub(u) == sub(v) || !contains(set, sub(u)) || !contains(set, sub(v))) {
    throw Stuck("chain endpoints not in distinct subgraphs of I");
  }
  // Dead ends leave the subgraph only through their out-edges, so those
  // out-subgraphs have to sit next to it in the ordering.
  std::map<int, std::vector<int>> need;
  for (int i : set) {
    for (const auto& d : obs.dead_ends(m, i)) {
      if (d == u || d == v) continue;
      const SP nd = nb(d);
      if (!obs.usable(d, nd) || !contains(set, sub(nd))) throw Stuck("L17: isolated dead end");
      need[i].push_back(sub(nd));
    }
  }
  SubgraphOrdering order;
  if (need.empty()) {
    try {
      order = order_subgraphs(set, sub(u), sub(v));
    } catch (const NoOrdering&) {
      throw Stuck("no subgraph ordering for " + join(set));
    }
  } else {
    auto found = constrained_order(set, sub(u), sub(v), need);
    if (!found) throw Stuck("no subgraph ordering around dead ends");
    order.indices = std::move(*found);
  }
  Scope s(*this, "L17", "order=" + join(order.indices));
  std::vector<Path> pieces(order.indices.size());
  int budget = 4 * kScanAttempts;
  if (!chain_step(m, order.indices, 0, u, v, obs, pieces, budget)) {
    throw Stuck("L17: no usable junction");
  }
  Path out;
  for (const auto& p : pieces) append(out, p);
  return out;
}

bool Builder::chain_step(int m, const std::vector<int>& order, std::size_t j, const SP& entry,
                         const SP& v, const Obstacles& obs, std::vector<Path>& pieces,
                         int& budget) {
  const int s = order[j];
  std::vector<SP> dead = obs.dead_ends(m, s);
  std::erase(dead, entry);
  if (dead.size() > 1) return false;
  if (j + 1 == order.size()) {
    if (!dead.empty() && dead.front() != v) return false;
    return attempt([&] { pieces[j] = sub_path(m, s, entry, v, obs); });
  }
  const int t = order[j + 1];
  const bool last_junction = j + 2 == order.size();
  // Exits onto a dead end of the next subgraph go first.
  auto sources = cross_edge_sources(m, s, t);
  const auto next_dead = obs.dead_ends(m, t);
  std::stable_partition(sources.begin(), sources.end(), [&](const SP& x) {
    return std::find(next_dead.begin(), next_dead.end(), nb(x)) != next_dead.end();
  });
  std::vector<SP> need_y;
  for (const auto& g : next_dead) {
    if (g != v && sub(nb(g)) == s) need_y.push_back(g);
  }
  if (need_y.size() > 1) return false;
  int tries = 0;
  for (const auto& x : sources) {
    const SP y = nb(x);
    if (!obs.usable(x, y) || x == entry || (last_junction && y == v)) continue;
    if (!dead.empty() && x != dead.front()) continue;
    if (!need_y.empty() && y != need_y.front()) continue;
    if (++tries > kScanAttempts || --budget < 0) break;
    const bool ok = attempt([&] {
      pieces[j] = sub_path(m, s, entry, x, obs);
      if (!chain_step(m, order, j + 1, y, v, obs, pieces, budget)) throw Stuck("chain tail");
    });
    if (ok) return true;
  }
  return false;
}

Path Builder::loop(int m, const std::vector<int>& set, const SP& u, const SP& v,
                   const Obstacles& obs) {
  const int k1 = sub(u);
  if (sub(v) != k1 || u == v || !contains(set, k1)) throw Stuck("loop endpoints");
  const std::vector<int> rest = minus(set, {k1});
  Scope s(*this, "L20", "k1=" + std::to_string(k1));
  const Path p = sub_path(m, k1, u, v, obs);
  int tries = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    const SP nx = nb(p[i]);
    const SP ny = nb(p[i + 1]);
    if (obs.touched(nx) || obs.touched(ny)) continue;
    assert_distinct(sub(nx), sub(ny), "L20");
    if (!contains(rest, sub(nx)) || !contains(rest, sub(ny))) continue;
    if (++tries > kScanAttempts) break;
    Path out;
    const bool ok = attempt([&] {
      const Path mid = chain(m, rest, nx, ny, obs);
      out.assign(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(i) + 1);
      append(out, mid);
      out.insert(out.end(), p.begin() + static_cast<std::ptrdiff_t>(i) + 1, p.end());
    });
    if (ok) return out;
  }
  throw Stuck("L20: no usable edge");
}

}  // namespace bpham::detail
