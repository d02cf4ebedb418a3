#include <algorithm>

#include "builder.hpp"

namespace bpham::detail {

namespace {

std::pair<std::uint64_t, std::uint64_t> edge_key(const SP& u, const SP& v) {
  const auto a = u.key();
  const auto b = v.key();
  return a < b ? std::pair(a, b) : std::pair(b, a);
}

bool has(const std::vector<std::uint64_t>& keys, std::uint64_t k) {
  return std::find(keys.begin(), keys.end(), k) != keys.end();
}

}  // namespace

Obstacles Obstacles::from(const FaultSet& faults) {
  const FaultSet canon = canonicalize(faults);
  Obstacles o;
  o.pairs = canon.matching_pairs;
  o.edges = canon.faulty_edges;
  o.finalize();
  return o;
}

void Obstacles::finalize() {
  removed_keys_.clear();
  touched_keys_.clear();
  edge_keys_.clear();
  for (const auto& p : pairs) {
    removed_keys_.push_back(p.first.key());
    removed_keys_.push_back(p.second.key());
  }
  for (const auto& u : orphans) removed_keys_.push_back(u.key());
  touched_keys_ = removed_keys_;
  for (const auto& e : edges) {
    edge_keys_.push_back(edge_key(e.first, e.second));
    touched_keys_.push_back(e.first.key());
    touched_keys_.push_back(e.second.key());
  }
}

bool Obstacles::removed(const SP& u) const { return has(removed_keys_, u.key()); }

bool Obstacles::touched(const SP& u) const { return has(touched_keys_, u.key()); }

bool Obstacles::faulty(const SP& u, const SP& v) const {
  const auto k = edge_key(u, v);
  return std::find(edge_keys_.begin(), edge_keys_.end(), k) != edge_keys_.end();
}

bool Obstacles::usable(const SP& u, const SP& v) const {
  return !removed(u) && !removed(v) && !faulty(u, v);
}

int Obstacles::removed_in(int i) const {
  int c = 0;
  for (const auto& p : pairs) c += (sub(p.first) == i) + (sub(p.second) == i);
  for (const auto& u : orphans) c += sub(u) == i;
  return c;
}

int Obstacles::count_in(int i) const {
  auto inside = [i](const VertexPair& p) { return sub(p.first) == i && sub(p.second) == i; };
  return static_cast<int>(std::count_if(pairs.begin(), pairs.end(), inside) +
                          std::count_if(edges.begin(), edges.end(), inside));
}

std::vector<SP> Obstacles::dead_ends(int m, int i) const {
  std::vector<SP> seeds;
  auto grow = [&](const SP& x) {
    if (sub(x) != i) return;
    seeds.push_back(x);
    for (int k = 1; k < m; ++k) seeds.push_back(prefix_reversal(x, k));
  };
  for (const auto& p : pairs) {
    grow(p.first);
    grow(p.second);
  }
  for (const auto& x : orphans) grow(x);
  for (const auto& e : edges) {
    grow(e.first);
    grow(e.second);
  }
  std::sort(seeds.begin(), seeds.end());
  seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
  std::vector<SP> out;
  for (const auto& x : seeds) {
    if (removed(x)) continue;
    int d = 0;
    for (int k = 1; k < m; ++k) d += usable(x, prefix_reversal(x, k));
    if (d < 2) out.push_back(x);
  }
  return out;
}

Obstacles Obstacles::restrict_embed(int i) const {
  Obstacles o;
  for (const auto& p : pairs) {
    const bool a = sub(p.first) == i;
    const bool b = sub(p.second) == i;
    if (a && b) {
      o.pairs.emplace_back(subgraph_embed(p.first), subgraph_embed(p.second));
    } else if (a) {
      o.orphans.push_back(subgraph_embed(p.first));
    } else if (b) {
      o.orphans.push_back(subgraph_embed(p.second));
    }
  }
  for (const auto& u : orphans) {
    if (sub(u) == i) o.orphans.push_back(subgraph_embed(u));
  }
  for (const auto& e : edges) {
    if (sub(e.first) == i && sub(e.second) == i) {
      o.edges.emplace_back(subgraph_embed(e.first), subgraph_embed(e.second));
    }
  }
  o.finalize();
  return o;
}

Obstacles Obstacles::without_pair(std::size_t idx) const {
  Obstacles o = *this;
  o.pairs.erase(o.pairs.begin() + static_cast<std::ptrdiff_t>(idx));
  o.finalize();
  return o;
}

Obstacles Obstacles::without_edge(std::size_t idx) const {
  Obstacles o = *this;
  o.edges.erase(o.edges.begin() + static_cast<std::ptrdiff_t>(idx));
  o.finalize();
  return o;
}

std::string Obstacles::describe() const {
  std::string s = "pairs=" + std::to_string(pairs.size()) +
                  " edges=" + std::to_string(edges.size());
  if (!orphans.empty()) s += " orphans=" + std::to_string(orphans.size());
  return s;
}

Positions::Positions(const Path& seq) {
  pos_.reserve(seq.size() * 2);
  for (std::size_t i = 0; i < seq.size(); ++i) pos_.emplace(seq[i].key(), static_cast<int>(i));
}

int Positions::at(const SP& u) const {
  const auto it = pos_.find(u.key());
  return it == pos_.end() ? -1 : it->second;
}

const SP& CycleView::succ(const SP& u) const {
  const int i = pos_.at(u);
  return c_[static_cast<std::size_t>((i + 1) % size())];
}

const SP& CycleView::pred(const SP& u) const {
  const int i = pos_.at(u);
  return c_[static_cast<std::size_t>((i + size() - 1) % size())];
}

std::vector<SP> CycleView::nbrs(const SP& u) const {
  std::vector<SP> out{pred(u), succ(u)};
  std::sort(out.begin(), out.end());
  return out;
}

Path CycleView::walk(const SP& from, const SP& to, int dir) const {
  Path out;
  int i = pos_.at(from);
  const int end = pos_.at(to);
  for (;;) {
    out.push_back(c_[static_cast<std::size_t>(i)]);
    if (i == end) break;
    i = (i + dir + size()) % size();
  }
  return out;
}

Path CycleView::open_at(const SP& from, const SP& adj) const {
  return walk(from, adj, succ(from) == adj ? -1 : +1);
}

int sub(const SP& u) { return u.last(); }

SP nb(const SP& u) { return out_neighbor(u); }

void append(Path& out, const Path& piece) { out.insert(out.end(), piece.begin(), piece.end()); }

Path reversed(Path p) {
  std::reverse(p.begin(), p.end());
  return p;
}

std::vector<int> minus(const std::vector<int>& set, std::initializer_list<int> drop) {
  std::vector<int> out;
  for (int i : set) {
    if (std::find(drop.begin(), drop.end(), i) == drop.end()) out.push_back(i);
  }
  return out;
}

bool contains(const std::vector<int>& set, int i) {
  return std::find(set.begin(), set.end(), i) != set.end();
}

std::string vtext(const SP& u) { return to_string(u); }

}  // namespace bpham::detail
