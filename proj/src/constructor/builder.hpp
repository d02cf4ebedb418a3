#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bpham/bp_graph.hpp"
#include "bpham/constructor.hpp"
#include "bpham/fault_model.hpp"
#include "bpham/signed_perm.hpp"
#include "bpham/trace.hpp"

namespace bpham::detail {

using SP = SignedPermutation;
using Path = std::vector<SP>;

// A candidate scan or sub-construction came up empty.
class Stuck : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Everything that has to be avoided inside one BP_m at some recursion level,
// in that level's local coordinates. Orphans are single deleted vertices
// left behind by pairs that straddle a higher-level cut.
class Obstacles {
 public:
  std::vector<VertexPair> pairs;
  std::vector<SP> orphans;
  std::vector<VertexPair> edges;

  static Obstacles from(const FaultSet& faults);

  // Rebuilds the lookup keys; call after editing the lists.
  void finalize();

  bool removed(const SP& u) const;
  bool faulty(const SP& u, const SP& v) const;
  // V(F) at this level: deleted vertices and faulty-edge endpoints.
  bool touched(const SP& u) const;
  // An out-edge usable as a splice: both ends present, edge not faulty.
  bool usable(const SP& u, const SP& v) const;

  bool empty() const { return pairs.empty() && orphans.empty() && edges.empty(); }
  int removed_count() const { return static_cast<int>(2 * pairs.size() + orphans.size()); }
  int removed_in(int i) const;
  // Pairs and edges lying inside subgraph i.
  int count_in(int i) const;

  // Present vertices of subgraph i (of BP_m) with fewer than two usable
  // edges inside it; a path through the subgraph must end at each of them.
  std::vector<SP> dead_ends(int m, int i) const;

  Obstacles restrict_embed(int i) const;
  Obstacles without_pair(std::size_t idx) const;
  Obstacles without_edge(std::size_t idx) const;

  std::string describe() const;

 private:
  std::vector<std::uint64_t> removed_keys_;
  std::vector<std::uint64_t> touched_keys_;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edge_keys_;
};

// Position lookup over a vertex sequence.
class Positions {
 public:
  explicit Positions(const Path& seq);
  int at(const SP& u) const;  // -1 when absent
 private:
  std::unordered_map<std::uint64_t, int> pos_;
};

class CycleView {
 public:
  explicit CycleView(const Path& cycle) : c_(cycle), pos_(cycle) {}
  int size() const { return static_cast<int>(c_.size()); }
  bool contains(const SP& u) const { return pos_.at(u) >= 0; }
  const SP& succ(const SP& u) const;
  const SP& pred(const SP& u) const;
  // Both cycle neighbours, lexicographically ordered.
  std::vector<SP> nbrs(const SP& u) const;
  // from, then stepping by dir (+1/-1) up to and including to.
  Path walk(const SP& from, const SP& to, int dir) const;
  // The cycle minus edge {from, adj} as a path from `from` to `adj`.
  Path open_at(const SP& from, const SP& adj) const;

 private:
  const Path& c_;
  Positions pos_;
};

// Small exhaustive search for BP_m, m <= 4, with obstacles removed.
std::optional<Path> search_cycle(int m, const Obstacles& obs, std::int64_t node_budget);
std::optional<Path> search_path(int m, const SP& u, const SP& v, const Obstacles& obs,
                                std::int64_t node_budget);
// Two disjoint paths u..x and y..v covering BP_m - obs, with x and y drawn
// from `exits` (x == u or y == v allowed).
std::optional<std::pair<Path, Path>> search_split(int m, const SP& u, const SP& v,
                                                  const Obstacles& obs,
                                                  const std::vector<SP>& exits,
                                                  std::int64_t node_budget);

int sub(const SP& u);
SP nb(const SP& u);
void append(Path& out, const Path& piece);
Path reversed(Path p);
std::vector<int> minus(const std::vector<int>& set, std::initializer_list<int> drop);
bool contains(const std::vector<int>& set, int i);
std::string vtext(const SP& u);

class Builder {
 public:
  explicit Builder(bool fallback) : fallback_(fallback) {}

  Path cycle(int m, const Obstacles& obs);
  Path path(int m, const SP& u, const SP& v, const Obstacles& obs);
  Path chain(int m, const std::vector<int>& set, const SP& u, const SP& v, const Obstacles& obs);
  Path loop(int m, const std::vector<int>& set, const SP& u, const SP& v, const Obstacles& obs);

  Path leaf_cycle(const Obstacles& obs);
  Path leaf_path(const SP& u, const SP& v, const Obstacles& obs);

  CaseTrace& trace() { return trace_; }
  int fallbacks() const { return fallbacks_; }
  // Whole-graph search when n <= 4 (last resort in fallback mode).
  Path fallback_cycle(int m, const Obstacles& obs);
  Path fallback_path(int m, const SP& u, const SP& v, const Obstacles& obs);

 private:
  class Scope {
   public:
    Scope(Builder& b, std::string label, std::string detail);
    ~Scope() { --b_.depth_; }
    Scope(const Scope&) = delete;
    Scope& operator=(const Scope&) = delete;

   private:
    Builder& b_;
  };

  // Runs fn; on Stuck restores the trace and reports failure.
  template <class Fn>
  bool attempt(Fn&& fn) {
    const std::size_t mark = trace_.checkpoint();
    const int depth = depth_;
    try {
      fn();
      return true;
    } catch (const Stuck&) {
      trace_.rollback(mark);
      depth_ = depth;
      return false;
    }
  }

  // Lifts the recursive budget checks while a relay covers BP_4.
  class Relaxed {
   public:
    explicit Relaxed(Builder& b) : b_(b), was_(b.relaxed_) { b_.relaxed_ = true; }
    ~Relaxed() { b_.relaxed_ = was_; }
    Relaxed(const Relaxed&) = delete;
    Relaxed& operator=(const Relaxed&) = delete;

   private:
    Builder& b_;
    bool was_;
  };

  [[noreturn]] void internal(const std::string& what) const;
  void assert_distinct(int a, int b, const char* where) const;

  Path sub_cycle(int m, int i, const Obstacles& obs);
  Path sub_path(int m, int i, const SP& a, const SP& b, const Obstacles& obs);
  // chain when the ends lie in different subgraphs, loop otherwise.
  Path ext(int m, const std::vector<int>& set, const SP& a, const SP& b, const Obstacles& obs);

  bool chain_step(int m, const std::vector<int>& order, std::size_t j, const SP& entry,
                  const SP& v, const Obstacles& obs, std::vector<Path>& pieces, int& budget);

  Path dispatch_cycle(int m, const Obstacles& obs);
  // BP_4 with single removed vertices: every subgraph crossed by a path.
  Path relay_cycle(const Obstacles& obs);
  Path relay_path(const SP& u, const SP& v, const Obstacles& obs);

  // Cycle cases.
  Path cycle_case1(int m, int h, const Obstacles& obs);
  Path cycle_case2(int m, int h, const Obstacles& obs);
  Path cycle_case3(int m, int h, const Obstacles& obs);
  Path cycle_case3_edges(int m, int h, const Obstacles& obs);
  Path cycle_case3_pair(int m, int h, const Obstacles& obs, const Path& c1, const SP& a1,
                        const SP& b1);
  Path cycle_case32(int m, int h, const Obstacles& obs, SP x1, SP x2, SP y1, SP y2, Path a,
                    Path b);

  // Path cases.
  Path path_case1(int m, const SP& u, const SP& v, const Obstacles& obs);
  Path path_case2(int m, int h, const SP& u, const SP& v, const Obstacles& obs);

  CaseTrace trace_;
  int depth_ = 0;
  bool fallback_ = false;
  bool relaxed_ = false;
  int fallbacks_ = 0;
};

// Scan limits: candidates actually recursed into per selection step.
inline constexpr int kScanAttempts = 16;
inline constexpr std::int64_t kLeafBudget = 200'000;
inline constexpr std::int64_t kFallbackBudget = 20'000'000;

}  // namespace bpham::detail
