#include <algorithm>
#include <cstdlib>
#include <set>

#include "bpham/constructor.hpp"
#include "bpham/errors.hpp"

namespace bpham {

namespace {

bool canonical_less(int a, int b) {
  if (std::abs(a) != std::abs(b)) return std::abs(a) < std::abs(b);
  return a > b;
}

bool extend(std::vector<int>& seq, std::vector<int>& rest, std::vector<bool>& used, int last) {
  if (seq.size() == rest.size() + 1) {
    if (seq.back() == -last) return false;
    seq.push_back(last);
    return true;
  }
  for (std::size_t i = 0; i < rest.size(); ++i) {
    if (used[i] || rest[i] == -seq.back()) continue;
    used[i] = true;
    seq.push_back(rest[i]);
    if (extend(seq, rest, used, last)) return true;
    seq.pop_back();
    used[i] = false;
  }
  return false;
}

}  // namespace

bool is_valid_ordering(const SubgraphOrdering& ordering, std::span<const int> index_set,
                       int first, int last) {
  const auto& k = ordering.indices;
  if (k.size() != index_set.size() || k.empty()) return false;
  if (k.front() != first || k.back() != last) return false;
  if (std::multiset<int>(k.begin(), k.end()) !=
      std::multiset<int>(index_set.begin(), index_set.end())) {
    return false;
  }
  for (std::size_t j = 0; j + 1 < k.size(); ++j) {
    if (k[j] == -k[j + 1]) return false;
  }
  return true;
}

SubgraphOrdering order_subgraphs(std::span<const int> index_set, int first, int last) {
  const std::set<int> set(index_set.begin(), index_set.end());
  if (set.size() != index_set.size()) throw UsageError("order_subgraphs: repeated index");
  if (set.size() < 2) throw UsageError("order_subgraphs: need at least two indices");
  if (set.count(0)) throw UsageError("order_subgraphs: zero is not a subgraph index");
  if (!set.count(first) || !set.count(last)) throw UsageError("order_subgraphs: ends not in I");
  if (first == last) throw UsageError("order_subgraphs: first == last");

  std::vector<int> rest;
  for (int i : set) {
    if (i != first && i != last) rest.push_back(i);
  }
  std::sort(rest.begin(), rest.end(), canonical_less);
  std::vector<int> seq{first};
  std::vector<bool> used(rest.size(), false);
  if (!extend(seq, rest, used, last)) throw NoOrdering("no valid subgraph ordering");
  return SubgraphOrdering{seq};
}

}  // namespace bpham
