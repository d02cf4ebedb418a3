#include "bpham/fault_model.hpp"

#include <algorithm>

namespace bpham {

namespace {

std::string text(const VertexPair& p) {
  return "{" + to_string(p.first) + " | " + to_string(p.second) + "}";
}

bool valid_vertex(const SignedPermutation& u, int n) {
  return u.size() == n && is_valid_signed_permutation(u.to_vector());
}

VertexPair ordered(const VertexPair& p) {
  return to_string(p.first) <= to_string(p.second) ? p : VertexPair{p.second, p.first};
}

}  // namespace

bool ValidationReport::structurally_valid() const {
  return std::all_of(violations.begin(), violations.end(),
                     [](const Violation& v) { return v.kind == "budget exceeded"; });
}

ValidationReport validate(const FaultSet& faults, int bound) {
  ValidationReport report;
  report.size = faults.size();
  auto add = [&](std::string kind, std::string detail) {
    report.violations.push_back({std::move(kind), std::move(detail)});
  };
  const int n = faults.n;
  if (n < 1 || n > SignedPermutation::kMaxDim) add("invalid dimension", std::to_string(n));

  std::set<SignedPermutation> matched;
  std::set<Edge> matching_edges;
  for (const auto& p : faults.matching_pairs) {
    if (!valid_vertex(p.first, n) || !valid_vertex(p.second, n)) {
      add("invalid vertex", text(p));
      continue;
    }
    if (!adjacent(p.first, p.second)) {
      add("not an edge", text(p));
      continue;
    }
    if (!matched.insert(p.first).second || !matched.insert(p.second).second) {
      add("not a matching", text(p));
    }
    matching_edges.insert(make_edge(p.first, p.second));
  }

  std::set<Edge> seen;
  for (const auto& e : faults.faulty_edges) {
    if (!valid_vertex(e.first, n) || !valid_vertex(e.second, n)) {
      add("invalid vertex", text(e));
      continue;
    }
    if (!adjacent(e.first, e.second)) {
      add("not an edge", text(e));
      continue;
    }
    const Edge edge = make_edge(e.first, e.second);
    if (matching_edges.count(edge)) {
      add("edge equals matching edge", text(e));
    } else if (matched.count(e.first) || matched.count(e.second)) {
      add("edge touches matched vertex", text(e));
    }
    if (!seen.insert(edge).second) add("duplicate edge", text(e));
  }

  if (report.size > bound) {
    report.within_bound = false;
    add("budget exceeded", std::to_string(report.size) + " > " + std::to_string(bound));
  }
  report.ok = report.violations.empty();
  return report;
}

FaultVertices fault_vertices(const FaultSet& faults) {
  FaultVertices out;
  for (const auto& p : faults.matching_pairs) {
    out.matched.insert(p.first);
    out.matched.insert(p.second);
  }
  out.all = out.matched;
  for (const auto& e : faults.faulty_edges) {
    out.all.insert(e.first);
    out.all.insert(e.second);
  }
  return out;
}

FaultRestriction restrict_to(const FaultSet& faults, int i) {
  FaultRestriction r;
  r.index = i;
  auto inside = [&](const VertexPair& p) {
    return last_symbol(p.first) == i && last_symbol(p.second) == i;
  };
  for (const auto& p : faults.matching_pairs) {
    if (inside(p)) r.matching_pairs.push_back(p);
  }
  for (const auto& e : faults.faulty_edges) {
    if (inside(e)) r.faulty_edges.push_back(e);
  }
  return r;
}

FaultRestriction straddling(const FaultSet& faults) {
  FaultRestriction r;
  auto crosses = [](const VertexPair& p) { return last_symbol(p.first) != last_symbol(p.second); };
  for (const auto& p : faults.matching_pairs) {
    if (crosses(p)) r.matching_pairs.push_back(p);
  }
  for (const auto& e : faults.faulty_edges) {
    if (crosses(e)) r.faulty_edges.push_back(e);
  }
  return r;
}

FaultSet canonicalize(FaultSet faults) {
  auto sort_part = [](std::vector<VertexPair>& part) {
    for (auto& p : part) p = ordered(p);
    std::sort(part.begin(), part.end(), [](const VertexPair& a, const VertexPair& b) {
      return std::pair(to_string(a.first), to_string(a.second)) <
             std::pair(to_string(b.first), to_string(b.second));
    });
  };
  sort_part(faults.matching_pairs);
  sort_part(faults.faulty_edges);
  return faults;
}

}  // namespace bpham
