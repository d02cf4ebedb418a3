#include "io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "bpham/errors.hpp"

namespace bpham::cli {

json vertex_json(const SignedPermutation& u) { return u.to_vector(); }

SignedPermutation vertex_from_json(const json& j) {
  if (!j.is_array()) throw InputError("vertex must be an array of signed integers");
  std::vector<int> symbols;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw InputError("vertex symbols must be integers");
    symbols.push_back(x.get<int>());
  }
  try {
    return SignedPermutation(std::span<const int>(symbols));
  } catch (const DomainError& e) {
    throw InputError(std::string("bad vertex: ") + e.what());
  }
}

namespace {

json pairs_json(const std::vector<VertexPair>& pairs) {
  json out = json::array();
  for (const auto& [a, b] : pairs) out.push_back(json::array({vertex_json(a), vertex_json(b)}));
  return out;
}

std::vector<VertexPair> pairs_from_json(const json& j, const char* field) {
  std::vector<VertexPair> out;
  if (!j.contains(field)) return out;
  const auto& arr = j.at(field);
  if (!arr.is_array()) throw InputError(std::string(field) + " must be an array");
  for (const auto& p : arr) {
    if (!p.is_array() || p.size() != 2) throw InputError(std::string(field) + " entries are pairs");
    out.emplace_back(vertex_from_json(p[0]), vertex_from_json(p[1]));
  }
  return out;
}

}  // namespace

json faults_json(const FaultSet& faults) {
  return json{{"n", faults.n},
              {"matching_pairs", pairs_json(faults.matching_pairs)},
              {"faulty_edges", pairs_json(faults.faulty_edges)}};
}

FaultSet faults_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.at("n").is_number_integer()) {
    throw InputError("fault file needs an integer field n");
  }
  FaultSet f;
  f.n = j.at("n").get<int>();
  f.matching_pairs = pairs_from_json(j, "matching_pairs");
  f.faulty_edges = pairs_from_json(j, "faulty_edges");
  return f;
}

json trace_json(const CaseTrace& trace) {
  json out = json::array();
  for (const auto& r : trace.records()) {
    out.push_back(json{{"label", r.label}, {"depth", r.depth}, {"detail", r.detail}});
  }
  return out;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

FaultSet load_faults(const std::string& path) { return faults_from_json(read_json_file(path)); }

void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

}  // namespace bpham::cli
