#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "bpham/fault_model.hpp"
#include "bpham/signed_perm.hpp"
#include "bpham/trace.hpp"

namespace bpham::cli {

using json = nlohmann::ordered_json;

// Malformed file or argument (exit code 2).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json vertex_json(const SignedPermutation& u);
SignedPermutation vertex_from_json(const json& j);

// {"n": int, "matching_pairs": [[v, v], ...], "faulty_edges": [[v, v], ...]}
json faults_json(const FaultSet& faults);
FaultSet faults_from_json(const json& j);

json trace_json(const CaseTrace& trace);

json read_json_file(const std::string& path);
FaultSet load_faults(const std::string& path);

// Writes to the file, or to stdout when path is empty.
void emit(const std::string& path, const std::string& text);

}  // namespace bpham::cli
