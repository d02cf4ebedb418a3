#include "bpham/trace.hpp"

#include <algorithm>

namespace bpham {

void CaseTrace::add(std::string label, int depth, std::string detail) {
  records_.push_back({std::move(label), depth, std::move(detail)});
}

std::map<std::string, int> CaseTrace::histogram() const {
  std::map<std::string, int> h;
  for (const auto& r : records_) ++h[r.label];
  return h;
}

bool CaseTrace::has_label(const std::string& label) const {
  return std::any_of(records_.begin(), records_.end(),
                     [&](const TraceRecord& r) { return r.label == label; });
}

std::vector<TraceRecord> CaseTrace::leaves() const {
  std::vector<TraceRecord> out;
  for (std::size_t i = 0; i < records_.size(); ++i) {
    const bool has_child = i + 1 < records_.size() && records_[i + 1].depth > records_[i].depth;
    if (!has_child) out.push_back(records_[i]);
  }
  return out;
}

}  // namespace bpham
