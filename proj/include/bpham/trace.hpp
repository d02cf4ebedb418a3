#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace bpham {

struct TraceRecord {
  std::string label;   // e.g. "L18/3.2.2.2", "L17", "BP3/fixture"
  int depth = 0;       // nesting depth in the case tree
  std::string detail;  // chosen pivots, ordering, ...

  friend bool operator==(const TraceRecord&, const TraceRecord&) = default;
};

// Pre-order flattening of the case tree: a record's children are the
// following records with larger depth.
class CaseTrace {
 public:
  void add(std::string label, int depth, std::string detail = {});

  const std::vector<TraceRecord>& records() const { return records_; }
  bool empty() const { return records_.empty(); }
  std::size_t size() const { return records_.size(); }

  // Discard everything recorded after a checkpoint (failed candidate).
  std::size_t checkpoint() const { return records_.size(); }
  void rollback(std::size_t mark) { records_.resize(mark); }

  std::map<std::string, int> histogram() const;
  bool has_label(const std::string& label) const;

  // Records with no child.
  std::vector<TraceRecord> leaves() const;

  friend bool operator==(const CaseTrace&, const CaseTrace&) = default;

 private:
  std::vector<TraceRecord> records_;
};

}  // namespace bpham
