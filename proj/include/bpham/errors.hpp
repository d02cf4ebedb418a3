#pragma once

#include <stdexcept>
#include <string>

#include "bpham/trace.hpp"

namespace bpham {

// Argument outside an operation's mathematical domain.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Precondition of a construction violated by the caller.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Request exceeds what an exhaustive routine is allowed to attempt.
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NoOrdering : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A prescribed candidate scan came up empty.
class StrictModeFailure : public std::runtime_error {
 public:
  StrictModeFailure(const std::string& what, CaseTrace trace)
      : std::runtime_error(what), trace_(std::move(trace)) {}
  const CaseTrace& trace() const { return trace_; }

 private:
  CaseTrace trace_;
};

class NoUsableEdge : public StrictModeFailure {
 public:
  using StrictModeFailure::StrictModeFailure;
};

// Invariant the case dispatch should make unreachable (budget overrun,
// splice into one out-subgraph, wrong output length).
class InternalError : public std::logic_error {
 public:
  InternalError(const std::string& what, CaseTrace trace)
      : std::logic_error(what), trace_(std::move(trace)) {}
  const CaseTrace& trace() const { return trace_; }

 private:
  CaseTrace trace_;
};

}  // namespace bpham
