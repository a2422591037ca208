#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "arr/arrangement.hpp"

namespace arr {

// One step of a closure run: hyperplane `added` joined the set because it
// contains the intersection of hyperplanes `gen_i` and `gen_j`.
struct LcTraceStep {
  int added = 0;
  int gen_i = 0;
  int gen_j = 0;

  friend bool operator==(const LcTraceStep& a, const LcTraceStep& b) {
    return a.added == b.added && a.gen_i == b.gen_i && a.gen_j == b.gen_j;
  }
  friend bool operator!=(const LcTraceStep& a, const LcTraceStep& b) { return !(a == b); }
};

// Witness that `basis` is an lc-basis: rank(A) independent hyperplanes whose
// line closure is all of A. Replaying `trace` from `basis` rebuilds A.
struct LcCertificate {
  IndexSet basis;
  std::vector<LcTraceStep> trace;
};

// Line-closure context for one arrangement. Caches, per pair of hyperplanes
// H_i, H_j, the localization A_{H_i cap H_j} as a sorted index list.
class LineClosure {
 public:
  explicit LineClosure(const Arrangement& a);

  const Arrangement& arrangement() const { return a_; }

  // Indices of all hyperplanes containing H_i cap H_j (always includes i, j).
  const std::vector<int>& pair_members(int i, int j) const;

  // Least line-closed superset of b: repeatedly adjoin A_{H cap H'} for all
  // pairs H, H' in the set until stable. Scans pairs in ascending order and
  // picks up additions immediately, so the optional trace is deterministic.
  IndexSet lc(const IndexSet& b, std::vector<LcTraceStep>* trace = nullptr) const;

  // True iff b consists of rank(A) independent hyperplanes with lc(b) = A;
  // certificate carries the closure trace on success.
  std::pair<bool, std::optional<LcCertificate>> verify(const IndexSet& b) const;

 private:
  Arrangement a_;
  std::vector<std::vector<int>> pairs_;  // flattened upper triangle, i < j
};

IndexSet lc(const Arrangement& a, const IndexSet& b);
std::pair<bool, std::optional<LcCertificate>> verify_lc_basis(const Arrangement& a,
                                                              const IndexSet& b);

// First (in lexicographic order of index sets) independent rank(A)-subset
// whose line closure is all of A, or nullopt when none exists. Partial sets
// are dropped as soon as they become dependent.
std::optional<LcCertificate> find_lc_basis(const Arrangement& a);

enum class LineClosedStatus { yes, no, exceeded };

struct LineClosedReport {
  LineClosedStatus status = LineClosedStatus::exceeded;
  // A line-closed subset that is not closed (status == no only).
  std::optional<IndexSet> witness;
};

// Decides whether every line-closed subset of A is closed, enumerating the
// line-closed sets in lectic order (next-closure). Arrangements with more
// than `cap` hyperplanes report exceeded instead of enumerating.
LineClosedReport is_line_closed_arrangement(const Arrangement& a, int cap = 16);

}  // namespace arr
