#include "arr/line_closure.hpp"

#include <stdexcept>

#include "arr/errors.hpp"
#include "arr/lattice.hpp"

namespace arr {

LineClosure::LineClosure(const Arrangement& a) : a_(a) {
  int n = a_.size();
  pairs_.resize(static_cast<std::size_t>(n) * n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      Subspace line_span = Subspace::span_rows(Mat::from_rows({a_.normal(i), a_.normal(j)}));
      std::vector<int> members;
      for (int k = 1; k <= n; ++k)
        if (line_span.contains(a_.normal(k))) members.push_back(k);
      pairs_[static_cast<std::size_t>(i - 1) * n + (j - 1)] = std::move(members);
    }
  }
}

const std::vector<int>& LineClosure::pair_members(int i, int j) const {
  int n = a_.size();
  if (i < 1 || j < 1 || i > n || j > n || i == j)
    throw std::invalid_argument("invalid hyperplane pair");
  if (i > j) std::swap(i, j);
  return pairs_[static_cast<std::size_t>(i - 1) * n + (j - 1)];
}

IndexSet LineClosure::lc(const IndexSet& b, std::vector<LcTraceStep>* trace) const {
  int n = a_.size();
  if (b.cap() != n) throw std::invalid_argument("index set does not match the arrangement");
  IndexSet s = b;
  bool changed = true;
  while (changed) {
    changed = false;
    // Live scan: hyperplanes adjoined at an index above the current position
    // are paired up later in this same sweep, the rest in the next one.
    for (int i = 1; i <= n; ++i) {
      if (!s.test(i)) continue;
      for (int j = i + 1; j <= n; ++j) {
        if (!s.test(j)) continue;
        for (int k : pair_members(i, j)) {
          if (s.test(k)) continue;
          s.add(k);
          changed = true;
          if (trace) trace->push_back({k, i, j});
        }
      }
    }
  }
  return s;
}

std::pair<bool, std::optional<LcCertificate>> LineClosure::verify(const IndexSet& b) const {
  int n = a_.size();
  if (b.cap() != n) throw std::invalid_argument("index set does not match the arrangement");
  int r = a_.rank();
  if (b.count() != r) return {false, std::nullopt};
  std::vector<Vec> rows;
  for (int i : b.to_vector()) rows.push_back(a_.normal(i));
  if (rank_of(Mat::from_rows(rows)) != r) return {false, std::nullopt};
  std::vector<LcTraceStep> trace;
  if (lc(b, &trace) != a_.full_set()) return {false, std::nullopt};
  return {true, LcCertificate{b, std::move(trace)}};
}

IndexSet lc(const Arrangement& a, const IndexSet& b) { return LineClosure(a).lc(b); }

std::pair<bool, std::optional<LcCertificate>> verify_lc_basis(const Arrangement& a,
                                                              const IndexSet& b) {
  return LineClosure(a).verify(b);
}

namespace {

// Depth-first extension by ascending index, so complete candidates appear in
// lexicographic order of their index sets; dependent partial sets are cut.
bool find_basis_rec(const LineClosure& ctx, std::vector<int>& chosen, std::vector<Vec>& rows,
                    int next, std::optional<LcCertificate>& out) {
  const Arrangement& a = ctx.arrangement();
  int r = a.rank();
  if (static_cast<int>(chosen.size()) == r) {
    IndexSet b = IndexSet::of(a.size(), chosen);
    std::vector<LcTraceStep> trace;
    if (ctx.lc(b, &trace) == a.full_set()) {
      out = LcCertificate{b, std::move(trace)};
      return true;
    }
    return false;
  }
  int need = r - static_cast<int>(chosen.size());
  for (int k = next; k <= a.size() - need + 1; ++k) {
    rows.push_back(a.normal(k));
    if (rank_of(Mat::from_rows(rows)) == static_cast<int>(rows.size())) {
      chosen.push_back(k);
      if (find_basis_rec(ctx, chosen, rows, k + 1, out)) return true;
      chosen.pop_back();
    }
    rows.pop_back();
  }
  return false;
}

}  // namespace

std::optional<LcCertificate> find_lc_basis(const Arrangement& a) {
  LineClosure ctx(a);
  if (a.rank() == 0) {
    // Only the empty arrangement has rank 0; the empty set is its lc-basis.
    if (a.size() == 0) return LcCertificate{IndexSet(0), {}};
    return std::nullopt;
  }
  std::vector<int> chosen;
  std::vector<Vec> rows;
  std::optional<LcCertificate> out;
  find_basis_rec(ctx, chosen, rows, 1, out);
  return out;
}

LineClosedReport is_line_closed_arrangement(const Arrangement& a, int cap) {
  int n = a.size();
  if (n > cap) return {LineClosedStatus::exceeded, std::nullopt};
  LineClosure ctx(a);

  auto closed_in_lattice = [&](const IndexSet& s) { return closure(a, s).hyps == s; };

  // Next-closure: walk all lc-closed sets in lectic order. For the current
  // set s the successor is lc((s restricted below i) + i) for the largest i
  // not in s whose closure adds nothing below i.
  IndexSet s = ctx.lc(IndexSet(n));
  while (true) {
    if (!closed_in_lattice(s)) return {LineClosedStatus::no, s};
    if (s == a.full_set()) break;
    bool advanced = false;
    for (int i = n; i >= 1; --i) {
      if (s.test(i)) continue;
      IndexSet probe(n);
      for (int x : s.to_vector()) {
        if (x >= i) break;
        probe.add(x);
      }
      probe.add(i);
      IndexSet nxt = ctx.lc(probe);
      bool lectic = true;
      for (int x : nxt.to_vector()) {
        if (x >= i) break;
        if (!s.test(x)) {
          lectic = false;
          break;
        }
      }
      if (lectic) {
        s = nxt;
        advanced = true;
        break;
      }
    }
    internal_check(advanced, "next-closure must reach the full set");
  }
  return {LineClosedStatus::yes, std::nullopt};
}

}  // namespace arr
