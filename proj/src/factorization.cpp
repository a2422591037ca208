#include "arr/factorization.hpp"

#include <algorithm>
#include <stdexcept>

#include "arr/errors.hpp"
#include "arr/line_closure.hpp"

namespace arr {

std::string Partition::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) s += ",";
    s += blocks[i].str();
  }
  return s + ")";
}

namespace {

void validate_partition(const Arrangement& a, const Partition& p) {
  int n = a.size();
  IndexSet seen(n);
  for (const IndexSet& b : p.blocks) {
    if (b.cap() != n)
      throw std::invalid_argument("partition block does not match the arrangement");
    if (b.empty()) throw std::invalid_argument("partition has an empty block");
    if (!(seen & b).empty()) throw std::invalid_argument("partition blocks overlap");
    seen = seen | b;
  }
  if (seen != a.full_set())
    throw std::invalid_argument("partition blocks do not cover the arrangement");
}

// Depth-first scan of the sections, one block at a time in order, members
// ascending. A dependent prefix is completed with the first member of every
// remaining block; any completion of a dependent set stays dependent.
struct SectionScan {
  const Arrangement& a;
  std::vector<std::vector<int>> members;
  std::vector<int> chosen;
  std::vector<Vec> rows;

  std::optional<Section> dependent(std::size_t bi) {
    if (bi == members.size()) return std::nullopt;
    for (int h : members[bi]) {
      chosen.push_back(h);
      rows.push_back(a.normal(h));
      if (rank_of(Mat::from_rows(rows)) < static_cast<int>(rows.size())) {
        Section s{chosen};
        for (std::size_t bj = bi + 1; bj < members.size(); ++bj)
          s.hyps.push_back(members[bj].front());
        return s;
      }
      if (auto s = dependent(bi + 1)) return s;
      chosen.pop_back();
      rows.pop_back();
    }
    return std::nullopt;
  }
};

std::optional<Section> find_dependent_section(const Arrangement& a,
                                              const std::vector<IndexSet>& blocks) {
  SectionScan scan{a, {}, {}, {}};
  for (const IndexSet& b : blocks) scan.members.push_back(b.to_vector());
  return scan.dependent(0);
}

std::optional<IndexSet> find_flat_without_singleton(const IntersectionLattice& l,
                                                    const std::vector<IndexSet>& blocks) {
  for (int id = 1; id < l.size(); ++id) {
    const IndexSet& hyps = l.flat(id).hyps;
    bool has_singleton = false;
    for (const IndexSet& b : blocks)
      if ((b & hyps).count() == 1) {
        has_singleton = true;
        break;
      }
    if (!has_singleton) return hyps;
  }
  return std::nullopt;
}

}  // namespace

std::pair<bool, std::optional<FactorizationFailure>> is_factorization(
    const IntersectionLattice& l, const Partition& p) {
  const Arrangement& a = l.arrangement();
  validate_partition(a, p);
  if (auto dep = find_dependent_section(a, p.blocks))
    return {false, FactorizationFailure{std::move(dep), std::nullopt}};
  if (auto flat = find_flat_without_singleton(l, p.blocks))
    return {false, FactorizationFailure{std::nullopt, std::move(flat)}};
  return {true, std::nullopt};
}

std::pair<bool, std::optional<FactorizationFailure>> is_factorization(const Arrangement& a,
                                                                      const Partition& p) {
  return is_factorization(build_lattice(a), p);
}

namespace {

struct FactorSearch {
  const IntersectionLattice& l;
  const Arrangement& a;
  int n, r;
  std::vector<std::vector<int>> flats_by_max;  // non-bottom flat ids, keyed by largest member
  std::vector<int> assign;                     // hyperplane -> 1-based block, 0 unassigned
  std::vector<std::vector<int>> blocks;

  FactorSearch(const IntersectionLattice& lat)
      : l(lat), a(lat.arrangement()), n(a.size()), r(a.rank()), flats_by_max(n + 1),
        assign(n + 1, 0) {
    for (int id = 1; id < l.size(); ++id)
      flats_by_max[l.flat(id).hyps.to_vector().back()].push_back(id);
  }

  // Every section through the newly assigned hyperplane h must stay
  // independent; the sections avoiding h were checked at earlier depths.
  bool sections_through_ok(int h) {
    std::vector<Vec> rows{a.normal(h)};
    return section_walk(0, assign[h] - 1, rows);
  }
  bool section_walk(std::size_t bi, std::size_t skip, std::vector<Vec>& rows) {
    if (bi == blocks.size()) return true;
    if (bi == skip) return section_walk(bi + 1, skip, rows);
    for (int m : blocks[bi]) {
      rows.push_back(a.normal(m));
      bool bad = rank_of(Mat::from_rows(rows)) < static_cast<int>(rows.size()) ||
                 !section_walk(bi + 1, skip, rows);
      rows.pop_back();
      if (bad) return false;
    }
    return true;
  }

  // Flats whose members are now all assigned have their final induced
  // partition; each needs a singleton block.
  bool finished_flats_ok(int i) {
    for (int id : flats_by_max[i]) {
      const IndexSet& hyps = l.flat(id).hyps;
      bool has_singleton = false;
      for (const auto& b : blocks) {
        int c = 0;
        for (int m : b)
          if (hyps.test(m) && ++c > 1) break;
        if (c == 1) {
          has_singleton = true;
          break;
        }
      }
      if (!has_singleton) return false;
    }
    return true;
  }

  bool dfs(int i, std::optional<Partition>& found) {
    if (i > n) {
      if (static_cast<int>(blocks.size()) != r) return false;
      Partition p;
      for (const auto& b : blocks) p.blocks.push_back(IndexSet::of(n, b));
      found = std::move(p);
      return true;
    }
    int used = static_cast<int>(blocks.size());
    for (int j = 1; j <= std::min(used + 1, r); ++j) {
      int now_used = std::max(used, j);
      if (now_used + (n - i) < r) continue;  // too few hyperplanes left to open r blocks
      assign[i] = j;
      if (j > used) blocks.emplace_back();
      blocks[j - 1].push_back(i);
      if (sections_through_ok(i) && finished_flats_ok(i) && dfs(i + 1, found)) return true;
      blocks[j - 1].pop_back();
      if (j > used) blocks.pop_back();
      assign[i] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<Partition> find_factorization(const IntersectionLattice& l) {
  const Arrangement& a = l.arrangement();
  if (a.size() == 0) return Partition{};
  FactorSearch search(l);
  std::optional<Partition> found;
  search.dfs(1, found);
  if (!found) return std::nullopt;

  auto chk = is_factorization(l, *found);
  internal_check(chk.first, "factorization search returned a non-factorization");
  internal_check(static_cast<int>(found->blocks.size()) == a.rank(),
                 "a factorization must have rank(A) blocks");
  std::vector<mpz_class> prod{1};
  for (const IndexSet& b : found->blocks) {
    prod.push_back(0);
    for (std::size_t k = prod.size() - 1; k >= 1; --k) prod[k] += b.count() * prod[k - 1];
  }
  internal_check(prod == l.poincare(),
                 "a factorization must factor the Poincare polynomial");
  for (int id = 0; id < l.size(); ++id) {
    int met = 0;
    for (const IndexSet& b : found->blocks)
      if (!(b & l.flat(id).hyps).empty()) ++met;
    internal_check(met == l.flat(id).rank,
                   "every flat must meet exactly rank(X) blocks of a factorization");
  }
  return found;
}

std::optional<Partition> find_factorization(const Arrangement& a) {
  return find_factorization(build_lattice(a));
}

namespace {

// The hyperplane in the singleton block of the induced partition on the
// rank-2 flat through two block-mates h and k.
int singleton_of_pair(const LineClosure& ctx, const std::vector<int>& block_of, int h, int k) {
  internal_check(h != k && block_of[h] == block_of[k], "swap pair must share a block");
  int found = 0, hyp = 0;
  const std::vector<int>& members = ctx.pair_members(h, k);
  for (std::size_t s = 0; s < members.size(); ++s) {
    int count = 0;
    for (int m : members)
      if (block_of[m] == block_of[members[s]]) ++count;
    if (count == 1) {
      ++found;
      hyp = members[s];
    }
  }
  internal_check(found == 1 && block_of[hyp] != block_of[h],
                 "induced partition on a rank-2 flat must have one singleton");
  return hyp;
}

}  // namespace

SectionResult section_lc_basis(const Arrangement& a, const Partition& p) {
  if (!is_factorization(a, p).first)
    throw std::invalid_argument("partition is not a factorization");
  int n = a.size();
  LineClosure ctx(a);
  std::vector<int> block_of(n + 1, 0);
  std::vector<int> cur;
  for (std::size_t j = 0; j < p.blocks.size(); ++j) {
    for (int m : p.blocks[j].to_vector()) block_of[m] = static_cast<int>(j) + 1;
    cur.push_back(p.blocks[j].first());
  }
  auto as_set = [&] {
    IndexSet s(n);
    for (int h : cur) s.add(h);
    return s;
  };

  std::vector<SectionSwap> swaps;
  while (true) {
    IndexSet closed = ctx.lc(as_set());
    if (closed == a.full_set()) break;
    int h = 0;
    for (int i = 1; i <= n; ++i)
      if (!closed.test(i)) {
        h = i;
        break;
      }
    // Swap run: replace the block-mate of the current hyperplane with it,
    // then chase the singleton of the pair, until a hyperplane repeats.
    std::vector<char> visited(n + 1, 0);
    visited[h] = 1;
    int cur_h = h;
    while (true) {
      int j = block_of[cur_h];
      int out = cur[j - 1];
      if (out == cur_h) break;  // stationary: already in the section
      int next = singleton_of_pair(ctx, block_of, cur_h, out);
      swaps.push_back({cur_h, out, j, next});
      cur[j - 1] = cur_h;
      cur_h = next;
      if (visited[cur_h]) break;
      visited[cur_h] = 1;
    }
    IndexSet grown = ctx.lc(as_set());
    internal_check(grown.test(h) && closed.subset_of(grown),
                   "a swap run must grow the line closure past the target");
  }
  internal_check(ctx.verify(as_set()).first, "the final section must be an lc-basis");
  return {Section{cur}, swaps};
}

namespace {

// Blocks of p over the deleted arrangement, h0 removed; an emptied block is
// kept or dropped per keep_empty.
std::vector<IndexSet> deletion_blocks(const Partition& p, int h0, const Subarrangement& del,
                                      bool keep_empty) {
  int n_old = p.blocks.empty() ? 0 : p.blocks.front().cap();
  std::vector<int> to_del(n_old + 1, 0);
  for (std::size_t j = 0; j < del.parent.size(); ++j)
    to_del[del.parent[j]] = static_cast<int>(j) + 1;
  std::vector<IndexSet> out;
  for (const IndexSet& b : p.blocks) {
    IndexSet nb(del.arrangement.size());
    for (int m : b.to_vector())
      if (m != h0) nb.add(to_del[m]);
    if (!nb.empty() || keep_empty) out.push_back(nb);
  }
  return out;
}

}  // namespace

AdditionDeletionReport addition_deletion_check(const Arrangement& a, const Partition& p,
                                               int h0) {
  validate_partition(a, p);
  if (p.blocks.empty() || !p.blocks.front().test(h0))
    throw std::invalid_argument("h0 must lie in the first block");
  AdditionDeletionReport rep;
  rep.statement_i = is_factorization(a, p).first;
  rep.degenerate_deletion = p.blocks.front().count() == 1;

  if (!rep.degenerate_deletion) {
    Subarrangement del = deleted(a, h0);
    Partition pd{deletion_blocks(p, h0, del, false)};
    rep.statement_ii = is_factorization(del.arrangement, pd).first;
  }

  Restriction rest = restriction(a, IndexSet::of(a.size(), {h0}));
  int m = rest.arrangement.size();
  std::vector<int> hits(m + 1, 0);
  int domain = 0;
  for (int i = 1; i <= a.size(); ++i) {
    if (p.blocks.front().test(i)) continue;
    ++domain;
    ++hits[rest.trace.at(i)];
  }
  rep.rho_bijective = domain == m;
  for (int k = 1; k <= m; ++k)
    if (hits[k] != 1) rep.rho_bijective = false;
  if (rep.rho_bijective) {
    Partition pr;
    for (std::size_t j = 1; j < p.blocks.size(); ++j) {
      IndexSet nb(m);
      for (int i : p.blocks[j].to_vector()) nb.add(rest.trace.at(i));
      pr.blocks.push_back(nb);
    }
    rep.statement_iii = is_factorization(rest.arrangement, pr).first;
  }

  if (!rep.degenerate_deletion) {
    int trues = int(rep.statement_i) + int(rep.statement_ii) + int(rep.statement_iii);
    internal_check(trues != 2, "two of the addition-deletion statements imply the third");
  }
  return rep;
}

std::pair<bool, bool> deletion_criterion(const Arrangement& a, const Partition& p, int h0) {
  validate_partition(a, p);
  if (p.blocks.empty() || !p.blocks.front().test(h0))
    throw std::invalid_argument("h0 must lie in the first block");
  if (!is_factorization(a, p).first)
    throw std::invalid_argument("partition is not a factorization");

  Restriction rest = restriction(a, IndexSet::of(a.size(), {h0}));
  int m = rest.arrangement.size();
  std::vector<int> hits(m + 1, 0);
  int domain = 0;
  for (int i = 1; i <= a.size(); ++i) {
    if (p.blocks.front().test(i)) continue;
    ++domain;
    ++hits[rest.trace.at(i)];
  }
  bool bij = domain == m;
  for (int k = 1; k <= m; ++k)
    if (hits[k] != 1) bij = false;
  if (!bij) throw std::invalid_argument("restriction map rho is not bijective");

  Subarrangement del = deleted(a, h0);
  Partition pd{deletion_blocks(p, h0, del, false)};
  bool deletion_nice = is_factorization(del.arrangement, pd).first;

  Partition pr;
  for (std::size_t j = 1; j < p.blocks.size(); ++j) {
    IndexSet nb(m);
    for (int i : p.blocks[j].to_vector()) nb.add(rest.trace.at(i));
    pr.blocks.push_back(nb);
  }
  bool restriction_nice = is_factorization(rest.arrangement, pr).first;
  return {deletion_nice, restriction_nice};
}

}  // namespace arr
