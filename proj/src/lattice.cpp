#include "arr/lattice.hpp"

#include <algorithm>

#include "arr/errors.hpp"

namespace arr {

namespace {

IndexSet hyps_containing(const Arrangement& a, const Subspace& s) {
  IndexSet out(a.size());
  for (int i = 1; i <= a.size(); ++i)
    if (a.hyperplane(i).contains(s)) out.add(i);
  return out;
}

}  // namespace

Flat closure(const Arrangement& a, const IndexSet& s) {
  if (s.cap() != a.size()) throw std::invalid_argument("index set does not match arrangement");
  Subspace x = Subspace::full(a.dim());
  for (int i : s.to_vector()) x = intersect(x, a.hyperplane(i));
  return Flat{hyps_containing(a, x), x, a.dim() - x.dim()};
}

IntersectionLattice build_lattice(const Arrangement& a) {
  IntersectionLattice l;
  l.a_ = a;

  // Breadth-first by rank: extend each flat by one hyperplane not already
  // containing it; that drops the subspace dimension by exactly one.
  std::vector<std::pair<IndexSet, Subspace>> frontier;
  frontier.emplace_back(IndexSet(a.size()), Subspace::full(a.dim()));
  int rank = 0;
  while (!frontier.empty()) {
    for (auto& [hyps, space] : frontier) {
      int id = static_cast<int>(l.flats_.size());
      l.flats_.push_back(Flat{hyps, space, rank});
      l.id_by_hyps_.emplace(hyps, id);
      if (static_cast<int>(l.by_rank_.size()) <= rank) l.by_rank_.emplace_back();
      l.by_rank_[rank].push_back(id);
    }
    std::map<IndexSet, Subspace> next;
    for (const auto& [hyps, space] : frontier) {
      for (int i = 1; i <= a.size(); ++i) {
        if (hyps.test(i)) continue;
        Subspace cut = intersect(space, a.hyperplane(i));
        internal_check(cut.dim() == space.dim() - 1,
                       "adding a non-containing hyperplane cuts dimension by one");
        IndexSet closed = hyps_containing(a, cut);
        next.emplace(closed, cut);
      }
    }
    frontier.assign(next.begin(), next.end());
    ++rank;
  }
  internal_check(static_cast<int>(l.by_rank_.size()) == a.rank() + 1,
                 "lattice height equals arrangement rank");
  internal_check(a.size() == 0 || static_cast<int>(l.by_rank_[1].size()) == a.size(),
                 "rank-1 flats are exactly the hyperplanes");

  // Möbius recursion in rank order: mu(bottom) = 1, lower sums vanish.
  l.mobius_.assign(l.flats_.size(), 0);
  l.mobius_[0] = 1;
  for (int id = 1; id < l.size(); ++id) {
    mpz_class s = 0;
    for (int x = 0; x < l.size(); ++x)
      if (x != id && l.leq(x, id)) s += l.mobius_[x];
    l.mobius_[id] = -s;
  }
  return l;
}

int IntersectionLattice::id_of(const IndexSet& closed_hyps) const {
  auto it = id_by_hyps_.find(closed_hyps);
  return it == id_by_hyps_.end() ? -1 : it->second;
}

int IntersectionLattice::id_of_closure(const IndexSet& hyps) const {
  Flat f = closure(a_, hyps);
  int id = id_of(f.hyps);
  internal_check(id >= 0, "closure of any set is a flat of the lattice");
  return id;
}

std::optional<int> IntersectionLattice::id_of_subspace(const Subspace& s) const {
  IndexSet t(a_.size());
  for (int i = 1; i <= a_.size(); ++i)
    if (a_.hyperplane(i).contains(s)) t.add(i);
  int id = id_of(t);
  if (id < 0 || flats_[id].space != s) return std::nullopt;
  return id;
}

int IntersectionLattice::meet(int x, int y) const {
  Subspace s = sum(flats_[x].space, flats_[y].space);
  IndexSet t(a_.size());
  for (int i = 1; i <= a_.size(); ++i)
    if (a_.hyperplane(i).contains(s)) t.add(i);
  int id = id_of(t);
  internal_check(id >= 0, "meet exists");
  return id;
}

int IntersectionLattice::join(int x, int y) const {
  Subspace s = intersect(flats_[x].space, flats_[y].space);
  IndexSet t(a_.size());
  for (int i = 1; i <= a_.size(); ++i)
    if (a_.hyperplane(i).contains(s)) t.add(i);
  int id = id_of(t);
  internal_check(id >= 0, "join exists");
  return id;
}

std::vector<int> IntersectionLattice::interval_below(int x, int k) const {
  std::vector<int> out;
  if (k < 0 || k >= static_cast<int>(by_rank_.size())) return out;
  for (int id : by_rank_[k])
    if (leq(id, x)) out.push_back(id);
  return out;
}

std::vector<mpz_class> IntersectionLattice::poincare() const {
  std::vector<mpz_class> coeff(rank() + 1, 0);
  for (int id = 0; id < size(); ++id) coeff[flats_[id].rank] += abs(mobius_[id]);
  return coeff;
}

bool IntersectionLattice::is_modular(int id) const {
  for (int y = 0; y < size(); ++y) {
    Subspace s = sum(flats_[id].space, flats_[y].space);
    if (!id_of_subspace(s)) return false;
  }
  return true;
}

IntersectionLattice::ModularComplement IntersectionLattice::modular_complement(int x_id) const {
  if (x_id < 0 || x_id >= size()) throw std::invalid_argument("flat id out of range");
  if (!is_modular(x_id)) throw std::invalid_argument("flat is not modular");
  if (x_id == top()) return ModularComplement{bottom(), {}};

  const Flat& x = flats_[x_id];
  int q = x.rank;

  // Greedy pick of hyperplanes cutting x down to the center; their
  // intersection is the complement.
  Subspace current = x.space;
  const Subspace& center = flats_[top()].space;
  IndexSet chosen(a_.size());
  for (int i = 1; i <= a_.size() && current.dim() > center.dim(); ++i) {
    Subspace cut = intersect(current, a_.hyperplane(i));
    if (cut.dim() == current.dim() - 1) {
      chosen.add(i);
      current = cut;
    }
  }
  internal_check(current == center, "greedy extension reaches the center");
  int y_id = id_of_closure(chosen);
  const Flat& y = flats_[y_id];
  internal_check(y.rank == rank() - q, "complement has complementary rank");
  internal_check(join(x_id, y_id) == top(), "complement joins to the top");
  internal_check(meet(x_id, y_id) == bottom(), "complement meets at the bottom");

  // Correspondence: trace K of A^Y -> the hyperplane X + K of A_X,
  // identified by its index in A.
  Restriction rest = restriction(a_, y.hyps);
  ModularComplement out{y_id, {}};
  IndexSet hit(a_.size());
  for (int k = 1; k <= rest.arrangement.size(); ++k) {
    int parent = rest.preimages[k - 1].front();
    Subspace trace_space = intersect(y.space, a_.hyperplane(parent));
    Subspace s = sum(x.space, trace_space);
    int target = 0;
    for (int i : x.hyps.to_vector())
      if (a_.hyperplane(i) == s) { target = i; break; }
    internal_check(target != 0, "X + K is a hyperplane of the localization");
    internal_check(!hit.test(target), "correspondence is injective");
    hit.add(target);
    out.correspondence[k] = target;
  }
  internal_check(hit == x.hyps, "correspondence covers the localization");

  // The correspondence must carry L(A^Y) to L(A_X) flat by flat.
  Subarrangement loc = subarrangement(a_, x.hyps);
  std::map<int, int> to_local;
  for (std::size_t j = 0; j < loc.parent.size(); ++j) to_local[loc.parent[j]] = static_cast<int>(j) + 1;
  IntersectionLattice lr = build_lattice(rest.arrangement);
  IntersectionLattice ll = build_lattice(loc.arrangement);
  internal_check(lr.size() == ll.size(), "restriction and localization lattices have equal size");
  for (int id = 0; id < lr.size(); ++id) {
    IndexSet image(loc.arrangement.size());
    for (int k : lr.flat(id).hyps.to_vector()) image.add(to_local.at(out.correspondence.at(k)));
    internal_check(ll.id_of(image) >= 0, "correspondence maps closed sets to closed sets");
  }
  return out;
}

std::vector<mpz_class> poincare_polynomial(const Arrangement& a) {
  return build_lattice(a).poincare();
}

}  // namespace arr
