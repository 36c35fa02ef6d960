#include "hurwitz/perm_group.hpp"

#include <algorithm>
#include <optional>
#include <deque>
#include <numeric>
#include <unordered_set>

namespace hurwitz {

PermGroup::PermGroup(unsigned degree, std::vector<Perm> generators, BaseRule rule)
    : degree_(degree), gens_(std::move(generators)), rule_(rule) {
  for (const Perm &g : gens_)
    if (g.degree() != degree_)
      throw DomainError("generator degree mismatch");
  for (const Perm &g : gens_)
    if (!g.is_identity())
      insert_generator(0, g);
  close_chain();
  recompute_order();
}

// Generators acting at a level: everything inserted at this depth or deeper
// (deeper strong generators stabilize the earlier base prefix, so they are
// legitimate stabilizer members here and may extend the orbit).
std::vector<const Perm *> PermGroup::active_gens(std::size_t level) const {
  std::vector<const Perm *> out;
  for (std::size_t l = level; l < levels_.size(); ++l)
    for (const Perm &g : levels_[l].gens)
      out.push_back(&g);
  return out;
}

void PermGroup::rebuild_orbit(std::size_t level) {
  Level &lv = levels_[level];
  std::vector<const Perm *> gens = active_gens(level);
  lv.slot_of.assign(degree_, -1);
  lv.orbit.clear();
  lv.transversal.clear();
  lv.slot_of[lv.beta] = 0;
  lv.orbit.push_back(lv.beta);
  lv.transversal.push_back(Perm(degree_));
  for (std::size_t k = 0; k < lv.orbit.size(); ++k) {
    for (const Perm *s : gens) {
      std::uint32_t np = (*s)[lv.orbit[k]];
      if (lv.slot_of[np] < 0) {
        lv.slot_of[np] = static_cast<std::int32_t>(lv.orbit.size());
        lv.orbit.push_back(np);
        lv.transversal.push_back(compose(lv.transversal[k], *s));
      }
    }
  }
}

void PermGroup::insert_generator(std::size_t level, const Perm &g) {
  if (level == levels_.size()) {
    Level lv;
    lv.beta = rule_ == BaseRule::SmallestMoved ? g.smallest_moved() : g.largest_moved();
    levels_.push_back(std::move(lv));
  }
  levels_[level].gens.push_back(g);
  for (std::size_t l = level + 1; l-- > 0;)
    rebuild_orbit(l);
}

std::pair<Perm, std::size_t> PermGroup::sift(const Perm &p, std::size_t from) const {
  Perm q = p;
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const Level &lv = levels_[l];
    std::uint32_t pt = q[lv.beta];
    if (lv.slot_of[pt] < 0)
      return {q, l};
    q = compose(q, inverse(lv.transversal[lv.slot_of[pt]]));
  }
  return {q, levels_.size()};
}

// Verification sweep: every Schreier generator of every level must sift to
// the identity through the deeper levels. Any failure adds a strong generator
// and restarts the sweep; a clean pass certifies the chain.
void PermGroup::close_chain() {
  for (;;) {
    // find one failing Schreier generator without mutating the chain
    std::optional<std::pair<Perm, std::size_t>> failure;
    for (std::size_t l = levels_.size(); l-- > 0 && !failure;) {
      const Level &lv = levels_[l];
      std::vector<const Perm *> gens = active_gens(l);
      for (std::size_t k = 0; k < lv.orbit.size() && !failure; ++k) {
        for (const Perm *s : gens) {
          std::uint32_t target = (*s)[lv.orbit[k]];
          Perm schreier = compose(compose(lv.transversal[k], *s),
                                  inverse(lv.transversal[lv.slot_of[target]]));
          if (schreier.is_identity())
            continue;
          auto [res, at] = sift(schreier, l + 1);
          if (!res.is_identity()) {
            failure = {std::move(res), at};
            break;
          }
        }
      }
    }
    if (!failure)
      return;
    insert_generator(failure->second, failure->first);
  }
}

void PermGroup::recompute_order() {
  order_ = 1;
  base_.clear();
  for (const Level &lv : levels_) {
    base_.push_back(lv.beta);
    std::uint64_t sz = lv.orbit.size();
    if (order_ > UINT64_MAX / sz)
      throw Error("group order overflows 64 bits");
    order_ *= sz;
  }
}

bool PermGroup::contains(const Perm &p) const {
  if (p.degree() != degree_)
    throw DomainError("contains: degree mismatch");
  auto [res, at] = sift(p, 0);
  return res.is_identity();
}

std::vector<Perm> PermGroup::elements(std::uint64_t cap) const {
  if (order_ > cap)
    throw CapExceeded("max-elements", cap,
                      "group has order " + std::to_string(order_));
  // Per level, transversal slots sorted by target point for reproducibility.
  std::vector<std::vector<const Perm *>> sorted(levels_.size());
  for (std::size_t l = 0; l < levels_.size(); ++l) {
    std::vector<std::uint32_t> pts = levels_[l].orbit;
    std::sort(pts.begin(), pts.end());
    for (std::uint32_t pt : pts)
      sorted[l].push_back(&levels_[l].transversal[levels_[l].slot_of[pt]]);
  }
  std::vector<Perm> out;
  out.reserve(static_cast<std::size_t>(order_));
  out.push_back(Perm(degree_));
  for (std::size_t l = levels_.size(); l-- > 0;) {
    std::vector<Perm> next;
    next.reserve(out.size() * sorted[l].size());
    for (const Perm &e : out)
      for (const Perm *u : sorted[l])
        next.push_back(compose(e, *u));
    out = std::move(next);
  }
  return out;
}

bool PermGroup::is_abelian() const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    for (std::size_t j = i + 1; j < gens_.size(); ++j)
      if (compose(gens_[i], gens_[j]) != compose(gens_[j], gens_[i]))
        return false;
  return true;
}

bool PermGroup::is_transitive() const {
  if (degree_ == 0)
    return true;
  std::vector<bool> seen(degree_, false);
  std::vector<std::uint32_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    std::uint32_t pt = stack.back();
    stack.pop_back();
    for (const Perm &g : gens_) {
      std::uint32_t np = g[pt];
      if (!seen[np]) {
        seen[np] = true;
        ++count;
        stack.push_back(np);
      }
    }
  }
  return count == degree_;
}

int ClassTable::class_index(const Perm &p) const {
  auto it = class_of.find(p);
  return it == class_of.end() ? -1 : it->second;
}

ClassTable conjugacy_classes(std::shared_ptr<const PermGroup> group, std::uint64_t cap) {
  ClassTable table;
  table.group = group;
  std::vector<Perm> elems = group->elements(cap);
  std::sort(elems.begin(), elems.end());
  for (const Perm &e : elems) {
    if (table.class_of.count(e))
      continue;
    int id = static_cast<int>(table.reps.size());
    // conjugation orbit of e under the generators
    std::vector<Perm> cls{e};
    table.class_of.emplace(e, id);
    for (std::size_t k = 0; k < cls.size(); ++k) {
      for (const Perm &g : group->generators()) {
        Perm c = conjugate(cls[k], g);
        if (!table.class_of.count(c)) {
          table.class_of.emplace(c, id);
          cls.push_back(c);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    table.reps.push_back(cls.front());
    table.members.push_back(std::move(cls));
  }
  return table;
}

bool are_conjugate(const PermGroup &g, const Perm &a, const Perm &b, std::uint64_t node_cap) {
  if (a.degree() != g.degree() || b.degree() != g.degree())
    throw DomainError("are_conjugate: degree mismatch");
  if (!g.contains(a) || !g.contains(b))
    throw DomainError("are_conjugate: element outside the group");
  if (a == b)
    return true;
  if (a.cycle_type() != b.cycle_type())
    return false;
  std::unordered_set<Perm, PermHash> seen{a};
  std::deque<Perm> queue{a};
  while (!queue.empty()) {
    Perm cur = queue.front();
    queue.pop_front();
    for (const Perm &s : g.generators()) {
      Perm c = conjugate(cur, s);
      if (c == b)
        return true;
      if (seen.insert(c).second) {
        if (seen.size() > node_cap)
          throw CapExceeded("max-orbit", node_cap, "conjugation orbit frontier too large");
        queue.push_back(c);
      }
    }
  }
  return false;
}

SubgroupProduct subgroup_product_test(const PermGroup &h1, const PermGroup &h2,
                                      std::uint64_t cap) {
  if (h1.degree() != h2.degree())
    throw DomainError("subgroup_product_test: degree mismatch");
  std::vector<Perm> joint = h1.generators();
  joint.insert(joint.end(), h2.generators().begin(), h2.generators().end());
  auto join = std::make_shared<PermGroup>(h1.degree(), std::move(joint));

  const PermGroup &small = h1.order() <= h2.order() ? h1 : h2;
  const PermGroup &other = h1.order() <= h2.order() ? h2 : h1;
  std::uint64_t inter = 0;
  for (const Perm &e : small.elements(cap))
    if (other.contains(e))
      ++inter;

  // |H1 H2| = |H1||H2| / |H1 n H2|, compared in 128 bits against |<H1,H2>|.
  unsigned __int128 lhs = static_cast<unsigned __int128>(h1.order()) * h2.order();
  unsigned __int128 rhs = static_cast<unsigned __int128>(join->order()) * inter;
  return SubgroupProduct{join, inter, lhs == rhs};
}

OrderStats order_statistics(const PermGroup &g, std::uint64_t cap) {
  OrderStats st{1, 0};
  for (const Perm &e : g.elements(cap)) {
    std::uint64_t ord = element_order(e);
    st.exponent = std::lcm(st.exponent, ord);
    st.psi += ord;
  }
  return st;
}

bool same_subgroup(const PermGroup &a, const PermGroup &b) {
  if (a.degree() != b.degree() || a.order() != b.order())
    return false;
  for (const Perm &g : a.generators())
    if (!b.contains(g))
      return false;
  return true;
}

} // namespace hurwitz
