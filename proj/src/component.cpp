#include "hurwitz/component.hpp"

#include <algorithm>

#include "orbit_engine.hpp"

namespace hurwitz {

GTuple::GTuple(unsigned points, std::vector<Perm> entries)
    : points_(points), entries_(std::move(entries)) {
  for (const Perm &e : entries_)
    if (e.degree() != points_)
      throw DomainError("tuple entry degree mismatch");
}

std::strong_ordering operator<=>(const GTuple &a, const GTuple &b) {
  if (auto c = a.points_ <=> b.points_; c != 0)
    return c;
  if (auto c = a.entries_.size() <=> b.entries_.size(); c != 0)
    return c;
  return a.entries_ <=> b.entries_;
}

Perm tuple_product(const GTuple &t) {
  Perm p(t.points());
  for (const Perm &e : t.entries())
    p = compose(p, e);
  return p;
}

GTuple braid_move(const GTuple &t, std::size_t i, bool use_inverse) {
  if (i < 1 || i >= t.size())
    throw DomainError("braid index out of range");
  std::vector<Perm> entries = t.entries();
  const Perm a = entries[i - 1], b = entries[i];
  if (!use_inverse) {
    entries[i - 1] = conjugate(b, a);
    entries[i] = a;
  } else {
    entries[i - 1] = b;
    entries[i] = conjugate(a, inverse(b));
  }
  return GTuple(t.points(), std::move(entries));
}

Component::Component(GTuple canonical, std::uint64_t orbit_size,
                     std::shared_ptr<const PermGroup> monodromy)
    : canonical_(std::move(canonical)), orbit_size_(orbit_size),
      monodromy_(std::move(monodromy)), multiset_(canonical_.entries()) {
  std::sort(multiset_.begin(), multiset_.end());
}

namespace {

bool entries_commute(const std::vector<Perm> &es) {
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j)
      if (compose(es[i], es[j]) != compose(es[j], es[i]))
        return false;
  return true;
}

Component component_of_commuting(const GTuple &t, std::uint64_t orbit_cap) {
  // Braid moves on a tuple of pairwise-commuting entries only permute the
  // entries, so the orbit is the set of arrangements of the multiset.
  std::vector<Perm> sorted = t.entries();
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::int32_t> ids;
  std::vector<Perm> distinct;
  for (const Perm &e : sorted) {
    if (distinct.empty() || distinct.back() != e)
      distinct.push_back(e);
    ids.push_back(static_cast<std::int32_t>(distinct.size()) - 1);
  }
  std::uint64_t size = detail::multiset_orbit_size(ids, orbit_cap);
  auto monodromy = std::make_shared<PermGroup>(t.points(), distinct);
  return Component(GTuple(t.points(), std::move(sorted)), size, std::move(monodromy));
}

} // namespace

Component component_of(const GTuple &t, std::uint64_t orbit_cap) {
  if (!tuple_product(t).is_identity())
    throw DomainError("tuple is not product-one");
  if (t.size() == 0) {
    auto trivial = std::make_shared<PermGroup>(t.points(), std::vector<Perm>{});
    return Component(GTuple(t.points()), 1, std::move(trivial));
  }
  if (entries_commute(t.entries()))
    return component_of_commuting(t, orbit_cap);

  detail::Alphabet alpha =
      detail::Alphabet::closure_of(t.entries(), std::max<std::uint64_t>(orbit_cap, 1u << 16));
  std::vector<std::int32_t> seed;
  seed.reserve(t.size());
  for (const Perm &e : t.entries())
    seed.push_back(alpha.id_of(e));
  detail::OrbitResult res = detail::orbit_closure(alpha, seed, orbit_cap);
  return detail::make_component(alpha, res.canonical_ids, res.size, t.points());
}

Component concat(const Component &x, const Component &y, std::uint64_t orbit_cap) {
  if (x.points() != y.points())
    throw DomainError("concat: ambient degree mismatch");
  std::vector<Perm> entries = x.canonical().entries();
  entries.insert(entries.end(), y.canonical().entries().begin(), y.canonical().entries().end());
  return component_of(GTuple(x.points(), std::move(entries)), orbit_cap);
}

Component conjugate_component(const Component &x, const Perm &gamma, std::uint64_t orbit_cap) {
  if (gamma.degree() != x.points())
    throw DomainError("conjugate_component: degree mismatch");
  std::vector<Perm> entries;
  entries.reserve(x.degree());
  for (const Perm &e : x.canonical().entries())
    entries.push_back(conjugate(e, gamma));
  return component_of(GTuple(x.points(), std::move(entries)), orbit_cap);
}

Multidiscriminant multidiscriminant(const GTuple &t, const ClassSet &cs) {
  if (t.points() != cs.group().degree())
    throw DomainError("multidiscriminant: ambient degree mismatch");
  Multidiscriminant mu;
  mu.counts.assign(cs.num_classes(), 0);
  for (const Perm &e : t.entries()) {
    if (!cs.group().contains(e))
      throw DomainError("multidiscriminant: entry " + cycle_string(e) + " is not in H");
    int pos = cs.class_pos(e);
    if (pos < 0)
      throw DomainError("multidiscriminant: entry " + cycle_string(e) + " outside c");
    ++mu.counts[static_cast<std::size_t>(pos)];
  }
  return mu;
}

Multidiscriminant multidiscriminant(const Component &x, const ClassSet &cs) {
  return multidiscriminant(x.canonical(), cs);
}

std::vector<Component> enumerate_components(const ClassSet &cs, unsigned n,
                                            const EnumOptions &opts,
                                            std::uint64_t orbit_cap) {
  const unsigned points = cs.group().degree();
  std::vector<Component> out;
  if (n == 0) {
    auto trivial = std::make_shared<PermGroup>(points, std::vector<Perm>{});
    Component identity(GTuple(points), 1, std::move(trivial));
    if (!opts.monodromy_equals || same_subgroup(identity.monodromy(), *opts.monodromy_equals))
      out.push_back(std::move(identity));
    return out;
  }

  detail::Alphabet alpha = detail::Alphabet::from_closed(cs.members());
  detail::OrbitUniverse universe(&alpha, n, orbit_cap);
  std::vector<std::int32_t> ids(n);
  std::vector<Perm> prefix{Perm(points)}; // prefix products

  // Entries run over c in lex order; the final entry is forced to be the
  // inverse of the prefix product and must itself lie in c. When the whole
  // alphabet commutes, orbits are multisets, so nondecreasing prefixes
  // suffice.
  const bool multisets = alpha.all_commute();
  auto recurse = [&](auto &&self, unsigned pos, std::int32_t min_id) -> void {
    if (pos == n - 1) {
      int last = alpha.id_of(inverse(prefix.back()));
      if (last < 0)
        return;
      ids[pos] = last;
      universe.orbit_index(ids);
      return;
    }
    for (std::size_t a = multisets ? static_cast<std::size_t>(min_id) : 0;
         a < alpha.size(); ++a) {
      ids[pos] = static_cast<std::int32_t>(a);
      prefix.push_back(compose(prefix.back(), alpha.perm(static_cast<int>(a))));
      self(self, pos + 1, static_cast<std::int32_t>(a));
      prefix.pop_back();
    }
  };
  recurse(recurse, 0, 0);

  for (const detail::OrbitResult &res : universe.orbits()) {
    Component c = detail::make_component(alpha, res.canonical_ids, res.size, points);
    if (opts.monodromy_equals && !same_subgroup(c.monodromy(), *opts.monodromy_equals))
      continue;
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace hurwitz
