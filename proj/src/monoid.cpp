#include "hurwitz/monoid.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "orbit_engine.hpp"

namespace hurwitz {

namespace {

std::string subgroup_key(const PermGroup &g, std::uint64_t cap) {
  std::string key;
  for (const Perm &e : g.elements(cap))
    for (std::uint32_t v : e.images())
      key += static_cast<char>(v), key += static_cast<char>(v >> 8);
  return key;
}

} // namespace

std::vector<Component> ni_set(const NiQuery &q, const Caps &caps) {
  if (!q.group)
    throw DomainError("ni_set: missing group");
  const PermGroup &h = *q.group;
  const unsigned points = h.degree();
  std::size_t nf = q.factors.size();
  std::vector<Perm> all_entries;
  std::size_t total_degree = 0;
  for (const Component &f : q.factors) {
    if (f.points() != points)
      throw DomainError("ni_set: ambient degree mismatch");
    for (const Perm &e : f.canonical().entries()) {
      if (!h.contains(e))
        throw DomainError("ni_set: factor monodromy not contained in H");
      all_entries.push_back(e);
    }
    total_degree += f.degree();
  }

  // monodromy group of the plain product x_1 ... x_n
  std::vector<Perm> prod_gens = all_entries;
  std::sort(prod_gens.begin(), prod_gens.end());
  prod_gens.erase(std::unique(prod_gens.begin(), prod_gens.end()), prod_gens.end());
  PermGroup product_group(points, prod_gens);

  std::vector<Perm> hs = h.elements(caps.elements);
  std::sort(hs.begin(), hs.end());

  detail::Alphabet alpha =
      detail::Alphabet::from_closed(class_closure(h, std::move(all_entries)));
  detail::OrbitUniverse universe(&alpha, total_degree, caps.orbit);

  // conjugated entry ids per factor and per gamma
  std::vector<std::vector<std::vector<std::int32_t>>> conj_ids(nf);
  for (std::size_t f = 0; f < nf; ++f) {
    conj_ids[f].resize(hs.size());
    for (std::size_t g = 0; g < hs.size(); ++g) {
      auto &ids = conj_ids[f][g];
      ids.reserve(q.factors[f].degree());
      for (const Perm &e : q.factors[f].canonical().entries())
        ids.push_back(alpha.id_of(conjugate(e, hs[g])));
    }
  }

  std::vector<std::int32_t> seed(total_degree);
  std::vector<char> used; // orbit index -> seen
  auto mark = [&](std::int32_t idx) {
    if (static_cast<std::size_t>(idx) >= used.size())
      used.resize(static_cast<std::size_t>(idx) + 1, 0);
    used[static_cast<std::size_t>(idx)] = 1;
  };
  auto grid = [&](auto &&self, std::size_t f, std::size_t at) -> void {
    if (f == nf) {
      mark(universe.orbit_index(seed));
      return;
    }
    for (std::size_t g = 0; g < hs.size(); ++g) {
      const auto &ids = conj_ids[f][g];
      std::copy(ids.begin(), ids.end(), seed.begin() + static_cast<std::ptrdiff_t>(at));
      self(self, f + 1, at + ids.size());
    }
  };
  if (nf == 0)
    mark(universe.orbit_index(seed));
  else
    grid(grid, 0, 0);

  std::vector<Component> out;
  const auto &orbits = universe.orbits();
  for (std::size_t i = 0; i < used.size(); ++i) {
    if (!used[i])
      continue;
    Component c = detail::make_component(alpha, orbits[i].canonical_ids, orbits[i].size, points);
    if (q.sharp && !same_subgroup(c.monodromy(), product_group))
      continue;
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool are_permuting(const Component &x, const Component &y, const Caps &caps) {
  return subgroup_product_test(x.monodromy(), y.monodromy(), caps.elements).product_is_group;
}

bool is_permuting_family(const std::vector<Component> &factors, const Caps &caps) {
  std::size_t n = factors.size();
  if (n <= 1)
    return true;
  const unsigned points = factors.front().points();
  std::vector<Perm> join_gens;
  for (const Component &f : factors) {
    if (f.points() != points)
      throw DomainError("is_permuting_family: ambient degree mismatch");
    for (const Perm &g : f.monodromy().generators())
      join_gens.push_back(g);
  }
  PermGroup h(points, join_gens);
  std::vector<Perm> hs = h.elements(caps.elements);
  std::sort(hs.begin(), hs.end());

  // cache conjugated monodromy groups, keyed by their element sets
  std::map<std::pair<std::size_t, std::size_t>, std::shared_ptr<PermGroup>> conj_cache;
  auto conj_group = [&](std::size_t f, std::size_t g) {
    auto key = std::make_pair(f, g);
    auto it = conj_cache.find(key);
    if (it != conj_cache.end())
      return it->second;
    std::vector<Perm> gens;
    for (const Perm &s : factors[f].monodromy().generators())
      gens.push_back(conjugate(s, hs[g]));
    auto grp = std::make_shared<PermGroup>(points, std::move(gens));
    conj_cache.emplace(key, grp);
    return grp;
  };

  // one evaluation of the implication, memoized on the subgroup tuple
  std::map<std::string, bool> verdicts;
  auto check = [&](std::size_t i, const std::vector<std::size_t> &gammas) -> bool {
    std::vector<const PermGroup *> tail;
    for (std::size_t j = i + 1; j < n; ++j)
      tail.push_back(conj_group(j, gammas[j - i - 1]).get());

    std::string memo_key;
    for (const PermGroup *t : tail)
      memo_key += subgroup_key(*t, caps.elements) + "|";
    memo_key += std::to_string(i);
    auto found = verdicts.find(memo_key);
    if (found != verdicts.end())
      return found->second;

    std::vector<Perm> without_i;
    for (std::size_t j = 0; j < i; ++j)
      for (const Perm &s : factors[j].monodromy().generators())
        without_i.push_back(s);
    for (const PermGroup *t : tail)
      for (const Perm &s : t->generators())
        without_i.push_back(s);
    PermGroup a(points, without_i);

    std::vector<Perm> with_i = without_i;
    for (const Perm &s : factors[i].monodromy().generators())
      with_i.push_back(s);
    PermGroup full(points, with_i);

    bool ok = true;
    if (full.order() == h.order()) {
      auto pt = subgroup_product_test(a, factors[i].monodromy(), caps.elements);
      unsigned __int128 lhs =
          static_cast<unsigned __int128>(a.order()) * factors[i].monodromy().order();
      unsigned __int128 rhs =
          static_cast<unsigned __int128>(h.order()) * pt.intersection_order;
      ok = lhs == rhs;
    }
    verdicts.emplace(std::move(memo_key), ok);
    return ok;
  };

  for (std::size_t i = 1; i < n; ++i) { // the paper's i in {2..n}, zero-based here
    std::vector<std::size_t> gammas(n - i - 1, 0);
    for (;;) {
      if (!check(i, gammas))
        return false;
      std::size_t k = 0;
      while (k < gammas.size() && ++gammas[k] == hs.size()) {
        gammas[k] = 0;
        ++k;
      }
      if (k == gammas.size())
        break;
    }
  }
  return true;
}

SingletonVerdict verify_singleton(const NiQuery &q, const Caps &caps) {
  NiQuery sharp_q = q;
  sharp_q.sharp = true;
  std::vector<Component> sharp = ni_set(sharp_q, caps);

  Component product = [&] {
    const unsigned points = q.group->degree();
    std::vector<Perm> entries;
    for (const Component &f : q.factors)
      for (const Perm &e : f.canonical().entries())
        entries.push_back(e);
    return component_of(GTuple(points, std::move(entries)), caps.orbit);
  }();

  bool holds = sharp.size() == 1 && sharp.front() == product;
  return SingletonVerdict{holds, std::move(sharp)};
}

SmallFactorization factor_small(const Component &x, std::uint64_t psi, const Caps &caps) {
  std::vector<FactorBlock> blocks;
  std::vector<Perm> current = x.canonical().entries();
  const unsigned points = x.points();

  while (current.size() > psi) {
    // lex-least element appearing at least ord+1 times
    std::map<Perm, std::uint64_t> counts;
    for (const Perm &e : current)
      ++counts[e];
    const Perm *pick = nullptr;
    std::uint64_t ord = 0;
    for (const auto &[e, c] : counts) {
      std::uint64_t o = element_order(e);
      if (c >= o + 1) {
        pick = &e;
        ord = o;
        break;
      }
    }
    if (!pick)
      break;
    Perm g = *pick;
    Perm ginv = inverse(g);

    // Pull ord(g) occurrences of g to the front with inverse braid moves;
    // entries passed over are conjugated by g^{-1}, which fixes other copies
    // of g, so the extracted block leaves at least one g in the tail.
    std::uint64_t pulled = 0;
    for (std::uint64_t front = 0; pulled < ord; ++front) {
      std::size_t at = static_cast<std::size_t>(front);
      while (current[at] != g)
        ++at;
      for (std::size_t p = at; p > front; --p) {
        // sigma_p^{-1} on positions (p-1, p): (a, g) -> (g, a^{g^{-1}})
        Perm a = current[p - 1];
        current[p - 1] = current[p];
        current[p] = conjugate(a, ginv);
      }
      ++pulled;
    }
    blocks.push_back(FactorBlock{g, ord});
    current.erase(current.begin(), current.begin() + static_cast<std::ptrdiff_t>(ord));
  }

  Component rest = component_of(GTuple(points, std::move(current)), caps.orbit);
  return SmallFactorization{std::move(blocks), std::move(rest)};
}

std::uint64_t euler_totient(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0)
        n /= p;
      result -= result / p;
    }
  }
  if (n > 1)
    result -= result / n;
  return result;
}

ReductionBounds reduction_bounds(const ClassSet &cs, const Caps &caps) {
  OrderStats st = order_statistics(cs.group(), caps.elements);
  ReductionBounds b{};
  b.coarse = 2 * static_cast<std::uint64_t>(cs.members().size()) * st.psi;
  b.refined = 0;
  for (std::size_t pos = 0; pos < cs.num_classes(); ++pos) {
    std::uint64_t size = cs.class_members(static_cast<int>(pos)).size();
    std::uint64_t ord = element_order(cs.class_rep(static_cast<int>(pos)));
    b.refined += size * (ord * (size + euler_totient(ord)) - 1);
  }
  return b;
}

Component build_v(const ClassSet &cs, const Caps &caps) {
  std::vector<Perm> entries;
  for (const Perm &g : cs.members()) {
    std::uint64_t ord = element_order(g);
    for (std::uint64_t k = 0; k < ord; ++k)
      entries.push_back(g);
  }
  return component_of(GTuple(cs.group().degree(), std::move(entries)), caps.orbit);
}

bool is_complete_class_set(const ClassSet &cs, const Caps &caps) {
  const PermGroup &g = cs.group();
  std::vector<Perm> elems = g.elements(caps.elements);

  // all subgroups: cyclic subgroups closed under pairwise joins
  std::map<std::string, std::shared_ptr<PermGroup>> subgroups;
  auto key_of = [&](const PermGroup &sub) { return subgroup_key(sub, caps.elements); };
  std::vector<std::shared_ptr<PermGroup>> worklist;
  for (const Perm &e : elems) {
    auto cyc = std::make_shared<PermGroup>(g.degree(), std::vector<Perm>{e});
    if (subgroups.emplace(key_of(*cyc), cyc).second)
      worklist.push_back(cyc);
  }
  for (std::size_t i = 0; i < worklist.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      std::vector<Perm> gens = worklist[i]->generators();
      const auto &other = worklist[j]->generators();
      gens.insert(gens.end(), other.begin(), other.end());
      auto join = std::make_shared<PermGroup>(g.degree(), std::move(gens));
      if (join->order() >= g.order())
        continue; // only proper subgroups matter
      if (subgroups.emplace(key_of(*join), join).second) {
        if (subgroups.size() > caps.elements)
          throw CapExceeded("max-elements", caps.elements, "subgroup lattice too large");
        worklist.push_back(join);
      }
    }
  }

  for (const auto &[key, sub] : subgroups) {
    if (sub->order() == g.order())
      continue;
    bool meets_all = true;
    for (std::size_t pos = 0; pos < cs.num_classes() && meets_all; ++pos) {
      bool meets = false;
      for (const Perm &m : cs.class_members(static_cast<int>(pos)))
        if (sub->contains(m)) {
          meets = true;
          break;
        }
      meets_all = meets;
    }
    if (meets_all)
      return false;
  }
  return true;
}

} // namespace hurwitz
