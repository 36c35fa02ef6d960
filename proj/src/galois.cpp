#include "hurwitz/galois.hpp"

#include <algorithm>
#include <numeric>

#include "hurwitz/lifting.hpp"

namespace hurwitz {

bool UnitGroup::contains(unsigned k) const {
  unsigned r = modulus == 0 ? k : k % modulus;
  if (modulus == 1)
    return true;
  return std::binary_search(units.begin(), units.end(), r);
}

UnitGroup make_context(unsigned modulus, ContextMode mode) {
  if (modulus == 0)
    throw DomainError("modulus must be positive");
  UnitGroup ctx;
  ctx.modulus = modulus;
  if (modulus == 1) {
    ctx.units = {1}; // the identity residue of the trivial unit group
    return ctx;
  }
  if (mode == ContextMode::Trivial) {
    ctx.units = {1};
  } else {
    for (unsigned k = 1; k < modulus; ++k)
      if (std::gcd(k, modulus) == 1)
        ctx.units.push_back(k);
  }
  return ctx;
}

UnitGroup make_context(unsigned modulus, const std::vector<unsigned> &residues) {
  if (modulus == 0)
    throw DomainError("modulus must be positive");
  UnitGroup ctx;
  ctx.modulus = modulus;
  if (modulus == 1) {
    ctx.units = {1};
    return ctx;
  }
  for (unsigned r : residues) {
    unsigned k = r % modulus;
    if (std::gcd(static_cast<unsigned long long>(k), static_cast<unsigned long long>(modulus)) != 1)
      throw DomainError("residue " + std::to_string(r) + " is not a unit mod " +
                        std::to_string(modulus));
    ctx.units.push_back(k);
  }
  std::sort(ctx.units.begin(), ctx.units.end());
  ctx.units.erase(std::unique(ctx.units.begin(), ctx.units.end()), ctx.units.end());
  if (!std::binary_search(ctx.units.begin(), ctx.units.end(), 1u))
    throw DomainError("unit set must contain 1");
  for (unsigned a : ctx.units)
    for (unsigned b : ctx.units) {
      unsigned long long prod = static_cast<unsigned long long>(a) * b % modulus;
      if (!std::binary_search(ctx.units.begin(), ctx.units.end(),
                              static_cast<unsigned>(prod)))
        throw DomainError("unit set is not closed under multiplication");
    }
  return ctx;
}

unsigned unit_inverse(unsigned k, unsigned modulus) {
  if (modulus == 1)
    return 1;
  k %= modulus;
  long long t = 0, new_t = 1;
  long long r = modulus, new_r = k;
  while (new_r != 0) {
    long long q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (r != 1)
    throw DomainError(std::to_string(k) + " is not a unit mod " + std::to_string(modulus));
  t %= modulus;
  if (t < 0)
    t += modulus;
  return static_cast<unsigned>(t);
}

bool is_rational_subset(const std::vector<Perm> &c, const UnitGroup &ctx) {
  std::vector<Perm> sorted = c;
  std::sort(sorted.begin(), sorted.end());
  for (const Perm &g : sorted)
    for (unsigned k : ctx.units)
      if (!std::binary_search(sorted.begin(), sorted.end(),
                              power(g, static_cast<long long>(k))))
        return false;
  return true;
}

std::vector<int> class_power_map(const ClassSet &cs, unsigned k) {
  std::vector<int> pmap(cs.num_classes(), -1);
  for (std::size_t pos = 0; pos < cs.num_classes(); ++pos) {
    int target = -1;
    for (const Perm &m : cs.class_members(static_cast<int>(pos))) {
      int tp = cs.class_pos(power(m, static_cast<long long>(k)));
      if (tp < 0)
        throw DomainError("power map leaves c at " + cycle_string(m) + "^" +
                          std::to_string(k));
      if (target < 0)
        target = tp;
      else if (target != tp)
        throw Error("power map is not well defined on a class");
    }
    pmap[pos] = target;
  }
  return pmap;
}

Multidiscriminant act_multidiscriminant(const Multidiscriminant &psi,
                                        const std::vector<int> &pmap) {
  if (psi.counts.size() != pmap.size())
    throw DomainError("act_multidiscriminant: size mismatch");
  Multidiscriminant out;
  out.counts.resize(psi.counts.size());
  for (std::size_t i = 0; i < pmap.size(); ++i)
    out.counts[i] = psi.counts[static_cast<std::size_t>(pmap[i])];
  return out;
}

bool is_rational_multidiscriminant(const Component &x, const ClassSet &cs,
                                   const UnitGroup &ctx) {
  Multidiscriminant mu = multidiscriminant(x, cs);
  for (unsigned k : ctx.units) {
    std::vector<int> pmap = class_power_map(cs, k);
    if (act_multidiscriminant(mu, pmap) != mu)
      return false;
  }
  return true;
}

Component abelian_action(const Component &x, unsigned k, unsigned modulus,
                         std::uint64_t orbit_cap) {
  if (!x.monodromy().is_abelian())
    throw DomainError("abelian_action: monodromy group is not abelian");
  for (const Perm &e : x.canonical().entries())
    if (modulus % element_order(e) != 0)
      throw DomainError("abelian_action: modulus is not a multiple of an entry order");
  unsigned u = unit_inverse(k, modulus);
  std::vector<Perm> entries;
  entries.reserve(x.degree());
  for (const Perm &e : x.canonical().entries())
    entries.push_back(power(e, static_cast<long long>(u)));
  return component_of(GTuple(x.points(), std::move(entries)), orbit_cap);
}

bool is_defined_over_abelian(const Component &x, const UnitGroup &ctx,
                             std::uint64_t orbit_cap) {
  for (unsigned k : ctx.units)
    if (!(abelian_action(x, k, ctx.modulus, orbit_cap) == x))
      return false;
  return true;
}

Component galois_norm_abelian(const Component &x, const UnitGroup &ctx,
                              std::uint64_t orbit_cap) {
  std::vector<Component> orbit;
  for (unsigned k : ctx.units) {
    Component y = abelian_action(x, k, ctx.modulus, orbit_cap);
    if (std::find(orbit.begin(), orbit.end(), y) == orbit.end())
      orbit.push_back(std::move(y));
  }
  std::sort(orbit.begin(), orbit.end());
  std::vector<Perm> entries;
  for (const Component &y : orbit)
    for (const Perm &e : y.canonical().entries())
      entries.push_back(e);
  return component_of(GTuple(x.points(), std::move(entries)), orbit_cap);
}

ResolveResult resolve_action(const Component &x, unsigned k, const SchurCover &cover,
                             std::uint64_t orbit_cap) {
  const ClassSet &cs = cover.class_set();
  unsigned n = cover.exponent();
  unsigned kr = k % n;
  if (n == 1 || kr == 1)
    return ResolveResult{true, {x}}; // the modeled action of the unit 1

  LiftInvariant acted = galois_act_invariant(lifting_invariant(x, cover), k, cover);

  EnumOptions opts;
  opts.monodromy_equals = x.monodromy_ptr();
  ResolveResult res;
  for (const Component &cand :
       enumerate_components(cs, static_cast<unsigned>(x.degree()), opts, orbit_cap)) {
    LiftInvariant v = lifting_invariant(cand, cover);
    if (v == acted)
      res.candidates.push_back(cand);
  }
  res.determined = res.candidates.size() == 1;
  return res;
}

} // namespace hurwitz
