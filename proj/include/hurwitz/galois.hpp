#ifndef HURWITZ_GALOIS_HPP
#define HURWITZ_GALOIS_HPP

#include <cstdint>
#include <vector>

#include "hurwitz/component.hpp"

namespace hurwitz {

// The cyclotomic data of the base field: the image of the cyclotomic
// character as a subgroup of the units modulo N. A Galois automorphism is
// modeled solely by its unit k = chi(sigma) mod N.
struct UnitGroup {
  unsigned modulus = 1;
  std::vector<unsigned> units; // sorted residues, containing 1 mod N

  bool contains(unsigned k) const;
};

enum class ContextMode { Full, Trivial };

UnitGroup make_context(unsigned modulus, ContextMode mode);
// Explicit residue lists must form a subgroup of the unit group.
UnitGroup make_context(unsigned modulus, const std::vector<unsigned> &residues);

unsigned unit_inverse(unsigned k, unsigned modulus);

// Definition of a K-rational subset: g^k stays in c for every g in c and
// every unit k of the context.
bool is_rational_subset(const std::vector<Perm> &c, const UnitGroup &ctx);

// The permutation p_k of class positions induced by the k-th power map,
// verified to be well defined classwise. Throws DomainError when a power
// leaves c.
std::vector<int> class_power_map(const ClassSet &cs, unsigned k);

// psi composed with the power map: result(pos) = psi(pmap(pos)).
Multidiscriminant act_multidiscriminant(const Multidiscriminant &psi,
                                        const std::vector<int> &pmap);

// mu = mu o p_k for every unit k of the context.
bool is_rational_multidiscriminant(const Component &x, const ClassSet &cs,
                                   const UnitGroup &ctx);

// For abelian monodromy the action of a unit k is exact: entries are raised
// to the power k^{-1} mod N. N must be a multiple of every entry order.
Component abelian_action(const Component &x, unsigned k, unsigned modulus,
                         std::uint64_t orbit_cap);

bool is_defined_over_abelian(const Component &x, const UnitGroup &ctx,
                             std::uint64_t orbit_cap);

// Product of the distinct components in the unit orbit of x; always defined
// over the context's field.
Component galois_norm_abelian(const Component &x, const UnitGroup &ctx,
                              std::uint64_t orbit_cap);

class SchurCover; // lifting.hpp

struct ResolveResult {
  bool determined = false;
  std::vector<Component> candidates; // sorted; the unique one when determined
};

// Candidates for the image of x under the unit k: components of the same
// degree and monodromy group whose multidiscriminant is mu(x) o p_k and whose
// lifting invariant is the k-acted invariant of x. Ambiguity is reported,
// never resolved by guessing.
ResolveResult resolve_action(const Component &x, unsigned k, const SchurCover &cover,
                             std::uint64_t orbit_cap);

} // namespace hurwitz

#endif
