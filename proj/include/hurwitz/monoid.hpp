#ifndef HURWITZ_MONOID_HPP
#define HURWITZ_MONOID_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "hurwitz/component.hpp"

namespace hurwitz {

struct NiQuery {
  std::shared_ptr<const PermGroup> group; // H; must contain every factor's monodromy
  std::vector<Component> factors;
  bool sharp = false;
};

struct Caps {
  std::uint64_t orbit = kDefaultOrbitCap;
  std::uint64_t elements = kDefaultElementCap;
};

// { prod_i x_i^{gamma_i} : gamma_i in H }, deduplicated, sorted by canonical
// representative. With sharp set, keeps only results whose monodromy group
// equals <x_1 ... x_n>.
std::vector<Component> ni_set(const NiQuery &q, const Caps &caps);

// Monodromy groups H1, H2 are permuting: H1 H2 = <H1, H2>.
bool are_permuting(const Component &x, const Component &y, const Caps &caps);

// The generalized permuting condition on an ordered family: for every
// i in {2..n} and all gamma_{i+1},...,gamma_n in H, if
// <H_1,...,H_i, H_{i+1}^{gamma},...> = H then
// <H_1,...,H_{i-1}, H_{i+1}^{gamma},...> H_i = H.
bool is_permuting_family(const std::vector<Component> &factors, const Caps &caps);

struct SingletonVerdict {
  bool holds;                      // ni-sharp of the factors == { product }
  std::vector<Component> witness;  // the full ni-sharp set
};

SingletonVerdict verify_singleton(const NiQuery &q, const Caps &caps);

struct FactorBlock {
  Perm element;
  std::uint64_t count; // = ord(element)
};

struct SmallFactorization {
  std::vector<FactorBlock> blocks;
  Component rest;
};

// Repeatedly extracts a block (g,...,g) of length ord(g) whenever some g
// occurs at least ord(g)+1 times in the current representative, until the
// degree is at most psi or no such g remains. Reconstitution invariant:
// concat(blocks, rest) = x, and <rest> = <x>.
SmallFactorization factor_small(const Component &x, std::uint64_t psi, const Caps &caps);

struct ReductionBounds {
  std::uint64_t coarse;  // 2 |c| psi(H)
  std::uint64_t refined; // sum over classes of |cls| [ord(cls)(|cls| + phi(ord(cls))) - 1]
};

ReductionBounds reduction_bounds(const ClassSet &cs, const Caps &caps);

// V = prod over g in c (deterministic element order) of ord(g) copies of g.
Component build_v(const ClassSet &cs, const Caps &caps);

// True iff no proper subgroup of G meets every conjugacy class contained in c.
bool is_complete_class_set(const ClassSet &cs, const Caps &caps);

std::uint64_t euler_totient(std::uint64_t n);

} // namespace hurwitz

#endif
