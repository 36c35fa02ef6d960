#ifndef HURWITZ_PERM_GROUP_HPP
#define HURWITZ_PERM_GROUP_HPP

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "hurwitz/perm.hpp"

namespace hurwitz {

// Rule for picking base points while building the stabilizer chain. The
// default makes every enumeration order reproducible; the alternative exists
// so group orders can be cross-checked against an independent chain.
enum class BaseRule { SmallestMoved, LargestMoved };

// A permutation group given by generators, with a deterministic stabilizer
// chain (base, strong generating set, one transversal per base point).
// Immutable after construction; queries are safe to run concurrently.
class PermGroup {
public:
  // The trivial group on `degree` points is built from an empty list.
  PermGroup(unsigned degree, std::vector<Perm> generators,
            BaseRule rule = BaseRule::SmallestMoved);

  unsigned degree() const { return degree_; }
  const std::vector<Perm> &generators() const { return gens_; }
  std::uint64_t order() const { return order_; }
  const std::vector<std::uint32_t> &base() const { return base_; }

  bool contains(const Perm &p) const;

  // All elements, each exactly once, in a fixed deterministic order.
  // Throws CapExceeded when order() > cap.
  std::vector<Perm> elements(std::uint64_t cap) const;

  bool is_abelian() const;
  bool is_transitive() const;

private:
  struct Level {
    std::uint32_t beta = 0;
    std::vector<Perm> gens;                 // strong generators active at this level
    std::vector<std::int32_t> slot_of;      // point -> transversal slot, -1 outside orbit
    std::vector<std::uint32_t> orbit;       // discovery order
    std::vector<Perm> transversal;          // transversal[k] maps beta -> orbit[k]
  };

  void insert_generator(std::size_t level, const Perm &g);
  std::vector<const Perm *> active_gens(std::size_t level) const;
  void rebuild_orbit(std::size_t level);
  // Sifts p through levels starting at `from`; returns the residue and the
  // level at which sifting stopped (levels_.size() on full success).
  std::pair<Perm, std::size_t> sift(const Perm &p, std::size_t from) const;
  void close_chain();
  void recompute_order();

  unsigned degree_;
  std::vector<Perm> gens_;
  BaseRule rule_;
  std::vector<Level> levels_;
  std::vector<std::uint32_t> base_;
  std::uint64_t order_ = 1;
};

// Conjugacy classes of a fully enumerated group. Classes partition the
// element set; the representative is the lex-least member of its class.
struct ClassTable {
  std::shared_ptr<const PermGroup> group;
  std::vector<Perm> reps;
  std::vector<std::vector<Perm>> members; // each sorted
  std::unordered_map<Perm, int, PermHash> class_of;

  int class_index(const Perm &p) const; // -1 when p is not in the group
  std::size_t num_classes() const { return reps.size(); }
};

ClassTable conjugacy_classes(std::shared_ptr<const PermGroup> group, std::uint64_t cap);

// Orbit search conjugating a by the generators of G, without enumerating G.
// Throws CapExceeded when the orbit grows past node_cap before b is found or
// the orbit closes.
bool are_conjugate(const PermGroup &g, const Perm &a, const Perm &b, std::uint64_t node_cap);

struct SubgroupProduct {
  std::shared_ptr<PermGroup> join;    // <H1 u H2>
  std::uint64_t intersection_order;
  bool product_is_group;              // |H1||H2|/|H1 n H2| == |join|
};

SubgroupProduct subgroup_product_test(const PermGroup &h1, const PermGroup &h2,
                                      std::uint64_t cap);

struct OrderStats {
  std::uint64_t exponent; // lcm of element orders
  std::uint64_t psi;      // sum of element orders
};

OrderStats order_statistics(const PermGroup &g, std::uint64_t cap);

// A <= B and |A| == |B|, i.e. equality as subgroups of the ambient symmetric group.
bool same_subgroup(const PermGroup &a, const PermGroup &b);

} // namespace hurwitz

#endif
