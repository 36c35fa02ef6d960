#ifndef HURWITZ_COMPONENT_HPP
#define HURWITZ_COMPONENT_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "hurwitz/class_set.hpp"

namespace hurwitz {

// An ordered tuple of permutations sharing one ambient degree. The ambient
// degree is carried explicitly so the empty tuple knows its space.
class GTuple {
public:
  GTuple() = default;
  explicit GTuple(unsigned points) : points_(points) {}
  GTuple(unsigned points, std::vector<Perm> entries);

  unsigned points() const { return points_; }
  std::size_t size() const { return entries_.size(); }
  const Perm &operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Perm> &entries() const { return entries_; }

  friend bool operator==(const GTuple &, const GTuple &) = default;
  friend std::strong_ordering operator<=>(const GTuple &a, const GTuple &b);

private:
  unsigned points_ = 0;
  std::vector<Perm> entries_;
};

// Left-to-right product of the entries; identity for the empty tuple.
Perm tuple_product(const GTuple &t);

// Elementary braid move sigma_i (or its inverse), i in 1..n-1:
//   sigma_i:      (..., g_i, g_{i+1}, ...) -> (..., g_i g_{i+1} g_i^{-1}, g_i, ...)
//   sigma_i^{-1}: (..., g_i, g_{i+1}, ...) -> (..., g_{i+1}, g_{i+1}^{-1} g_i g_{i+1}, ...)
GTuple braid_move(const GTuple &t, std::size_t i, bool use_inverse);

// A braid orbit of product-one tuples, identified by its canonical
// representative: the lexicographically least tuple in the orbit.
class Component {
public:
  Component(GTuple canonical, std::uint64_t orbit_size,
            std::shared_ptr<const PermGroup> monodromy);

  const GTuple &canonical() const { return canonical_; }
  unsigned points() const { return canonical_.points(); }
  std::size_t degree() const { return canonical_.size(); }
  std::uint64_t orbit_size() const { return orbit_size_; }
  const PermGroup &monodromy() const { return *monodromy_; }
  std::shared_ptr<const PermGroup> monodromy_ptr() const { return monodromy_; }
  // The entry multiset of the canonical representative (sorted); this is the
  // braid-invariant key behind every (H, c)-multidiscriminant.
  const std::vector<Perm> &entry_multiset() const { return multiset_; }

  friend bool operator==(const Component &a, const Component &b) {
    return a.canonical_ == b.canonical_;
  }
  friend std::strong_ordering operator<=>(const Component &a, const Component &b) {
    return a.canonical_ <=> b.canonical_;
  }

private:
  GTuple canonical_;
  std::uint64_t orbit_size_;
  std::shared_ptr<const PermGroup> monodromy_;
  std::vector<Perm> multiset_;
};

// Full closure of {t} under the elementary braid moves. Requires a
// product-one tuple; throws CapExceeded when the orbit grows past orbit_cap.
Component component_of(const GTuple &t, std::uint64_t orbit_cap);

// Product of components: the component of the concatenated canonicals.
Component concat(const Component &x, const Component &y, std::uint64_t orbit_cap);

// Component of the entrywise conjugate by gamma.
Component conjugate_component(const Component &x, const Perm &gamma, std::uint64_t orbit_cap);

// Per-class counts of the entries of t over the classes of (H, c).
// Preconditions: every entry lies in H and in c.
Multidiscriminant multidiscriminant(const GTuple &t, const ClassSet &cs);
Multidiscriminant multidiscriminant(const Component &x, const ClassSet &cs);

struct EnumOptions {
  // Keep only components whose monodromy group equals this subgroup
  // (e.g. the full group H for generating tuples).
  std::shared_ptr<const PermGroup> monodromy_equals;
};

// All braid orbits of product-one n-tuples with entries in cs, sorted by
// canonical representative.
std::vector<Component> enumerate_components(const ClassSet &cs, unsigned n,
                                            const EnumOptions &opts,
                                            std::uint64_t orbit_cap);

} // namespace hurwitz

#endif
