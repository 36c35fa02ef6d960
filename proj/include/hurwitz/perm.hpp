#ifndef HURWITZ_PERM_HPP
#define HURWITZ_PERM_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hurwitz/errors.hpp"

namespace hurwitz {

// A permutation of {1..degree}, stored 0-based. Immutable after construction.
//
// Composition is left-to-right throughout: (p * q)(x) = q(p(x)), i.e. apply p
// first. Conjugation follows g^h = h g h^{-1}. The total order on permutations
// of equal degree is lexicographic on the images array; it is the element
// order used for every canonical form downstream.
class Perm {
public:
  Perm() = default;
  explicit Perm(unsigned degree); // identity
  explicit Perm(std::vector<std::uint32_t> images); // 0-based, validated

  unsigned degree() const { return static_cast<unsigned>(img_.size()); }
  std::uint32_t operator[](std::uint32_t point) const { return img_[point]; } // 0-based
  const std::vector<std::uint32_t> &images() const { return img_; }

  bool is_identity() const;
  // Smallest point not fixed, or degree() if identity.
  std::uint32_t smallest_moved() const;
  std::uint32_t largest_moved() const; // largest such point, or degree() if identity

  // Cycle lengths >= 2, sorted descending (the cycle type).
  std::vector<std::uint32_t> cycle_type() const;

  friend bool operator==(const Perm &, const Perm &) = default;
  friend std::strong_ordering operator<=>(const Perm &a, const Perm &b) {
    return a.img_ <=> b.img_;
  }

private:
  std::vector<std::uint32_t> img_;
};

struct PermHash {
  std::size_t operator()(const Perm &p) const;
};

// apply p first, then q
Perm compose(const Perm &p, const Perm &q);
Perm inverse(const Perm &p);
// g^h = h g h^{-1}
Perm conjugate(const Perm &g, const Perm &h);
// p^e for any integer e (negative allowed)
Perm power(const Perm &p, long long e);
// least k >= 1 with p^k = id; the lcm of the cycle lengths
std::uint64_t element_order(const Perm &p);

// Parses a whitespace-separated product of disjoint cycles over {1..degree},
// e.g. "(1, 22, 14)(2, 13, 9)". Points may be separated by commas or spaces.
// Empty input gives the identity.
Perm parse_cycles(std::string_view text, unsigned degree);

// Disjoint-cycle form, e.g. "(1, 22, 14)(2, 13, 9)"; "()" for the identity.
std::string cycle_string(const Perm &p);

} // namespace hurwitz

#endif
