#ifndef HURWITZ_LIFTING_HPP
#define HURWITZ_LIFTING_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "hurwitz/component.hpp"
#include "hurwitz/galois.hpp"

namespace hurwitz {

// A finite presentation with one generator per element of c. Words are
// sequences of signed 1-based generator indices.
struct Presentation {
  std::size_t ngens = 0;
  std::vector<std::vector<int>> relators;
};

// Generators [g] for g in c; for every ordered pair (g, h) the conjugation
// relator [g][h][g]^{-1}[g h g^{-1}]^{-1}, and with power relators also
// [g]^{ord(g)} for every g. Requires c to generate the group.
Presentation build_presentation(const ClassSet &cs, bool with_power_relators);

// A closed, compressed, standardized coset table over the trivial subgroup:
// the regular representation of the presented group.
struct CosetTable {
  std::size_t ngens = 0;
  std::uint32_t size = 0;
  // row-major: entry(c, col) with col = 2*(g-1) for generator g, +1 for its
  // inverse
  std::vector<std::uint32_t> table;

  std::uint32_t entry(std::uint32_t coset, std::size_t col) const {
    return table[coset * 2 * ngens + col];
  }
};

// Todd-Coxeter coset enumeration over the trivial subgroup. Throws
// CapExceeded("max-cosets") when the table does not close within max_cosets
// defined cosets -- inconclusive, not a proof of infiniteness.
CosetTable coset_enumerate(const Presentation &p, std::uint64_t max_cosets);

// The finite quotient S_c of U(H, c) by the central elements [g]^{ord(g)},
// with its projection to H. Elements of S_c are coset indices of the regular
// representation; index 0 is the identity.
class SchurCover {
public:
  SchurCover(ClassSet cs, std::uint64_t max_cosets, std::uint64_t element_cap);

  const ClassSet &class_set() const { return cs_; }
  const CosetTable &table() const { return table_; }
  std::uint64_t size() const { return table_.size; }
  std::uint64_t kernel_order() const { return kernel_order_; }
  unsigned exponent() const { return exponent_; }

  // group operations in the regular representation
  std::uint32_t identity() const { return 0; }
  std::uint32_t mult(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t pow(std::uint32_t a, long long e) const;
  // image of the generator [g] for the pos-th element of c
  std::uint32_t gen_element(std::size_t member_pos) const;
  std::uint32_t gen_element_of(const Perm &g) const;

  // projection S_c -> H
  const Perm &project(std::uint32_t a) const { return projection_[a]; }

  // image of h in H^ab as the lex-least element of its coset mod [H, H]
  const Perm &abelianized(const Perm &h) const;
  std::uint64_t abelian_order() const { return hab_order_; }

private:
  std::uint32_t apply_word(std::uint32_t from, const std::vector<int> &word) const;

  ClassSet cs_;
  CosetTable table_;
  std::vector<std::vector<int>> words_;  // defining word per coset
  std::vector<Perm> projection_;
  std::uint64_t kernel_order_ = 0;
  unsigned exponent_ = 1;
  std::unordered_map<Perm, Perm, PermHash> hab_rep_;
  std::uint64_t hab_order_ = 1;
};

// The lifting invariant of a tuple: the trace of [g_1]...[g_n] through the
// cover, paired with the (H, c)-multidiscriminant.
struct LiftInvariant {
  std::uint32_t s_part = 0;
  Multidiscriminant psi;

  friend bool operator==(const LiftInvariant &, const LiftInvariant &) = default;
};

LiftInvariant lifting_invariant(const GTuple &t, const SchurCover &cover);
LiftInvariant lifting_invariant(const Component &x, const SchurCover &cover);
LiftInvariant invariant_product(const LiftInvariant &u, const LiftInvariant &v,
                                const SchurCover &cover);

// tilde-pi: the product over classes of the abelianized representative raised
// to the class count, as an element of H^ab (lex-least coset member).
Perm tilde_pi(const Multidiscriminant &psi, const SchurCover &cover);

// w(class, u) = lift(g)^{-u} * lift(g^u) for the class representative g; a
// central element of S_c, independent of the representative choice.
std::uint32_t w_element(std::size_t class_pos, unsigned u, const SchurCover &cover);

// The unit k acts on an invariant (s, psi) as
//   ( s^u * prod_over_classes w(class, u)^{psi(class)} , psi o p_k )
// with u = k^{-1} mod exponent.
LiftInvariant galois_act_invariant(const LiftInvariant &v, unsigned k,
                                   const SchurCover &cover);

// Empirical Conway-Parker threshold: the least M such that, for every count
// vector psi with min(psi) >= M and total <= degree_cap, the components with
// monodromy H, class support c and multidiscriminant psi biject onto the
// kernel fiber of the cover (kernel_order of them when tilde_pi(psi) is
// trivial, none otherwise, with pairwise distinct s-parts). Returns nullopt
// (not stabilized) when no such M is observable within degree_cap.
std::optional<std::uint64_t> estimate_m_big(const SchurCover &cover, unsigned degree_cap,
                                            std::uint64_t orbit_cap);

} // namespace hurwitz

#endif
