#ifndef HURWITZ_CLASS_SET_HPP
#define HURWITZ_CLASS_SET_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "hurwitz/perm_group.hpp"

namespace hurwitz {

// An (H, c) pair: a group H together with a conjugation-invariant subset c,
// plus the conjugacy-class bookkeeping shared by the multidiscriminant,
// rationality and lifting machinery. D is the set of H-classes inside c.
class ClassSet {
public:
  // Validates that every member lies in H and that c is closed under
  // H-conjugation. Members are deduplicated and sorted.
  ClassSet(std::shared_ptr<const PermGroup> group, std::vector<Perm> members,
           std::uint64_t element_cap);

  const PermGroup &group() const { return *group_; }
  std::shared_ptr<const PermGroup> group_ptr() const { return group_; }
  const ClassTable &classes() const { return *classes_; }
  std::shared_ptr<const ClassTable> classes_ptr() const { return classes_; }
  const std::vector<Perm> &members() const { return members_; } // sorted
  // Class ids (into classes()) of the classes contained in c, sorted.
  const std::vector<int> &class_ids() const { return class_ids_; }

  bool contains(const Perm &p) const;
  // Position in class_ids() of p's class, or -1 when p lies outside c.
  int class_pos(const Perm &p) const;
  const Perm &class_rep(int pos) const { return classes_->reps[class_ids_[pos]]; }
  const std::vector<Perm> &class_members(int pos) const {
    return classes_->members[class_ids_[pos]];
  }
  std::size_t num_classes() const { return class_ids_.size(); }

private:
  std::shared_ptr<const PermGroup> group_;
  std::shared_ptr<const ClassTable> classes_;
  std::vector<Perm> members_;
  std::vector<int> class_ids_;
  std::vector<int> pos_of_class_; // class id -> position in class_ids_, -1 outside
};

// Union of the H-classes of the given elements (the smallest
// conjugation-invariant subset of H containing them), sorted.
std::vector<Perm> class_closure(const PermGroup &h, std::vector<Perm> seeds);

// Per-class occurrence counts over the classes of an (H, c) pair.
// counts[i] belongs to class_set.class_ids()[i].
struct Multidiscriminant {
  std::vector<std::uint32_t> counts;

  std::uint64_t total() const;
  std::uint32_t min_count() const; // 0 for an empty class list
  friend bool operator==(const Multidiscriminant &, const Multidiscriminant &) = default;
};

} // namespace hurwitz

#endif
