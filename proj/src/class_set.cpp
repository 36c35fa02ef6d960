#include "hurwitz/class_set.hpp"

#include <algorithm>
#include <set>

namespace hurwitz {

ClassSet::ClassSet(std::shared_ptr<const PermGroup> group, std::vector<Perm> members,
                   std::uint64_t element_cap)
    : group_(std::move(group)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (const Perm &m : members_) {
    if (m.degree() != group_->degree())
      throw DomainError("class set member degree mismatch");
    if (!group_->contains(m))
      throw DomainError("class set member " + cycle_string(m) + " is not in the group");
  }
  for (const Perm &m : members_)
    for (const Perm &g : group_->generators())
      if (!std::binary_search(members_.begin(), members_.end(), conjugate(m, g)))
        throw DomainError("class set is not closed under conjugation");

  classes_ = std::make_shared<ClassTable>(conjugacy_classes(group_, element_cap));
  pos_of_class_.assign(classes_->num_classes(), -1);
  for (const Perm &m : members_) {
    int id = classes_->class_index(m);
    if (pos_of_class_[id] < 0) {
      pos_of_class_[id] = 0; // mark, fix positions below
      class_ids_.push_back(id);
    }
  }
  std::sort(class_ids_.begin(), class_ids_.end());
  for (std::size_t i = 0; i < class_ids_.size(); ++i)
    pos_of_class_[class_ids_[i]] = static_cast<int>(i);
}

bool ClassSet::contains(const Perm &p) const {
  return std::binary_search(members_.begin(), members_.end(), p);
}

int ClassSet::class_pos(const Perm &p) const {
  int id = classes_->class_index(p);
  if (id < 0)
    return -1;
  int pos = pos_of_class_[id];
  // a class can meet c only if it is contained in c; position -1 otherwise
  return pos;
}

std::vector<Perm> class_closure(const PermGroup &h, std::vector<Perm> seeds) {
  std::set<Perm> seen(seeds.begin(), seeds.end());
  std::vector<Perm> work(seen.begin(), seen.end());
  for (std::size_t i = 0; i < work.size(); ++i)
    for (const Perm &g : h.generators()) {
      Perm c = conjugate(work[i], g);
      if (seen.insert(c).second)
        work.push_back(c);
    }
  return {seen.begin(), seen.end()};
}

std::uint64_t Multidiscriminant::total() const {
  std::uint64_t t = 0;
  for (std::uint32_t c : counts)
    t += c;
  return t;
}

std::uint32_t Multidiscriminant::min_count() const {
  std::uint32_t m = 0;
  for (std::size_t i = 0; i < counts.size(); ++i)
    m = i == 0 ? counts[i] : std::min(m, counts[i]);
  return m;
}

} // namespace hurwitz
