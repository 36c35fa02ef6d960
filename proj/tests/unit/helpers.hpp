#ifndef HURWITZ_TEST_HELPERS_HPP
#define HURWITZ_TEST_HELPERS_HPP

#include <algorithm>
#include <deque>
#include <memory>
#include <set>
#include <vector>

#include "hurwitz/component.hpp"

namespace hw_test {

using namespace hurwitz;

inline Perm P(const std::string &cycles, unsigned degree) {
  return parse_cycles(cycles, degree);
}

inline std::shared_ptr<PermGroup> make_group(unsigned degree,
                                             const std::vector<std::string> &cycles) {
  std::vector<Perm> gens;
  for (const auto &c : cycles)
    gens.push_back(P(c, degree));
  return std::make_shared<PermGroup>(degree, std::move(gens));
}

inline std::shared_ptr<PermGroup> trivial_group(unsigned degree) {
  return std::make_shared<PermGroup>(degree, std::vector<Perm>{});
}

inline std::shared_ptr<PermGroup> z_cyclic(unsigned n) {
  std::vector<std::uint32_t> img(n);
  for (unsigned i = 0; i < n; ++i)
    img[i] = (i + 1) % n;
  return std::make_shared<PermGroup>(n, std::vector<Perm>{Perm{std::move(img)}});
}

inline Perm z_elem(unsigned n, long long e) { // residue e as a power of the n-cycle
  std::vector<std::uint32_t> img(n);
  for (unsigned i = 0; i < n; ++i)
    img[i] = (i + 1) % n;
  return power(Perm{std::move(img)}, e);
}

inline std::shared_ptr<PermGroup> s3() { return make_group(3, {"(1, 2)", "(1, 2, 3)"}); }
inline std::shared_ptr<PermGroup> s4() { return make_group(4, {"(1, 2)", "(1, 2, 3, 4)"}); }
inline std::shared_ptr<PermGroup> a4() { return make_group(4, {"(1, 2, 3)", "(1, 2, 4)"}); }
inline std::shared_ptr<PermGroup> d4() { return make_group(4, {"(1, 2, 3, 4)", "(1, 3)"}); }
inline std::shared_ptr<PermGroup> v4() {
  return make_group(4, {"(1, 2)(3, 4)", "(1, 3)(2, 4)"});
}

inline GTuple T(unsigned points, const std::vector<std::string> &cycles) {
  std::vector<Perm> entries;
  for (const auto &c : cycles)
    entries.push_back(P(c, points));
  return GTuple(points, std::move(entries));
}

// Independent reference: the full braid orbit as a set of explicit tuples,
// closed with the public braid_move only. Used as the oracle for canonical
// forms and orbit sizes computed by the packed engine.
inline std::set<std::vector<Perm>> reference_orbit(const GTuple &t, std::size_t cap = 2000000) {
  std::set<std::vector<Perm>> seen{t.entries()};
  std::deque<std::vector<Perm>> queue{t.entries()};
  while (!queue.empty()) {
    GTuple cur(t.points(), queue.front());
    queue.pop_front();
    for (std::size_t i = 1; i < cur.size(); ++i) {
      for (bool inv : {false, true}) {
        GTuple nxt = braid_move(cur, i, inv);
        if (seen.insert(nxt.entries()).second) {
          if (seen.size() > cap)
            throw std::runtime_error("reference orbit too large");
          queue.push_back(nxt.entries());
        }
      }
    }
  }
  return seen;
}

// All product-one tuples of the given degree with entries from c.
inline std::vector<GTuple> all_product_one(unsigned points, const std::vector<Perm> &c,
                                           unsigned n) {
  std::vector<GTuple> out;
  std::vector<Perm> cur;
  auto rec = [&](auto &&self, Perm prefix) -> void {
    if (cur.size() + 1 == n) {
      Perm last = inverse(prefix);
      if (std::find(c.begin(), c.end(), last) != c.end()) {
        cur.push_back(last);
        out.push_back(GTuple(points, cur));
        cur.pop_back();
      }
      return;
    }
    for (const Perm &e : c) {
      cur.push_back(e);
      self(self, compose(prefix, e));
      cur.pop_back();
    }
  };
  if (n == 0) {
    out.push_back(GTuple(points));
    return out;
  }
  rec(rec, Perm(points));
  return out;
}

} // namespace hw_test

#endif
