#include "hurwitz/lifting.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace hurwitz {

Presentation build_presentation(const ClassSet &cs, bool with_power_relators) {
  const auto &c = cs.members();
  if (c.empty())
    throw DomainError("presentation needs a nonempty class set");
  {
    PermGroup generated(cs.group().degree(), c);
    if (generated.order() != cs.group().order())
      throw DomainError("class set does not generate the group");
  }
  Presentation p;
  p.ngens = c.size();
  auto index_of = [&](const Perm &g) {
    auto it = std::lower_bound(c.begin(), c.end(), g);
    return static_cast<int>(it - c.begin()) + 1; // 1-based
  };
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = 0; j < c.size(); ++j) {
      int gi = static_cast<int>(i) + 1, gj = static_cast<int>(j) + 1;
      int gc = index_of(conjugate(c[j], c[i])); // [g][h][g]^{-1} = [g h g^{-1}]
      p.relators.push_back({gi, gj, -gi, -gc});
    }
  }
  if (with_power_relators) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      std::vector<int> w(element_order(c[i]), static_cast<int>(i) + 1);
      p.relators.push_back(std::move(w));
    }
  }
  return p;
}

namespace {

constexpr std::uint32_t kUndef = ~0u;

// HLT-style enumeration with immediate coincidence processing.
class Enumerator {
public:
  Enumerator(const Presentation &p, std::uint64_t max_cosets)
      : ngens_(p.ngens), width_(2 * p.ngens), cap_(max_cosets) {
    for (const auto &w : p.relators)
      if (!w.empty())
        relators_.push_back(w);
    new_coset();
  }

  void run() {
    for (std::uint32_t a = 0; a < num_rows(); ++a) {
      if (!alive(a))
        continue;
      for (const auto &w : relators_) {
        scan_and_fill(a, w);
        if (!alive(a))
          break;
      }
      if (!alive(a))
        continue;
      for (std::size_t col = 0; col < width_; ++col)
        if (get(a, col) == kUndef)
          define(a, col);
    }
  }

  CosetTable result() const {
    // compress live cosets, then standardize numbering by a scan from 0
    std::vector<std::uint32_t> live;
    for (std::uint32_t a = 0; a < num_rows(); ++a)
      if (p_[a] == a)
        live.push_back(a);
    std::vector<std::uint32_t> newid(num_rows(), kUndef);
    for (std::uint32_t i = 0; i < live.size(); ++i)
      newid[live[i]] = i;

    std::vector<std::uint32_t> tab(live.size() * width_);
    for (std::uint32_t i = 0; i < live.size(); ++i)
      for (std::size_t col = 0; col < width_; ++col) {
        std::uint32_t t = get(live[i], col);
        if (t == kUndef)
          throw Error("coset table not closed"); // unreachable after run()
        tab[i * width_ + col] = newid[rep_const(t)];
      }

    std::vector<std::uint32_t> order(live.size(), kUndef);
    std::uint32_t next = 0;
    order[0] = next++;
    std::vector<std::uint32_t> queue{0};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      std::uint32_t a = queue[qi];
      for (std::size_t col = 0; col < width_; ++col) {
        std::uint32_t t = tab[a * width_ + col];
        if (order[t] == kUndef) {
          order[t] = next++;
          queue.push_back(t);
        }
      }
    }

    CosetTable out;
    out.ngens = ngens_;
    out.size = static_cast<std::uint32_t>(live.size());
    out.table.assign(live.size() * width_, 0);
    for (std::uint32_t a = 0; a < live.size(); ++a)
      for (std::size_t col = 0; col < width_; ++col)
        out.table[order[a] * width_ + col] = order[tab[a * width_ + col]];
    return out;
  }

private:
  std::uint32_t num_rows() const { return static_cast<std::uint32_t>(p_.size()); }
  bool alive(std::uint32_t a) const { return p_[a] == a; }
  std::uint32_t get(std::uint32_t a, std::size_t col) const { return tab_[a * width_ + col]; }
  void set(std::uint32_t a, std::size_t col, std::uint32_t v) { tab_[a * width_ + col] = v; }

  std::uint32_t new_coset() {
    if (num_rows() >= cap_)
      throw CapExceeded("max-cosets", cap_, "coset enumeration did not close");
    p_.push_back(num_rows());
    tab_.resize(tab_.size() + width_, kUndef);
    return num_rows() - 1;
  }

  static std::size_t fcol(int letter) {
    return letter > 0 ? 2 * static_cast<std::size_t>(letter - 1)
                      : 2 * static_cast<std::size_t>(-letter - 1) + 1;
  }

  std::uint32_t rep(std::uint32_t a) {
    std::uint32_t r = a;
    while (p_[r] != r)
      r = p_[r];
    while (p_[a] != r) {
      std::uint32_t nxt = p_[a];
      p_[a] = r;
      a = nxt;
    }
    return r;
  }
  std::uint32_t rep_const(std::uint32_t a) const {
    while (p_[a] != a)
      a = p_[a];
    return a;
  }

  void merge(std::uint32_t a, std::uint32_t b) {
    a = rep(a);
    b = rep(b);
    if (a == b)
      return;
    if (a > b)
      std::swap(a, b);
    p_[b] = a;
    dead_queue_.push_back(b);
  }

  void coincidence(std::uint32_t a, std::uint32_t b) {
    merge(a, b);
    while (!dead_queue_.empty()) {
      std::uint32_t gamma = dead_queue_.front();
      dead_queue_.pop_front();
      for (std::size_t col = 0; col < width_; ++col) {
        std::uint32_t delta = get(gamma, col);
        if (delta == kUndef)
          continue;
        set(delta, col ^ 1, kUndef); // the back-reference to the dead row
        std::uint32_t mu = rep(gamma), nu = rep(delta);
        std::uint32_t mu_t = get(mu, col);
        if (mu_t != kUndef) {
          merge(nu, mu_t);
        } else {
          std::uint32_t nu_t = get(nu, col ^ 1);
          if (nu_t != kUndef) {
            merge(mu, nu_t);
          } else {
            set(mu, col, nu);
            set(nu, col ^ 1, mu);
          }
        }
      }
    }
  }

  void define(std::uint32_t a, std::size_t col) {
    std::uint32_t b = new_coset();
    set(a, col, b);
    set(b, col ^ 1, a);
  }

  void scan_and_fill(std::uint32_t a, const std::vector<int> &w) {
    std::uint32_t f = rep(a), b = rep(a);
    std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(w.size()) - 1;
    for (;;) {
      while (i <= j && get(f, fcol(w[static_cast<std::size_t>(i)])) != kUndef) {
        f = get(f, fcol(w[static_cast<std::size_t>(i)]));
        ++i;
      }
      if (i > j) {
        if (f != b)
          coincidence(f, b);
        return;
      }
      while (j >= i && get(b, fcol(w[static_cast<std::size_t>(j)]) ^ 1) != kUndef) {
        b = get(b, fcol(w[static_cast<std::size_t>(j)]) ^ 1);
        --j;
      }
      if (j < i) {
        if (f != b)
          coincidence(f, b);
        return;
      }
      if (j == i) { // deduction closes the gap
        set(f, fcol(w[static_cast<std::size_t>(i)]), b);
        set(b, fcol(w[static_cast<std::size_t>(i)]) ^ 1, f);
        return;
      }
      define(f, fcol(w[static_cast<std::size_t>(i)]));
      f = get(f, fcol(w[static_cast<std::size_t>(i)]));
      ++i;
    }
  }

  std::size_t ngens_, width_;
  std::uint64_t cap_;
  std::vector<std::vector<int>> relators_;
  std::vector<std::uint32_t> tab_;
  std::vector<std::uint32_t> p_;
  std::deque<std::uint32_t> dead_queue_;
};

void validate_table(const CosetTable &t, const Presentation &p) {
  const std::size_t width = 2 * t.ngens;
  for (std::uint32_t a = 0; a < t.size; ++a)
    for (std::size_t col = 0; col < width; ++col)
      if (t.entry(t.entry(a, col), col ^ 1) != a)
        throw Error("coset table is not symmetric");
  for (std::uint32_t a = 0; a < t.size; ++a) {
    for (const auto &w : p.relators) {
      std::uint32_t c = a;
      for (int letter : w)
        c = t.entry(c, letter > 0 ? 2 * static_cast<std::size_t>(letter - 1)
                                  : 2 * static_cast<std::size_t>(-letter - 1) + 1);
      if (c != a)
        throw Error("coset table violates a relator");
    }
  }
}

} // namespace

CosetTable coset_enumerate(const Presentation &p, std::uint64_t max_cosets) {
  Enumerator e(p, max_cosets);
  e.run();
  CosetTable t = e.result();
  validate_table(t, p);
  return t;
}

SchurCover::SchurCover(ClassSet cs, std::uint64_t max_cosets, std::uint64_t element_cap)
    : cs_(std::move(cs)) {
  Presentation p = build_presentation(cs_, true);
  table_ = coset_enumerate(p, max_cosets);

  // defining word of each coset from a spanning scan
  words_.assign(table_.size, {});
  std::vector<bool> have(table_.size, false);
  have[0] = true;
  std::vector<std::uint32_t> queue{0};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    std::uint32_t a = queue[qi];
    for (std::size_t col = 0; col < 2 * table_.ngens; ++col) {
      std::uint32_t t = table_.entry(a, col);
      if (!have[t]) {
        have[t] = true;
        words_[t] = words_[a];
        words_[t].push_back(col % 2 == 0 ? static_cast<int>(col / 2) + 1
                                         : -(static_cast<int>(col / 2) + 1));
        queue.push_back(t);
      }
    }
  }

  // projection to H: evaluate each word on the generators
  projection_.reserve(table_.size);
  const auto &c = cs_.members();
  for (std::uint32_t a = 0; a < table_.size; ++a) {
    Perm h(cs_.group().degree());
    for (int letter : words_[a]) {
      const Perm &g = c[static_cast<std::size_t>(std::abs(letter)) - 1];
      h = compose(h, letter > 0 ? g : inverse(g));
    }
    projection_.push_back(std::move(h));
  }
  std::set<Perm> image(projection_.begin(), projection_.end());
  if (image.size() != cs_.group().order())
    throw Error("cover projection is not surjective");
  if (table_.size % cs_.group().order() != 0)
    throw Error("cover size is not a multiple of the group order");
  kernel_order_ = table_.size / cs_.group().order();

  OrderStats st = order_statistics(cs_.group(), element_cap);
  exponent_ = static_cast<unsigned>(st.exponent);

  // H^ab: cosets of the normal closure of the generator commutators
  const PermGroup &h = cs_.group();
  std::vector<Perm> kgens;
  for (const Perm &a : h.generators())
    for (const Perm &b : h.generators()) {
      Perm comm = compose(compose(a, b), inverse(compose(b, a)));
      if (!comm.is_identity())
        kgens.push_back(comm);
    }
  for (;;) {
    PermGroup k(h.degree(), kgens);
    std::size_t before = kgens.size();
    for (const Perm &kg : std::vector<Perm>(kgens))
      for (const Perm &g : h.generators()) {
        Perm c2 = conjugate(kg, g);
        if (!k.contains(c2))
          kgens.push_back(c2);
      }
    if (kgens.size() == before)
      break;
  }
  PermGroup commutator(h.degree(), kgens);
  std::vector<Perm> kelems = commutator.elements(element_cap);
  for (const Perm &e : h.elements(element_cap)) {
    Perm best = compose(e, kelems.front());
    for (const Perm &k : kelems) {
      Perm cand = compose(e, k);
      if (cand < best)
        best = cand;
    }
    hab_rep_.emplace(e, best);
  }
  hab_order_ = h.order() / commutator.order();
}

std::uint32_t SchurCover::apply_word(std::uint32_t from, const std::vector<int> &word) const {
  std::uint32_t c = from;
  for (int letter : word)
    c = table_.entry(c, letter > 0 ? 2 * static_cast<std::size_t>(letter - 1)
                                   : 2 * static_cast<std::size_t>(-letter - 1) + 1);
  return c;
}

std::uint32_t SchurCover::mult(std::uint32_t a, std::uint32_t b) const {
  return apply_word(a, words_[b]);
}

std::uint32_t SchurCover::inv(std::uint32_t a) const {
  const auto &w = words_[a];
  std::uint32_t c = 0;
  for (std::size_t i = w.size(); i-- > 0;) {
    int letter = -w[i];
    c = table_.entry(c, letter > 0 ? 2 * static_cast<std::size_t>(letter - 1)
                                   : 2 * static_cast<std::size_t>(-letter - 1) + 1);
  }
  return c;
}

std::uint32_t SchurCover::pow(std::uint32_t a, long long e) const {
  std::uint32_t base = e < 0 ? inv(a) : a;
  std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
  std::uint32_t acc = 0;
  while (k) {
    if (k & 1)
      acc = mult(acc, base);
    base = mult(base, base);
    k >>= 1;
  }
  return acc;
}

std::uint32_t SchurCover::gen_element(std::size_t member_pos) const {
  return table_.entry(0, 2 * member_pos);
}

std::uint32_t SchurCover::gen_element_of(const Perm &g) const {
  const auto &c = cs_.members();
  auto it = std::lower_bound(c.begin(), c.end(), g);
  if (it == c.end() || *it != g)
    throw DomainError("element outside c: " + cycle_string(g));
  return gen_element(static_cast<std::size_t>(it - c.begin()));
}

const Perm &SchurCover::abelianized(const Perm &h) const {
  auto it = hab_rep_.find(h);
  if (it == hab_rep_.end())
    throw DomainError("element outside H: " + cycle_string(h));
  return it->second;
}

LiftInvariant lifting_invariant(const GTuple &t, const SchurCover &cover) {
  LiftInvariant v;
  v.psi = multidiscriminant(t, cover.class_set());
  std::uint32_t s = cover.identity();
  for (const Perm &e : t.entries())
    s = cover.mult(s, cover.gen_element_of(e));
  v.s_part = s;
  return v;
}

LiftInvariant lifting_invariant(const Component &x, const SchurCover &cover) {
  return lifting_invariant(x.canonical(), cover);
}

LiftInvariant invariant_product(const LiftInvariant &u, const LiftInvariant &v,
                                const SchurCover &cover) {
  if (u.psi.counts.size() != v.psi.counts.size())
    throw DomainError("invariant_product: cover mismatch");
  LiftInvariant w;
  w.s_part = cover.mult(u.s_part, v.s_part);
  w.psi.counts.resize(u.psi.counts.size());
  for (std::size_t i = 0; i < u.psi.counts.size(); ++i)
    w.psi.counts[i] = u.psi.counts[i] + v.psi.counts[i];
  return w;
}

Perm tilde_pi(const Multidiscriminant &psi, const SchurCover &cover) {
  const ClassSet &cs = cover.class_set();
  Perm prod(cs.group().degree());
  for (std::size_t pos = 0; pos < psi.counts.size(); ++pos)
    prod = compose(prod, power(cs.class_rep(static_cast<int>(pos)),
                               static_cast<long long>(psi.counts[pos])));
  return cover.abelianized(prod);
}

std::uint32_t w_element(std::size_t class_pos, unsigned u, const SchurCover &cover) {
  const ClassSet &cs = cover.class_set();
  const Perm &g = cs.class_rep(static_cast<int>(class_pos));
  Perm gu = power(g, static_cast<long long>(u));
  if (!cs.contains(gu))
    throw DomainError("power leaves c: " + cycle_string(g) + "^" + std::to_string(u));
  std::uint32_t w = cover.mult(cover.pow(cover.gen_element_of(g), -static_cast<long long>(u)),
                               cover.gen_element_of(gu));
  if (!cover.project(w).is_identity())
    throw Error("w element does not project to the identity");
  return w;
}

LiftInvariant galois_act_invariant(const LiftInvariant &v, unsigned k,
                                   const SchurCover &cover) {
  const unsigned n = cover.exponent();
  unsigned u = unit_inverse(k % n == 0 ? n : k % n, n);
  std::vector<int> pmap = class_power_map(cover.class_set(), k);
  LiftInvariant out;
  std::uint32_t s = cover.pow(v.s_part, static_cast<long long>(u));
  for (std::size_t pos = 0; pos < v.psi.counts.size(); ++pos)
    s = cover.mult(s, cover.pow(w_element(pos, u, cover),
                                static_cast<long long>(v.psi.counts[pos])));
  out.s_part = s;
  out.psi = act_multidiscriminant(v.psi, pmap);
  return out;
}

std::optional<std::uint64_t> estimate_m_big(const SchurCover &cover, unsigned degree_cap,
                                            std::uint64_t orbit_cap) {
  if (degree_cap == 0)
    return 0; // empty degree range
  const ClassSet &cs = cover.class_set();
  const std::size_t nd = cs.num_classes();

  // bucket the qualifying components (monodromy H, class support all of c)
  std::map<std::vector<std::uint32_t>, std::vector<std::uint32_t>> s_parts_by_psi;
  EnumOptions opts;
  opts.monodromy_equals = cs.group_ptr();
  for (unsigned n = 1; n <= degree_cap; ++n) {
    for (const Component &x : enumerate_components(cs, n, opts, orbit_cap)) {
      LiftInvariant v = lifting_invariant(x, cover);
      if (v.psi.min_count() == 0)
        continue; // some class of c does not appear
      s_parts_by_psi[v.psi.counts].push_back(v.s_part);
    }
  }

  const Perm hab_identity = cover.abelianized(Perm(cs.group().degree()));
  auto fiber_ok = [&](const std::vector<std::uint32_t> &psi) {
    Multidiscriminant mu{psi};
    std::uint64_t expected = tilde_pi(mu, cover) == hab_identity ? cover.kernel_order() : 0;
    auto it = s_parts_by_psi.find(psi);
    std::size_t actual = it == s_parts_by_psi.end() ? 0 : it->second.size();
    if (actual != expected)
      return false;
    if (it != s_parts_by_psi.end()) {
      std::vector<std::uint32_t> seen = it->second;
      std::sort(seen.begin(), seen.end());
      if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        return false;
    }
    return true;
  };

  for (std::uint64_t m = 0; m <= degree_cap; ++m) {
    bool any = false, all_ok = true;
    // all psi with min >= m and total <= degree_cap
    std::vector<std::uint32_t> psi(nd, 0);
    auto walk = [&](auto &&self, std::size_t pos, std::uint64_t left) -> void {
      if (!all_ok)
        return;
      if (pos == nd) {
        any = true;
        if (!fiber_ok(psi))
          all_ok = false;
        return;
      }
      for (std::uint64_t v = m; v <= left; ++v) {
        psi[pos] = static_cast<std::uint32_t>(v);
        self(self, pos + 1, left - v);
      }
      psi[pos] = 0;
    };
    if (nd == 0)
      return 0; // no classes: nothing to distinguish
    walk(walk, 0, degree_cap);
    if (all_ok && any)
      return m;
  }
  return std::nullopt;
}

} // namespace hurwitz
