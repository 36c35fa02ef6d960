#include "orbit_engine.hpp"

#include <algorithm>
#include <bit>

namespace hurwitz::detail {

Alphabet Alphabet::closure_of(const std::vector<Perm> &seeds, std::uint64_t cap) {
  Alphabet a;
  for (const Perm &s : seeds) {
    if (!a.index_.count(s)) {
      a.index_.emplace(s, 0);
      a.elems_.push_back(s);
    }
  }
  // worklist over all ordered pairs, growing as new conjugates appear
  for (std::size_t i = 0; i < a.elems_.size(); ++i) {
    Perm inv_i = inverse(a.elems_[i]);
    for (std::size_t j = 0; j < a.elems_.size(); ++j) {
      for (const Perm &c : {conjugate(a.elems_[j], a.elems_[i]),
                            conjugate(a.elems_[j], inv_i)}) {
        if (!a.index_.count(c)) {
          if (a.elems_.size() >= cap)
            throw CapExceeded("max-orbit", cap, "orbit alphabet closure too large");
          a.index_.emplace(c, 0);
          a.elems_.push_back(c);
        }
      }
    }
  }
  a.finalize();
  return a;
}

Alphabet Alphabet::from_closed(const std::vector<Perm> &members) {
  Alphabet a;
  a.elems_ = members;
  a.finalize();
  return a;
}

void Alphabet::finalize() {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  index_.clear();
  invs_.clear();
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    index_.emplace(elems_[i], static_cast<int>(i));
    invs_.push_back(inverse(elems_[i]));
  }
  all_commute_ = true;
  for (std::size_t i = 0; i < elems_.size() && all_commute_; ++i)
    for (std::size_t j = i + 1; j < elems_.size(); ++j)
      if (compose(elems_[i], elems_[j]) != compose(elems_[j], elems_[i])) {
        all_commute_ = false;
        break;
      }
  cj_.assign(elems_.size(), {});
  cji_.assign(elems_.size(), {});
}

std::int32_t Alphabet::conj(int a, int b) const {
  if (all_commute_)
    return static_cast<std::int32_t>(b);
  auto &row = cj_[static_cast<std::size_t>(a)];
  if (row.empty())
    row.assign(elems_.size(), -1);
  if (row[static_cast<std::size_t>(b)] < 0) {
    auto it = index_.find(conjugate(elems_[static_cast<std::size_t>(b)],
                                    elems_[static_cast<std::size_t>(a)]));
    if (it == index_.end())
      throw Error("orbit alphabet is not conjugation-closed");
    row[static_cast<std::size_t>(b)] = it->second;
  }
  return row[static_cast<std::size_t>(b)];
}

std::int32_t Alphabet::conj_inv(int a, int b) const {
  if (all_commute_)
    return static_cast<std::int32_t>(b);
  auto &row = cji_[static_cast<std::size_t>(a)];
  if (row.empty())
    row.assign(elems_.size(), -1);
  if (row[static_cast<std::size_t>(b)] < 0) {
    auto it = index_.find(conjugate(elems_[static_cast<std::size_t>(b)],
                                    invs_[static_cast<std::size_t>(a)]));
    if (it == index_.end())
      throw Error("orbit alphabet is not conjugation-closed");
    row[static_cast<std::size_t>(b)] = it->second;
  }
  return row[static_cast<std::size_t>(b)];
}

KeyCodec::KeyCodec(std::size_t tuple_len, std::size_t alphabet_size) : n(tuple_len) {
  std::size_t m = alphabet_size > 1 ? alphabet_size - 1 : 1;
  bits = static_cast<unsigned>(std::bit_width(m));
  packed = n > 0 && n * bits <= 63;
}

namespace {

// One braid neighbor: positions p, p+1. Writes into scratch (a copy of ids).
inline void apply_move(const Alphabet &alpha, std::vector<std::int32_t> &t, std::size_t p,
                       bool use_inverse) {
  std::int32_t a = t[p], b = t[p + 1];
  if (!use_inverse) {
    t[p] = alpha.conj(a, b); // b^a
    t[p + 1] = a;
  } else {
    t[p] = b;
    t[p + 1] = alpha.conj_inv(b, a); // a^(b^{-1})
  }
}

} // namespace

OrbitResult orbit_closure(const Alphabet &alpha, const std::vector<std::int32_t> &seed,
                          std::uint64_t orbit_cap) {
  const std::size_t n = seed.size();
  OrbitResult res;
  if (n <= 1) {
    res.canonical_ids = seed;
    res.size = 1;
    return res;
  }
  KeyCodec codec(n, alpha.size());
  std::vector<std::int32_t> cur(n), nxt(n);

  if (codec.packed) {
    U64Set seen;
    std::vector<std::uint64_t> stack;
    std::uint64_t start = codec.pack(seed.data());
    seen.insert(start);
    stack.push_back(start);
    std::uint64_t best = start;
    while (!stack.empty()) {
      std::uint64_t key = stack.back();
      stack.pop_back();
      codec.unpack(key, cur.data());
      for (std::size_t p = 0; p + 1 < n; ++p) {
        for (bool invm : {false, true}) {
          nxt = cur;
          apply_move(alpha, nxt, p, invm);
          std::uint64_t k = codec.pack(nxt.data());
          if (seen.insert(k)) {
            if (seen.size() > orbit_cap)
              throw CapExceeded("max-orbit", orbit_cap, "braid orbit too large");
            if (k < best)
              best = k;
            stack.push_back(k);
          }
        }
      }
    }
    res.canonical_ids.resize(n);
    codec.unpack(best, res.canonical_ids.data());
    res.size = seen.size();
    return res;
  }

  std::unordered_map<std::string, char> seen;
  std::vector<std::string> stack;
  std::string start = codec.pack_str(seed.data());
  seen.emplace(start, 0);
  stack.push_back(start);
  std::string best = start;
  while (!stack.empty()) {
    std::string key = std::move(stack.back());
    stack.pop_back();
    codec.unpack_str(key, cur.data());
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (bool invm : {false, true}) {
        nxt = cur;
        apply_move(alpha, nxt, p, invm);
        std::string k = codec.pack_str(nxt.data());
        if (seen.emplace(k, 0).second) {
          if (seen.size() > orbit_cap)
            throw CapExceeded("max-orbit", orbit_cap, "braid orbit too large");
          if (k < best)
            best = k;
          stack.push_back(std::move(k));
        }
      }
    }
  }
  res.canonical_ids.resize(n);
  codec.unpack_str(best, res.canonical_ids.data());
  res.size = seen.size();
  return res;
}

std::uint64_t multiset_orbit_size(const std::vector<std::int32_t> &sorted_ids,
                                  std::uint64_t cap) {
  // product of binomials C(remaining, multiplicity); early-exit past cap
  unsigned __int128 total = 1;
  std::size_t remaining = sorted_ids.size();
  std::size_t i = 0;
  while (i < sorted_ids.size()) {
    std::size_t j = i;
    while (j < sorted_ids.size() && sorted_ids[j] == sorted_ids[i])
      ++j;
    std::size_t m = j - i;
    unsigned __int128 binom = 1;
    for (std::size_t t = 1; t <= m; ++t) {
      binom = binom * (remaining - m + t) / t; // exact at every step
      if (total * binom > cap)
        throw CapExceeded("max-orbit", cap, "braid orbit too large");
    }
    total *= binom;
    remaining -= m;
    i = j;
  }
  return static_cast<std::uint64_t>(total);
}

OrbitUniverse::OrbitUniverse(const Alphabet *alpha, std::size_t n, std::uint64_t orbit_cap)
    : alpha_(alpha), n_(n), cap_(orbit_cap), codec_(n, alpha->size()) {}

std::int32_t OrbitUniverse::orbit_index(const std::vector<std::int32_t> &seed_ids) {
  if (alpha_->all_commute()) {
    std::vector<std::int32_t> sorted = seed_ids;
    std::sort(sorted.begin(), sorted.end());
    std::string key = codec_.pack_str(sorted.data());
    auto it = str_seen_.find(key);
    if (it != str_seen_.end())
      return it->second;
    std::int32_t idx = static_cast<std::int32_t>(orbits_.size());
    orbits_.push_back(OrbitResult{sorted, multiset_orbit_size(sorted, cap_)});
    str_seen_.emplace(std::move(key), idx);
    return idx;
  }

  auto record_orbit = [&](const std::vector<std::int32_t> &seed) -> std::int32_t {
    // re-walk the orbit, tagging every member with the new orbit index
    std::int32_t idx = static_cast<std::int32_t>(orbits_.size());
    OrbitResult res;
    std::vector<std::int32_t> cur(n_), nxt(n_);
    if (codec_.packed) {
      std::vector<std::uint64_t> stack;
      std::uint64_t start = codec_.pack(seed.data());
      std::uint64_t best = start, count = 1;
      packed_seen_.insert(start, idx);
      stack.push_back(start);
      while (!stack.empty()) {
        std::uint64_t key = stack.back();
        stack.pop_back();
        codec_.unpack(key, cur.data());
        for (std::size_t p = 0; p + 1 < n_; ++p) {
          for (bool invm : {false, true}) {
            nxt = cur;
            apply_move(*alpha_, nxt, p, invm);
            std::uint64_t k = codec_.pack(nxt.data());
            if (packed_seen_.find(k) < 0) {
              packed_seen_.insert(k, idx);
              if (++count > cap_)
                throw CapExceeded("max-orbit", cap_, "braid orbit too large");
              if (k < best)
                best = k;
              stack.push_back(k);
            }
          }
        }
      }
      res.canonical_ids.resize(n_);
      codec_.unpack(best, res.canonical_ids.data());
      res.size = count;
    } else {
      std::vector<std::string> stack;
      std::string start = codec_.pack_str(seed.data());
      std::string best = start;
      std::uint64_t count = 1;
      str_seen_.emplace(start, idx);
      stack.push_back(start);
      while (!stack.empty()) {
        std::string key = std::move(stack.back());
        stack.pop_back();
        codec_.unpack_str(key, cur.data());
        for (std::size_t p = 0; p + 1 < n_; ++p) {
          for (bool invm : {false, true}) {
            nxt = cur;
            apply_move(*alpha_, nxt, p, invm);
            std::string k = codec_.pack_str(nxt.data());
            if (str_seen_.emplace(k, idx).second) {
              if (++count > cap_)
                throw CapExceeded("max-orbit", cap_, "braid orbit too large");
              if (k < best)
                best = k;
              stack.push_back(std::move(k));
            }
          }
        }
      }
      res.canonical_ids.resize(n_);
      codec_.unpack_str(best, res.canonical_ids.data());
      res.size = count;
    }
    orbits_.push_back(std::move(res));
    return idx;
  };

  if (n_ == 0) {
    if (orbits_.empty())
      orbits_.push_back(OrbitResult{{}, 1});
    return 0;
  }
  if (codec_.packed) {
    std::int32_t found = packed_seen_.find(codec_.pack(seed_ids.data()));
    if (found >= 0)
      return found;
  } else {
    auto it = str_seen_.find(codec_.pack_str(seed_ids.data()));
    if (it != str_seen_.end())
      return it->second;
  }
  return record_orbit(seed_ids);
}

Component make_component(const Alphabet &alpha, const std::vector<std::int32_t> &canonical_ids,
                         std::uint64_t orbit_size, unsigned points) {
  std::vector<Perm> entries;
  entries.reserve(canonical_ids.size());
  for (std::int32_t id : canonical_ids)
    entries.push_back(alpha.perm(id));
  std::vector<Perm> gens = entries;
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  auto monodromy = std::make_shared<PermGroup>(points, std::move(gens));
  return Component(GTuple(points, std::move(entries)), orbit_size, std::move(monodromy));
}

} // namespace hurwitz::detail
