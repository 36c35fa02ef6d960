#ifndef HURWITZ_ORBIT_ENGINE_HPP
#define HURWITZ_ORBIT_ENGINE_HPP

// Internal machinery for braid-orbit closures: interned entry alphabets with
// lazy conjugation tables, packed tuple keys, and flat hash containers sized
// for multi-million-node orbits. Not part of the public API.

#include <cstdint>
#include <cstring>
#include <string>
#include <unordered_map>
#include <vector>

#include "hurwitz/component.hpp"

namespace hurwitz::detail {

// The set of elements an orbit can touch, sorted so that id order equals the
// element order (key comparisons then agree with tuple lex order).
class Alphabet {
public:
  // Closure of the seed elements under mutual conjugation x y x^{-1} and
  // x^{-1} y x: the union of the <seeds>-classes of the seeds.
  static Alphabet closure_of(const std::vector<Perm> &seeds, std::uint64_t cap);
  // A set already closed under the relevant conjugations (e.g. a class set).
  static Alphabet from_closed(const std::vector<Perm> &members);

  int id_of(const Perm &p) const {
    auto it = index_.find(p);
    return it == index_.end() ? -1 : it->second;
  }
  const Perm &perm(int id) const { return elems_[static_cast<std::size_t>(id)]; }
  std::size_t size() const { return elems_.size(); }
  bool all_commute() const { return all_commute_; }

  // id of b^a = a b a^{-1}
  std::int32_t conj(int a, int b) const;
  // id of b^{a^{-1}} = a^{-1} b a
  std::int32_t conj_inv(int a, int b) const;

private:
  void finalize();

  std::vector<Perm> elems_; // sorted
  std::vector<Perm> invs_;
  std::unordered_map<Perm, int, PermHash> index_;
  bool all_commute_ = false;
  mutable std::vector<std::vector<std::int32_t>> cj_, cji_; // lazy rows, -1 unset
};

// Fixed-width id packing. Tuples pack into one uint64 whenever
// n * bits_per_id <= 63 (so the empty-slot sentinel stays free); otherwise
// keys are 2-byte big-endian strings. Either encoding compares like the
// underlying tuple, most significant entry first.
struct KeyCodec {
  std::size_t n = 0;
  unsigned bits = 1;
  bool packed = false;

  KeyCodec() = default;
  KeyCodec(std::size_t tuple_len, std::size_t alphabet_size);

  std::uint64_t pack(const std::int32_t *ids) const {
    std::uint64_t k = 0;
    for (std::size_t i = 0; i < n; ++i)
      k = (k << bits) | static_cast<std::uint64_t>(ids[i]);
    return k;
  }
  void unpack(std::uint64_t key, std::int32_t *out) const {
    const std::uint64_t mask = (1ull << bits) - 1;
    for (std::size_t i = n; i-- > 0;) {
      out[i] = static_cast<std::int32_t>(key & mask);
      key >>= bits;
    }
  }
  std::string pack_str(const std::int32_t *ids) const {
    std::string s(2 * n, '\0');
    for (std::size_t i = 0; i < n; ++i) {
      s[2 * i] = static_cast<char>((ids[i] >> 8) & 0xff);
      s[2 * i + 1] = static_cast<char>(ids[i] & 0xff);
    }
    return s;
  }
  void unpack_str(const std::string &s, std::int32_t *out) const {
    for (std::size_t i = 0; i < n; ++i)
      out[i] = (static_cast<std::int32_t>(static_cast<unsigned char>(s[2 * i])) << 8) |
               static_cast<std::int32_t>(static_cast<unsigned char>(s[2 * i + 1]));
  }
};

inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Open-addressing uint64 hash set; keys must be < 2^63.
class U64Set {
public:
  U64Set() { slots_.assign(1024, kEmpty); }

  bool insert(std::uint64_t k) {
    std::size_t mask = slots_.size() - 1;
    std::size_t i = static_cast<std::size_t>(mix64(k)) & mask;
    while (slots_[i] != kEmpty) {
      if (slots_[i] == k)
        return false;
      i = (i + 1) & mask;
    }
    slots_[i] = k;
    if (++count_ * 5 >= slots_.size() * 3)
      grow();
    return true;
  }
  std::size_t size() const { return count_; }

private:
  static constexpr std::uint64_t kEmpty = ~0ull;
  void grow() {
    std::vector<std::uint64_t> old;
    old.swap(slots_);
    slots_.assign(old.size() * 2, kEmpty);
    std::size_t mask = slots_.size() - 1;
    for (std::uint64_t k : old) {
      if (k == kEmpty)
        continue;
      std::size_t i = static_cast<std::size_t>(mix64(k)) & mask;
      while (slots_[i] != kEmpty)
        i = (i + 1) & mask;
      slots_[i] = k;
    }
  }
  std::vector<std::uint64_t> slots_;
  std::size_t count_ = 0;
};

// Open-addressing uint64 -> int32 map (same layout constraints as U64Set).
class U64Map {
public:
  U64Map() : keys_(1024, kEmpty), vals_(1024, -1) {}

  // Returns the stored value, or inserts `fresh` and returns -1 for "new".
  std::int32_t find(std::uint64_t k) const {
    std::size_t mask = keys_.size() - 1;
    std::size_t i = static_cast<std::size_t>(mix64(k)) & mask;
    while (keys_[i] != kEmpty) {
      if (keys_[i] == k)
        return vals_[i];
      i = (i + 1) & mask;
    }
    return -1;
  }
  void insert(std::uint64_t k, std::int32_t v) {
    std::size_t mask = keys_.size() - 1;
    std::size_t i = static_cast<std::size_t>(mix64(k)) & mask;
    while (keys_[i] != kEmpty) {
      if (keys_[i] == k) {
        vals_[i] = v;
        return;
      }
      i = (i + 1) & mask;
    }
    keys_[i] = k;
    vals_[i] = v;
    if (++count_ * 5 >= keys_.size() * 3)
      grow();
  }
  std::size_t size() const { return count_; }

private:
  static constexpr std::uint64_t kEmpty = ~0ull;
  void grow() {
    std::vector<std::uint64_t> ok;
    std::vector<std::int32_t> ov;
    ok.swap(keys_);
    ov.swap(vals_);
    keys_.assign(ok.size() * 2, kEmpty);
    vals_.assign(ov.size() * 2, -1);
    std::size_t mask = keys_.size() - 1;
    for (std::size_t j = 0; j < ok.size(); ++j) {
      if (ok[j] == kEmpty)
        continue;
      std::size_t i = static_cast<std::size_t>(mix64(ok[j])) & mask;
      while (keys_[i] != kEmpty)
        i = (i + 1) & mask;
      keys_[i] = ok[j];
      vals_[i] = ov[j];
    }
  }
  std::vector<std::uint64_t> keys_;
  std::vector<std::int32_t> vals_;
  std::size_t count_ = 0;
};

struct OrbitResult {
  std::vector<std::int32_t> canonical_ids;
  std::uint64_t size = 0;
};

// Closure of a single seed tuple under the braid moves; visited keys are
// private to the call. Throws CapExceeded past orbit_cap.
OrbitResult orbit_closure(const Alphabet &alpha, const std::vector<std::int32_t> &seed,
                          std::uint64_t orbit_cap);

// n! / prod(multiplicities!) for a sorted id tuple, capped.
std::uint64_t multiset_orbit_size(const std::vector<std::int32_t> &sorted_ids,
                                  std::uint64_t cap);

// Shared-visited orbit engine: many seeds over one (alphabet, n) universe,
// deduplicating orbits across seeds. When the whole alphabet commutes, orbits
// are multisets and are resolved without any closure run.
class OrbitUniverse {
public:
  OrbitUniverse(const Alphabet *alpha, std::size_t n, std::uint64_t orbit_cap);

  // Index of the orbit containing the seed (closing it first if unseen).
  std::int32_t orbit_index(const std::vector<std::int32_t> &seed_ids);
  const std::vector<OrbitResult> &orbits() const { return orbits_; }

private:
  const Alphabet *alpha_;
  std::size_t n_;
  std::uint64_t cap_;
  KeyCodec codec_;
  U64Map packed_seen_;
  std::unordered_map<std::string, std::int32_t> str_seen_;
  std::vector<OrbitResult> orbits_;
};

// Builds a Component from a canonical id tuple.
Component make_component(const Alphabet &alpha, const std::vector<std::int32_t> &canonical_ids,
                         std::uint64_t orbit_size, unsigned points);

} // namespace hurwitz::detail

#endif
