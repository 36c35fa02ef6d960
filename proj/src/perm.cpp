#include "hurwitz/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace hurwitz {

Perm::Perm(unsigned degree) : img_(degree) {
  std::iota(img_.begin(), img_.end(), 0u);
}

Perm::Perm(std::vector<std::uint32_t> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (std::uint32_t v : img_) {
    if (v >= img_.size() || seen[v])
      throw DomainError("images array is not a bijection");
    seen[v] = true;
  }
}

bool Perm::is_identity() const {
  for (std::uint32_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i)
      return false;
  return true;
}

std::uint32_t Perm::smallest_moved() const {
  for (std::uint32_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i)
      return i;
  return degree();
}

std::uint32_t Perm::largest_moved() const {
  for (std::uint32_t i = degree(); i-- > 0;)
    if (img_[i] != i)
      return i;
  return degree();
}

std::vector<std::uint32_t> Perm::cycle_type() const {
  std::vector<bool> seen(img_.size(), false);
  std::vector<std::uint32_t> lens;
  for (std::uint32_t i = 0; i < img_.size(); ++i) {
    if (seen[i])
      continue;
    std::uint32_t len = 0, j = i;
    do {
      seen[j] = true;
      j = img_[j];
      ++len;
    } while (j != i);
    if (len >= 2)
      lens.push_back(len);
  }
  std::sort(lens.rbegin(), lens.rend());
  return lens;
}

std::size_t PermHash::operator()(const Perm &p) const {
  std::uint64_t h = 1469598103934665603ull; // FNV-1a
  for (std::uint32_t v : p.images()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

Perm compose(const Perm &p, const Perm &q) {
  if (p.degree() != q.degree())
    throw DomainError("compose: degree mismatch");
  std::vector<std::uint32_t> img(p.degree());
  for (std::uint32_t i = 0; i < p.degree(); ++i)
    img[i] = q[p[i]];
  return Perm(std::move(img));
}

Perm inverse(const Perm &p) {
  std::vector<std::uint32_t> img(p.degree());
  for (std::uint32_t i = 0; i < p.degree(); ++i)
    img[p[i]] = i;
  return Perm(std::move(img));
}

Perm conjugate(const Perm &g, const Perm &h) {
  if (g.degree() != h.degree())
    throw DomainError("conjugate: degree mismatch");
  // the word h g h^{-1} under left-to-right composition
  std::vector<std::uint32_t> hinv(g.degree());
  for (std::uint32_t i = 0; i < g.degree(); ++i)
    hinv[h[i]] = i;
  std::vector<std::uint32_t> img(g.degree());
  for (std::uint32_t i = 0; i < g.degree(); ++i)
    img[i] = hinv[g[h[i]]];
  return Perm(std::move(img));
}

Perm power(const Perm &p, long long e) {
  Perm base = e < 0 ? inverse(p) : p;
  std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
  Perm acc(p.degree());
  while (k) {
    if (k & 1)
      acc = compose(acc, base);
    base = compose(base, base);
    k >>= 1;
  }
  return acc;
}

std::uint64_t element_order(const Perm &p) {
  std::uint64_t ord = 1;
  for (std::uint32_t len : p.cycle_type())
    ord = std::lcm(ord, static_cast<std::uint64_t>(len));
  return ord;
}

Perm parse_cycles(std::string_view text, unsigned degree) {
  std::vector<std::uint32_t> img(degree);
  std::iota(img.begin(), img.end(), 0u);
  std::vector<bool> used(degree, false);

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
      ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(')
      throw ParseError("expected '(' in cycle notation");
    ++i;
    std::vector<std::uint32_t> cyc;
    for (;;) {
      skip_ws();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("expected a point or ')' in cycle notation");
      std::uint64_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (v > 1'000'000'000ull)
          throw ParseError("point too large");
        ++i;
      }
      if (v < 1 || v > degree)
        throw ParseError("point " + std::to_string(v) + " out of range 1.." + std::to_string(degree));
      std::uint32_t pt = static_cast<std::uint32_t>(v - 1);
      if (used[pt])
        throw ParseError("point " + std::to_string(v) + " repeated");
      used[pt] = true;
      cyc.push_back(pt);
    }
    for (std::size_t k = 0; k < cyc.size(); ++k)
      img[cyc[k]] = cyc[(k + 1) % cyc.size()];
    skip_ws();
  }
  return Perm(std::move(img));
}

std::string cycle_string(const Perm &p) {
  std::string out;
  std::vector<bool> seen(p.degree(), false);
  for (std::uint32_t i = 0; i < p.degree(); ++i) {
    if (seen[i] || p[i] == i) {
      seen[i] = true;
      continue;
    }
    out += '(';
    std::uint32_t j = i;
    bool first = true;
    do {
      if (!first)
        out += ", ";
      first = false;
      out += std::to_string(j + 1);
      seen[j] = true;
      j = p[j];
    } while (j != i);
    out += ')';
  }
  if (out.empty())
    out = "()";
  return out;
}

} // namespace hurwitz
