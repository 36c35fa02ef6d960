#ifndef HURWITZ_IO_HPP
#define HURWITZ_IO_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "hurwitz/component.hpp"

namespace hurwitz {

// Group file: a JSON document {"degree": N, "generators": ["(1, 2)(3, 4)", ...]}.
struct GroupFileData {
  unsigned degree = 0;
  std::vector<std::string> generators;
};

GroupFileData read_group_file(const std::string &path);
std::shared_ptr<PermGroup> load_group(const std::string &path,
                                      BaseRule rule = BaseRule::SmallestMoved);

// Component file: {"points": P, "degree": n, "entries": [cycle strings, ...]}
// with orbit_size and monodromy_order attached as metadata on output. Loading
// re-canonicalizes, so any product-one representative is accepted.
Component load_component(const std::string &path, std::uint64_t orbit_cap);
std::string component_to_json(const Component &x); // one-line canonical form

// Class specs: "nonidentity", "all", "transpositions", "involutions", or an
// explicit ';'-separated list of cycle strings. The result is validated to be
// conjugation-invariant by the ClassSet constructor.
std::vector<Perm> parse_class_spec(const PermGroup &g, const std::string &spec,
                                   std::uint64_t element_cap);

std::string fnv1a_hex(const std::string &data);

} // namespace hurwitz

#endif
