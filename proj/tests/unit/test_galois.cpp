#include <doctest.h>

#include "helpers.hpp"
#include "hurwitz/galois.hpp"
#include "hurwitz/io.hpp"
#include "hurwitz/lifting.hpp"

using namespace hw_test;

namespace {

Component comp(const GTuple &t) { return component_of(t, 1'000'000); }

// all product-one components over an abelian cyclic group, degrees 1..max_n,
// entries ranging over the nonidentity residues
std::vector<Component> abelian_corpus(unsigned n, unsigned max_n) {
  std::vector<Perm> c;
  for (unsigned e = 1; e < n; ++e)
    c.push_back(z_elem(n, e));
  std::vector<Component> out;
  std::set<GTuple> seen;
  for (unsigned deg = 1; deg <= max_n; ++deg)
    for (const GTuple &t : all_product_one(n, c, deg)) {
      Component x = comp(t);
      if (seen.insert(x.canonical()).second)
        out.push_back(std::move(x));
    }
  return out;
}

} // namespace

TEST_CASE("contexts") {
  UnitGroup full3 = make_context(3, ContextMode::Full);
  CHECK(full3.units == std::vector<unsigned>{1, 2});
  UnitGroup triv = make_context(12, ContextMode::Trivial);
  CHECK(triv.units == std::vector<unsigned>{1});
  UnitGroup sub = make_context(8, std::vector<unsigned>{1, 3});
  CHECK(sub.units == std::vector<unsigned>{1, 3});
  CHECK_THROWS_AS(make_context(8, std::vector<unsigned>{1, 2}), DomainError);
  CHECK_THROWS_AS(make_context(8, std::vector<unsigned>{3, 5}), DomainError); // missing 1
  CHECK_THROWS_AS(make_context(8, std::vector<unsigned>{1, 3, 5}), DomainError); // 3*5=7 missing
}

TEST_CASE("unit inverses") {
  CHECK(unit_inverse(1, 5) == 1);
  CHECK(unit_inverse(2, 5) == 3);
  CHECK(unit_inverse(3, 7) == 5);
  CHECK(unit_inverse(1, 1) == 1);
  CHECK_THROWS_AS(unit_inverse(2, 4), DomainError);
}

TEST_CASE("rational subsets") {
  auto g3 = s3();
  UnitGroup full6 = make_context(6, ContextMode::Full);
  CHECK(is_rational_subset(parse_class_spec(*g3, "transpositions", 100), full6));
  CHECK(is_rational_subset(parse_class_spec(*g3, "nonidentity", 100), full6));
  CHECK(is_rational_subset(parse_class_spec(*g3, "all", 100), full6));

  UnitGroup full3 = make_context(3, ContextMode::Full);
  CHECK_FALSE(is_rational_subset({z_elem(3, 1)}, full3));
  CHECK(is_rational_subset({z_elem(3, 1)}, make_context(3, ContextMode::Trivial)));
}

TEST_CASE("class power maps") {
  auto z3 = z_cyclic(3);
  ClassSet cs(z3, {z_elem(3, 1), z_elem(3, 2)}, 100);
  CHECK(class_power_map(cs, 1) == std::vector<int>{0, 1});
  CHECK(class_power_map(cs, 2) == std::vector<int>{1, 0}); // swaps the two classes

  auto g3 = s3();
  ClassSet transp(g3, parse_class_spec(*g3, "transpositions", 100), 100);
  CHECK(class_power_map(transp, 1) == std::vector<int>{0});
  CHECK(class_power_map(transp, 5) == std::vector<int>{0});

  ClassSet just1(z3, {z_elem(3, 1)}, 100);
  CHECK_THROWS_AS(class_power_map(just1, 2), DomainError);
}

TEST_CASE("power maps compose as a monoid action") {
  auto z7 = z_cyclic(7);
  std::vector<Perm> c;
  for (unsigned e = 1; e < 7; ++e)
    c.push_back(z_elem(7, e));
  ClassSet cs(z7, c, 100);
  for (unsigned k1 : {1u, 2u, 3u, 6u})
    for (unsigned k2 : {1u, 2u, 5u}) {
      auto p12 = class_power_map(cs, (k1 * k2) % 7);
      auto p1 = class_power_map(cs, k1);
      auto p2 = class_power_map(cs, k2);
      for (std::size_t i = 0; i < p12.size(); ++i)
        CHECK(p12[i] == p1[static_cast<std::size_t>(p2[i])]);
    }
}

TEST_CASE("acting on multidiscriminants") {
  auto z3 = z_cyclic(3);
  ClassSet cs(z3, {z_elem(3, 1), z_elem(3, 2)}, 100);
  Component x = comp(T(3, {"(1, 2, 3)", "(1, 2, 3)", "(1, 2, 3)"}));
  Multidiscriminant mu = multidiscriminant(x, cs);
  CHECK(act_multidiscriminant(mu, class_power_map(cs, 1)) == mu);
  Multidiscriminant acted = act_multidiscriminant(mu, class_power_map(cs, 2));
  CHECK(acted.counts == std::vector<std::uint32_t>{0, 3});
  CHECK(acted.total() == mu.total());
}

TEST_CASE("rational multidiscriminants") {
  auto z3 = z_cyclic(3);
  ClassSet cs(z3, {z_elem(3, 1), z_elem(3, 2)}, 100);
  Component x = comp(T(3, {"(1, 2, 3)", "(1, 2, 3)", "(1, 2, 3)"}));
  CHECK_FALSE(is_rational_multidiscriminant(x, cs, make_context(3, ContextMode::Full)));
  CHECK(is_rational_multidiscriminant(x, cs, make_context(3, ContextMode::Trivial)));

  auto g3 = s3();
  ClassSet transp(g3, parse_class_spec(*g3, "transpositions", 100), 100);
  Component t4 = comp(T(3, {"(1, 2)", "(1, 2)", "(1, 3)", "(1, 3)"}));
  CHECK(is_rational_multidiscriminant(t4, transp, make_context(6, ContextMode::Full)));
}

TEST_CASE("abelian action on entries") {
  Component x = comp(GTuple(5, {z_elem(5, 1), z_elem(5, 1), z_elem(5, 3)}));
  CHECK(abelian_action(x, 1, 5, 1000) == x);
  Component acted = abelian_action(x, 2, 5, 1000);
  CHECK(acted == comp(GTuple(5, {z_elem(5, 3), z_elem(5, 3), z_elem(5, 4)})));

  // (1, -1) over Z/6 is fixed by every unit
  Component y = comp(GTuple(6, {z_elem(6, 1), z_elem(6, 5)}));
  for (unsigned k : make_context(6, ContextMode::Full).units)
    CHECK(abelian_action(y, k, 6, 1000) == y);

  Component nonab = comp(T(3, {"(1, 2)", "(1, 2)", "(1, 3)", "(1, 3)"}));
  CHECK_THROWS_AS(abelian_action(nonab, 1, 6, 100000), DomainError);
}

TEST_CASE("abelian action composes multiplicatively") {
  for (const Component &x : abelian_corpus(5, 4)) {
    CHECK(abelian_action(x, 1, 5, 1000) == x);
    for (unsigned k1 : {2u, 3u, 4u})
      for (unsigned k2 : {2u, 3u}) {
        Component lhs = abelian_action(abelian_action(x, k1, 5, 1000), k2, 5, 1000);
        Component rhs = abelian_action(x, (k1 * k2) % 5, 5, 1000);
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("abelian action is consistent with the class power map") {
  auto z5 = z_cyclic(5);
  std::vector<Perm> c;
  for (unsigned e = 1; e < 5; ++e)
    c.push_back(z_elem(5, e));
  ClassSet cs(z5, c, 100);
  for (const Component &x : abelian_corpus(5, 4))
    for (unsigned k : {2u, 3u, 4u}) {
      Multidiscriminant expected =
          act_multidiscriminant(multidiscriminant(x, cs), class_power_map(cs, k));
      CHECK(multidiscriminant(abelian_action(x, k, 5, 1000), cs) == expected);
    }
}

TEST_CASE("fields of definition of abelian components") {
  Component x111 = comp(GTuple(3, {z_elem(3, 1), z_elem(3, 1), z_elem(3, 1)}));
  CHECK_FALSE(is_defined_over_abelian(x111, make_context(3, ContextMode::Full), 1000));
  CHECK(is_defined_over_abelian(x111, make_context(3, ContextMode::Trivial), 1000));

  for (unsigned n = 2; n <= 12; ++n) {
    Component x = comp(GTuple(n, {z_elem(n, 1), z_elem(n, -1)}));
    bool expect = n == 2 || n == 3 || n == 4 || n == 6;
    CHECK(is_defined_over_abelian(x, make_context(n, ContextMode::Full), 10000) == expect);
  }
}

TEST_CASE("rational multidiscriminant is equivalent to defined-over for abelian groups") {
  for (unsigned n : {5u, 6u, 8u, 12u}) {
    auto zn = z_cyclic(n);
    std::vector<Perm> c;
    for (unsigned e = 1; e < n; ++e)
      c.push_back(z_elem(n, e));
    ClassSet cs(zn, c, 100);
    UnitGroup ctx = make_context(n, ContextMode::Full);
    unsigned max_deg = n <= 6 ? 5 : 4;
    for (const Component &x : abelian_corpus(n, max_deg))
      CHECK(is_defined_over_abelian(x, ctx, 100000) ==
            is_rational_multidiscriminant(x, cs, ctx));
  }
}

TEST_CASE("products of defined abelian components stay defined") {
  for (unsigned n : {5u, 6u}) {
    UnitGroup ctx = make_context(n, ContextMode::Full);
    std::vector<Component> defined;
    for (const Component &x : abelian_corpus(n, 4))
      if (x.monodromy().order() == n && is_defined_over_abelian(x, ctx, 100000))
        defined.push_back(x);
    for (const Component &x : defined)
      for (const Component &y : defined)
        CHECK(is_defined_over_abelian(concat(x, y, 1'000'000), ctx, 1'000'000));
  }
}

TEST_CASE("norms of abelian components") {
  Component fixed = comp(GTuple(6, {z_elem(6, 1), z_elem(6, 5)}));
  UnitGroup full6 = make_context(6, ContextMode::Full);
  CHECK(galois_norm_abelian(fixed, full6, 100000) == fixed);

  Component x111 = comp(GTuple(3, {z_elem(3, 1), z_elem(3, 1), z_elem(3, 1)}));
  UnitGroup full3 = make_context(3, ContextMode::Full);
  Component n111 = galois_norm_abelian(x111, full3, 100000);
  CHECK(n111.degree() == 6);
  CHECK(is_defined_over_abelian(n111, full3, 100000));

  Component pm = comp(GTuple(5, {z_elem(5, 1), z_elem(5, 4)}));
  UnitGroup full5 = make_context(5, ContextMode::Full);
  Component npm = galois_norm_abelian(pm, full5, 100000);
  CHECK(npm.degree() == 4);
  CHECK(is_defined_over_abelian(npm, full5, 100000));
}

TEST_CASE("resolve_action agrees with the abelian action") {
  auto z5 = z_cyclic(5);
  std::vector<Perm> c;
  for (unsigned e = 1; e < 5; ++e)
    c.push_back(z_elem(5, e));
  SchurCover cover(ClassSet(z5, c, 100), 100000, 1000);
  for (const Component &x : abelian_corpus(5, 3)) {
    for (unsigned k : {1u, 2u, 3u, 4u}) {
      ResolveResult r = resolve_action(x, k, cover, 100000);
      REQUIRE(r.determined);
      CHECK(r.candidates.front() == abelian_action(x, k, 5, 100000));
    }
  }
}

TEST_CASE("resolve_action determines transposition components over S3") {
  auto g3 = s3();
  SchurCover cover(ClassSet(g3, parse_class_spec(*g3, "transpositions", 100), 100), 100000,
                   1000);
  Component t4 = comp(T(3, {"(1, 2)", "(1, 2)", "(1, 3)", "(1, 3)"}));
  for (unsigned k : make_context(6, ContextMode::Full).units) {
    ResolveResult r = resolve_action(t4, k, cover, 1'000'000);
    REQUIRE(r.determined);
    CHECK(r.candidates.front() == t4);
  }
}
