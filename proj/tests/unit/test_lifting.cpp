#include <doctest.h>

#include <map>
#include <random>

#include "helpers.hpp"
#include "hurwitz/io.hpp"
#include "hurwitz/lifting.hpp"
#include "hurwitz/monoid.hpp"

using namespace hw_test;

namespace {

Component comp(const GTuple &t) { return component_of(t, 1'000'000); }

ClassSet nonidentity_set(std::shared_ptr<PermGroup> g) {
  return ClassSet(g, parse_class_spec(*g, "nonidentity", 100000), 100000);
}

} // namespace

TEST_CASE("presentation shapes") {
  auto z2 = z_cyclic(2);
  Presentation p2 = build_presentation(nonidentity_set(z2), true);
  CHECK(p2.ngens == 1);
  CHECK(p2.relators.size() == 2); // one conjugation relator, one power relator

  auto v = v4();
  Presentation pv = build_presentation(ClassSet(v, parse_class_spec(*v, "involutions", 100), 100), true);
  CHECK(pv.ngens == 3);
  CHECK(pv.relators.size() == 12); // 9 conjugation + 3 power

  auto g3 = s3();
  Presentation pt = build_presentation(ClassSet(g3, parse_class_spec(*g3, "transpositions", 100), 100), true);
  CHECK(pt.ngens == 3);
  CHECK(pt.relators.size() == 12);

  // c must generate: the 3-cycles only span A3 inside S3
  CHECK_THROWS_AS(
      build_presentation(ClassSet(g3, {P("(1, 2, 3)", 3), P("(1, 3, 2)", 3)}, 100), true),
      DomainError);
}

TEST_CASE("coset enumeration of hand presentations") {
  Presentation square;
  square.ngens = 1;
  square.relators = {{1, 1}};
  CosetTable t = coset_enumerate(square, 1000);
  CHECK(t.size == 2);

  // three commuting involutions: the quotient is (Z/2)^3 of order 8
  auto v = v4();
  Presentation pv = build_presentation(ClassSet(v, parse_class_spec(*v, "involutions", 100), 100), true);
  CHECK(coset_enumerate(pv, 1000).size == 8);

  // free rank one: never closes
  Presentation free1;
  free1.ngens = 1;
  free1.relators = {{1, 1, -1, -1}}; // the only conjugation relator, freely trivial
  CHECK_THROWS_AS(coset_enumerate(free1, 100), CapExceeded);
  CHECK_THROWS_AS(coset_enumerate(free1, 10'000), CapExceeded);
}

TEST_CASE("reduced covers of the bundled small cases") {
  auto z2 = z_cyclic(2);
  SchurCover c2(nonidentity_set(z2), 100000, 1000);
  CHECK(c2.size() == 2);
  CHECK(c2.kernel_order() == 1);

  auto v = v4();
  SchurCover cv(ClassSet(v, parse_class_spec(*v, "involutions", 100), 100), 100000, 1000);
  CHECK(cv.size() == 8);
  CHECK(cv.kernel_order() == 2);

  auto g3 = s3();
  SchurCover ct(ClassSet(g3, parse_class_spec(*g3, "transpositions", 100), 100), 100000, 1000);
  CHECK(ct.size() == 6);
  CHECK(ct.kernel_order() == 1);

  // the (Z/3, {1,2}) cover is (Z/3)^2
  auto z3 = z_cyclic(3);
  SchurCover c3(nonidentity_set(z3), 100000, 1000);
  CHECK(c3.size() == 9);
  CHECK(c3.kernel_order() == 3);
}

TEST_CASE("cover group operations are consistent") {
  auto z3 = z_cyclic(3);
  SchurCover c3(nonidentity_set(z3), 100000, 1000);
  for (std::uint32_t a = 0; a < c3.size(); ++a) {
    CHECK(c3.mult(a, c3.identity()) == a);
    CHECK(c3.mult(c3.identity(), a) == a);
    CHECK(c3.mult(a, c3.inv(a)) == c3.identity());
    for (std::uint32_t b = 0; b < c3.size(); ++b) {
      // projection is a homomorphism
      CHECK(c3.project(c3.mult(a, b)) == compose(c3.project(a), c3.project(b)));
    }
  }
}

TEST_CASE("lifting invariants") {
  auto g3 = s3();
  SchurCover cover(ClassSet(g3, parse_class_spec(*g3, "transpositions", 100), 100), 100000,
                   1000);

  LiftInvariant empty = lifting_invariant(GTuple(3), cover);
  CHECK(empty.s_part == cover.identity());
  CHECK(empty.psi.total() == 0);

  LiftInvariant tt = lifting_invariant(T(3, {"(1, 2)", "(1, 2)"}), cover);
  CHECK(tt.s_part == cover.identity()); // [t]^2 is a power relator
  CHECK(tt.psi.counts == std::vector<std::uint32_t>{2});

  CHECK_THROWS_AS(lifting_invariant(T(3, {"(1, 2, 3)"}), cover), DomainError);
}

TEST_CASE("braid-equivalent tuples share the invariant") {
  auto g3 = s3();
  SchurCover cover(ClassSet(g3, parse_class_spec(*g3, "transpositions", 100), 100), 100000,
                   1000);
  GTuple t = T(3, {"(1, 2)", "(1, 2)", "(1, 3)", "(1, 3)"});
  LiftInvariant v = lifting_invariant(t, cover);
  for (const auto &entries : reference_orbit(t))
    CHECK(lifting_invariant(GTuple(3, entries), cover) == v);
}

TEST_CASE("invariant multiplication matches concatenation") {
  auto v = v4();
  SchurCover cover(ClassSet(v, parse_class_spec(*v, "involutions", 100), 100), 100000, 1000);
  std::vector<Perm> c = cover.class_set().members();
  for (const GTuple &t1 : all_product_one(4, c, 2))
    for (const GTuple &t2 : all_product_one(4, c, 2)) {
      std::vector<Perm> joined = t1.entries();
      joined.insert(joined.end(), t2.entries().begin(), t2.entries().end());
      LiftInvariant lhs = invariant_product(lifting_invariant(t1, cover),
                                            lifting_invariant(t2, cover), cover);
      CHECK(lhs == lifting_invariant(GTuple(4, joined), cover));
      // product-one invariants are central: they commute with each other
      LiftInvariant rhs = invariant_product(lifting_invariant(t2, cover),
                                            lifting_invariant(t1, cover), cover);
      CHECK(lhs.s_part == rhs.s_part);
    }
}

TEST_CASE("product-one invariants are central in the cover") {
  auto g3 = s3();
  SchurCover cover(ClassSet(g3, parse_class_spec(*g3, "transpositions", 100), 100), 100000,
                   1000);
  std::vector<Perm> c = cover.class_set().members();
  for (const GTuple &t : all_product_one(3, c, 4)) {
    std::uint32_t u = lifting_invariant(t, cover).s_part;
    for (std::size_t pos = 0; pos < c.size(); ++pos) {
      std::uint32_t w = cover.gen_element(pos);
      CHECK(cover.mult(u, w) == cover.mult(w, u));
    }
  }
}

TEST_CASE("conjugation leaves the invariant unchanged") {
  auto v = v4();
  SchurCover cover(ClassSet(v, parse_class_spec(*v, "involutions", 100), 100), 100000, 1000);
  std::vector<Perm> c = cover.class_set().members();
  for (const GTuple &t : all_product_one(4, c, 3))
    for (const Perm &gamma : v->elements(100)) {
      std::vector<Perm> conj_entries;
      for (const Perm &e : t.entries())
        conj_entries.push_back(conjugate(e, gamma));
      CHECK(lifting_invariant(GTuple(4, conj_entries), cover) ==
            lifting_invariant(t, cover));
    }
}

TEST_CASE("tilde_pi lands in the abelianization") {
  auto g3 = s3();
  SchurCover cover(ClassSet(g3, parse_class_spec(*g3, "transpositions", 100), 100), 100000,
                   1000);
  CHECK(cover.abelian_order() == 2);

  Multidiscriminant zero{{0}};
  CHECK(tilde_pi(zero, cover) == cover.abelianized(Perm(3)));
  Multidiscriminant two{{2}};
  CHECK(tilde_pi(two, cover) == cover.abelianized(Perm(3)));
  Multidiscriminant three{{3}};
  CHECK(tilde_pi(three, cover) != cover.abelianized(Perm(3)));
}

TEST_CASE("fibered-product coherence on every computed invariant") {
  for (auto &g : {s3(), a4(), d4(), std::shared_ptr<PermGroup>(v4())}) {
    SchurCover cover(nonidentity_set(g), 1'000'000, 100000);
    std::vector<Perm> c = cover.class_set().members();
    for (unsigned n = 0; n <= 3; ++n)
      for (const GTuple &t : all_product_one(g->degree(), c, n)) {
        LiftInvariant v = lifting_invariant(t, cover);
        CHECK(tilde_pi(v.psi, cover) == cover.abelianized(cover.project(v.s_part)));
      }
  }
}

TEST_CASE("w elements") {
  auto z3 = z_cyclic(3);
  SchurCover cover(nonidentity_set(z3), 100000, 1000);
  // u = 1 gives the identity for every class
  for (std::size_t pos = 0; pos < cover.class_set().num_classes(); ++pos)
    CHECK(w_element(pos, 1, cover) == cover.identity());

  // Z/3 with c = {1, 2}: w(class of 1, 2) = x^{-2} y in (Z/3)^2
  std::uint32_t x = cover.gen_element_of(z_elem(3, 1));
  std::uint32_t y = cover.gen_element_of(z_elem(3, 2));
  std::uint32_t w = w_element(0, 2, cover);
  CHECK(w == cover.mult(cover.pow(x, -2), y));
  CHECK(w != cover.identity());
  CHECK(cover.project(w).is_identity());

  // independence from the class representative, on a class of size 3
  auto g3 = s3();
  SchurCover ct(ClassSet(g3, parse_class_spec(*g3, "transpositions", 100), 100), 100000, 1000);
  for (unsigned u : {1u, 5u}) {
    std::uint32_t expect = w_element(0, u, ct);
    for (const Perm &rep : ct.class_set().class_members(0)) {
      std::uint32_t alt = ct.mult(ct.pow(ct.gen_element_of(rep), -static_cast<long long>(u)),
                                  ct.gen_element_of(power(rep, u)));
      CHECK(alt == expect);
    }
  }
}

TEST_CASE("the unit action on invariants") {
  auto z5 = z_cyclic(5);
  SchurCover cover(nonidentity_set(z5), 100000, 1000);
  std::vector<Perm> c = cover.class_set().members();

  LiftInvariant id_inv = lifting_invariant(GTuple(5), cover);
  for (unsigned k : {1u, 2u, 3u, 4u})
    CHECK(galois_act_invariant(id_inv, k, cover) == id_inv);

  for (const GTuple &t : all_product_one(5, c, 3)) {
    LiftInvariant v = lifting_invariant(t, cover);
    CHECK(galois_act_invariant(v, 1, cover) == v);
    for (unsigned k1 : {2u, 3u, 4u})
      for (unsigned k2 : {2u, 3u}) {
        LiftInvariant lhs = galois_act_invariant(galois_act_invariant(v, k1, cover), k2, cover);
        LiftInvariant rhs = galois_act_invariant(v, (k1 * k2) % 5, cover);
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("the action commutes with the abelian action on components") {
  for (unsigned n : {5u, 7u}) {
    auto zn = z_cyclic(n);
    SchurCover cover(nonidentity_set(zn), 1'000'000, 1000);
    std::vector<Perm> c = cover.class_set().members();
    for (unsigned deg = 1; deg <= 4; ++deg)
      for (const GTuple &t : all_product_one(n, c, deg)) {
        Component x = comp(t);
        for (unsigned k = 1; k < n; ++k) {
          LiftInvariant lhs = galois_act_invariant(lifting_invariant(x, cover), k, cover);
          LiftInvariant rhs = lifting_invariant(abelian_action(x, k, n, 100000), cover);
          CHECK(lhs == rhs);
        }
      }
  }
}

TEST_CASE("action compatibility with multiplication on random pairs") {
  auto g3 = s3();
  SchurCover cover(ClassSet(g3, parse_class_spec(*g3, "transpositions", 100), 100), 100000,
                   1000);
  std::vector<Perm> c = cover.class_set().members();
  std::mt19937 rng(99);
  std::uniform_int_distribution<std::size_t> pick(0, c.size() - 1);
  auto random_product_one = [&](unsigned deg) {
    for (;;) {
      std::vector<Perm> entries;
      Perm prod(3);
      for (unsigned i = 0; i + 1 < deg; ++i) {
        entries.push_back(c[pick(rng)]);
        prod = compose(prod, entries.back());
      }
      Perm last = inverse(prod);
      if (std::find(c.begin(), c.end(), last) != c.end()) {
        entries.push_back(last);
        return GTuple(3, entries);
      }
    }
  };
  for (int trial = 0; trial < 300; ++trial) {
    LiftInvariant u = lifting_invariant(random_product_one(4), cover);
    LiftInvariant v = lifting_invariant(random_product_one(2 + 2 * (trial % 2)), cover);
    for (unsigned k : {1u, 5u}) {
      LiftInvariant lhs = galois_act_invariant(invariant_product(u, v, cover), k, cover);
      LiftInvariant rhs = invariant_product(galois_act_invariant(u, k, cover),
                                            galois_act_invariant(v, k, cover), cover);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("estimating the stability threshold") {
  auto z2 = z_cyclic(2);
  SchurCover c2(nonidentity_set(z2), 100000, 1000);
  CHECK(estimate_m_big(c2, 8, 100000) == 1);
  CHECK(estimate_m_big(c2, 0, 100000) == 0);

  auto g3 = s3();
  SchurCover ct(ClassSet(g3, parse_class_spec(*g3, "transpositions", 100), 100), 100000, 1000);
  auto m = estimate_m_big(ct, 10, 1'000'000);
  REQUIRE(m.has_value());
  CHECK(*m == 3);
}
