#include <doctest.h>

#include <cmath>
#include <map>

#include "hurwitz/io.hpp"

#include "helpers.hpp"

using namespace hw_test;

TEST_CASE("braid moves") {
  GTuple t = T(3, {"(1, 2)", "(2, 3)"});
  GTuple moved = braid_move(t, 1, false);
  CHECK(moved == T(3, {"(1, 3)", "(1, 2)"}));

  // a constant tuple is fixed
  GTuple cc = T(3, {"(1, 2, 3)", "(1, 2, 3)"});
  CHECK(braid_move(cc, 1, false) == cc);

  // inverse move undoes the move, both ways
  GTuple u = T(4, {"(1, 2, 3)", "(2, 4)", "(1, 3)"});
  for (std::size_t i = 1; i <= 2; ++i) {
    CHECK(braid_move(braid_move(u, i, false), i, true) == u);
    CHECK(braid_move(braid_move(u, i, true), i, false) == u);
  }
  CHECK_THROWS_AS(braid_move(t, 0, false), DomainError);
  CHECK_THROWS_AS(braid_move(t, 2, false), DomainError);

  // braid moves preserve the product
  CHECK(tuple_product(braid_move(u, 2, false)) == tuple_product(u));
}

TEST_CASE("tuple product") {
  CHECK(tuple_product(GTuple(3)) == Perm(3));
  CHECK(tuple_product(T(3, {"(1, 2)", "(1, 2)"})) == Perm(3));
  CHECK(tuple_product(T(3, {"(1, 2)", "(2, 3)"})) == P("(1, 3, 2)", 3));
}

TEST_CASE("component of the empty tuple") {
  Component c = component_of(GTuple(5), 10);
  CHECK(c.degree() == 0);
  CHECK(c.orbit_size() == 1);
  CHECK(c.monodromy().order() == 1);
}

TEST_CASE("component rejects tuples that are not product-one") {
  CHECK_THROWS_AS(component_of(T(3, {"(1, 2)", "(2, 3)"}), 100), DomainError);
}

TEST_CASE("abelian orbits are entry arrangements") {
  Component c = component_of(T(3, {"(1, 2, 3)", "(1, 3, 2)"}), 100);
  CHECK(c.orbit_size() == 2);
  CHECK(c.canonical() == T(3, {"(1, 2, 3)", "(1, 3, 2)"}));
}

TEST_CASE("generating transposition 4-tuples over S3 form one orbit of size 24") {
  auto trans = std::vector<Perm>{P("(1, 2)", 3), P("(1, 3)", 3), P("(2, 3)", 3)};
  auto tuples = all_product_one(3, trans, 4);
  CHECK(tuples.size() == 27);
  std::size_t nongen = 0;
  std::set<GTuple> canonicals;
  for (const GTuple &t : tuples) {
    Component c = component_of(t, 100000);
    if (c.monodromy().order() != 6) {
      ++nongen;
      CHECK(c.orbit_size() == 1);
    } else {
      CHECK(c.orbit_size() == 24);
      canonicals.insert(c.canonical());
    }
  }
  CHECK(nongen == 3);
  CHECK(canonicals.size() == 1);
}

TEST_CASE("orbit cap failure is loud") {
  auto trans = std::vector<Perm>{P("(1, 2)", 3), P("(1, 3)", 3), P("(2, 3)", 3)};
  GTuple gen = T(3, {"(1, 2)", "(1, 2)", "(1, 3)", "(1, 3)"});
  CHECK_THROWS_AS(component_of(gen, 10), CapExceeded);
}

TEST_CASE("packed engine agrees with the reference orbit") {
  std::vector<GTuple> corpus = {
      T(3, {"(1, 2)", "(1, 2)", "(1, 3)", "(1, 3)"}),
      T(3, {"(1, 2)", "(1, 3)", "(1, 3)", "(1, 2)"}),
      T(4, {"(1, 2, 3)", "(1, 2, 4)", "(1, 4)(2, 3)"}),
      T(4, {"(1, 2)(3, 4)", "(1, 3)(2, 4)", "(1, 4)(2, 3)"}),
      T(5, {"(1, 2, 3, 4, 5)", "(1, 2, 3, 4, 5)", "(1, 4, 2, 5, 3)"}),
      T(4, {"(1, 2)", "(2, 3)", "(3, 4)", "(1, 2, 3, 4)"}),
  };
  for (const GTuple &t : corpus) {
    auto ref = reference_orbit(t);
    Component c = component_of(t, 1'000'000);
    CHECK(c.orbit_size() == ref.size());
    CHECK(c.canonical().entries() == *ref.begin()); // set is sorted, min first
    // product, monodromy group and class counts are constant on the orbit
    for (const auto &entries : ref) {
      GTuple member(t.points(), entries);
      CHECK(tuple_product(member) == tuple_product(t));
      PermGroup mg(t.points(), entries);
      CHECK(same_subgroup(mg, c.monodromy()));
    }
  }
}

TEST_CASE("abelian components are exactly multisets") {
  // exhaustive for groups of order <= 8 and degrees <= 5
  for (auto &g : {z_cyclic(2), z_cyclic(3), z_cyclic(5), z_cyclic(8),
                  std::shared_ptr<PermGroup>(v4()), z_cyclic(6)}) {
    std::vector<Perm> all = g->elements(10);
    for (unsigned n = 1; n <= 5; ++n) {
      if (std::pow(static_cast<double>(all.size()), n - 1) > 3000)
        continue;
      for (const GTuple &t : all_product_one(g->degree(), all, n)) {
        Component c = component_of(t, 1'000'000);
        std::vector<Perm> sorted = t.entries();
        std::sort(sorted.begin(), sorted.end());
        CHECK(c.canonical().entries() == sorted);
        if (n <= 4) { // reference closure stays cheap
          auto ref = reference_orbit(t);
          CHECK(ref.size() == c.orbit_size());
        }
      }
    }
  }
}

TEST_CASE("concat is a graded commutative product") {
  Component x = component_of(T(3, {"(1, 2)", "(1, 2)"}), 1000);
  Component y = component_of(T(3, {"(1, 3)", "(1, 3)"}), 1000);
  Component e = component_of(GTuple(3), 1000);

  CHECK(concat(x, e, 100000) == x);
  CHECK(concat(e, x, 100000) == x);
  Component xy = concat(x, y, 100000);
  CHECK(xy == concat(y, x, 100000));
  CHECK(xy.degree() == x.degree() + y.degree());
  CHECK(xy == component_of(T(3, {"(1, 2)", "(1, 2)", "(1, 3)", "(1, 3)"}), 100000));
}

TEST_CASE("canonical representative is idempotent") {
  for (const GTuple &t : {T(3, {"(1, 2)", "(1, 3)", "(1, 3)", "(1, 2)"}),
                          T(4, {"(1, 2, 3)", "(1, 2, 4)", "(1, 4)(2, 3)"})}) {
    Component c = component_of(t, 100000);
    Component again = component_of(c.canonical(), 100000);
    CHECK(c == again);
    CHECK(c.orbit_size() == again.orbit_size());
  }
}

TEST_CASE("conjugate_component") {
  Component x = component_of(T(3, {"(1, 2)", "(1, 2)"}), 1000);
  CHECK(conjugate_component(x, Perm(3), 1000) == x);
  CHECK(conjugate_component(x, P("(2, 3)", 3), 1000) ==
        component_of(T(3, {"(1, 3)", "(1, 3)"}), 1000));
  // gamma inside the monodromy group fixes the component
  Component g = component_of(T(3, {"(1, 2)", "(1, 2)", "(1, 3)", "(1, 3)"}), 100000);
  for (const Perm &gamma : g.monodromy().elements(10))
    CHECK(conjugate_component(g, gamma, 100000) == g);
}

TEST_CASE("multidiscriminant counts class occurrences") {
  auto z3 = z_cyclic(3);
  ClassSet cs(z3, class_closure(*z3, {z_elem(3, 1)}), 100);
  Multidiscriminant mu = multidiscriminant(T(3, {"(1, 2, 3)", "(1, 2, 3)", "(1, 2, 3)"}), cs);
  CHECK(mu.counts == std::vector<std::uint32_t>{3});
  CHECK(mu.total() == 3);

  CHECK(multidiscriminant(GTuple(3), cs).total() == 0);

  auto g3 = s3();
  ClassSet transp(g3, class_closure(*g3, {P("(1, 2)", 3)}), 100);
  CHECK(multidiscriminant(T(3, {"(1, 2)", "(1, 2)", "(1, 3)", "(1, 3)"}), transp).counts ==
        std::vector<std::uint32_t>{4});

  CHECK_THROWS_AS(multidiscriminant(T(3, {"(1, 2, 3)"}), transp), DomainError);
  auto z2in3 = make_group(3, {"(1, 2)"});
  ClassSet small(z2in3, {P("(1, 2)", 3)}, 100);
  CHECK_THROWS_AS(multidiscriminant(T(3, {"(1, 3)"}), small), DomainError);
}

TEST_CASE("enumerate_components over Z/3, degree 3") {
  auto z3 = z_cyclic(3);
  ClassSet cs(z3, z3->elements(10), 100);
  auto comps = enumerate_components(cs, 3, EnumOptions{}, 100000);
  CHECK(comps.size() == 4);
  std::multiset<std::uint64_t> orbit_sizes;
  for (const Component &c : comps)
    orbit_sizes.insert(c.orbit_size());
  // multisets {0,0,0}, {1,1,1}, {2,2,2} and {0,1,2}
  CHECK(orbit_sizes == std::multiset<std::uint64_t>{1, 1, 1, 6});
}

TEST_CASE("enumerate_components over S3 transpositions, degree 4") {
  auto g3 = s3();
  ClassSet cs(g3, parse_class_spec(*g3, "transpositions", 100), 100);
  auto all = enumerate_components(cs, 4, EnumOptions{}, 100000);
  CHECK(all.size() == 4);

  EnumOptions gen;
  gen.monodromy_equals = g3;
  auto generating = enumerate_components(cs, 4, gen, 100000);
  CHECK(generating.size() == 1);
  CHECK(generating.front().orbit_size() == 24);
}

TEST_CASE("enumerate_components at degree zero") {
  auto g3 = s3();
  ClassSet cs(g3, parse_class_spec(*g3, "nonidentity", 100), 100);
  auto comps = enumerate_components(cs, 0, EnumOptions{}, 100);
  CHECK(comps.size() == 1);
  CHECK(comps.front().degree() == 0);
}
