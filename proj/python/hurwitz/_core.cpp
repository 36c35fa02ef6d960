// Python bindings for the main operations: permutation arithmetic, groups,
// braid-orbit components, ni sets, rationality tests and lifting invariants.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hurwitz/galois.hpp"
#include "hurwitz/io.hpp"
#include "hurwitz/lifting.hpp"
#include "hurwitz/monoid.hpp"

namespace py = pybind11;
using namespace hurwitz;

namespace {

GTuple tuple_from(unsigned points, const std::vector<Perm> &entries) {
  return GTuple(points, entries);
}

std::vector<Perm> classes_from_spec(const std::shared_ptr<PermGroup> &g, const std::string &spec,
                                    std::uint64_t element_cap) {
  return parse_class_spec(*g, spec, element_cap);
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "braid orbits of product-one tuples in finite permutation groups";

  py::register_exception<ParseError>(m, "ParseError");
  py::register_exception<DomainError>(m, "DomainError");
  py::register_exception<CapExceeded>(m, "CapExceededError");

  m.attr("DEFAULT_ORBIT_CAP") = kDefaultOrbitCap;
  m.attr("DEFAULT_COSET_CAP") = kDefaultCosetCap;
  m.attr("DEFAULT_ELEMENT_CAP") = kDefaultElementCap;

  py::class_<Perm>(m, "Perm")
      .def(py::init<unsigned>(), py::arg("degree"))
      .def(py::init([](const std::string &cycles, unsigned degree) {
             return parse_cycles(cycles, degree);
           }),
           py::arg("cycles"), py::arg("degree"))
      .def_property_readonly("degree", &Perm::degree)
      .def_property_readonly("images", [](const Perm &p) { return p.images(); })
      .def("is_identity", &Perm::is_identity)
      .def("order", [](const Perm &p) { return element_order(p); })
      .def("inverse", [](const Perm &p) { return inverse(p); })
      .def("cycles", [](const Perm &p) { return cycle_string(p); })
      .def("__mul__", [](const Perm &a, const Perm &b) { return compose(a, b); })
      .def("__pow__", [](const Perm &a, long long e) { return power(a, e); })
      .def("conjugate_by", [](const Perm &g, const Perm &h) { return conjugate(g, h); })
      .def(py::self == py::self)
      .def(py::self < py::self)
      .def("__hash__", [](const Perm &p) { return PermHash{}(p); })
      .def("__repr__", [](const Perm &p) { return "Perm(" + cycle_string(p) + ")"; });

  py::class_<PermGroup, std::shared_ptr<PermGroup>>(m, "PermGroup")
      .def(py::init<unsigned, std::vector<Perm>>(), py::arg("degree"), py::arg("generators"))
      .def_property_readonly("degree", &PermGroup::degree)
      .def_property_readonly("order", &PermGroup::order)
      .def_property_readonly("generators", &PermGroup::generators)
      .def("contains", &PermGroup::contains)
      .def("elements", &PermGroup::elements, py::arg("cap") = kDefaultElementCap)
      .def("is_abelian", &PermGroup::is_abelian)
      .def("is_transitive", &PermGroup::is_transitive)
      .def("__repr__", [](const PermGroup &g) {
        return "PermGroup(degree=" + std::to_string(g.degree()) +
               ", order=" + std::to_string(g.order()) + ")";
      });

  m.def("are_conjugate", &are_conjugate, py::arg("group"), py::arg("a"), py::arg("b"),
        py::arg("node_cap") = kDefaultOrbitCap);
  m.def(
      "subgroup_product_test",
      [](const PermGroup &a, const PermGroup &b, std::uint64_t cap) {
        auto r = subgroup_product_test(a, b, cap);
        return py::make_tuple(r.join, r.product_is_group, r.intersection_order);
      },
      py::arg("h1"), py::arg("h2"), py::arg("cap") = kDefaultElementCap);
  m.def(
      "order_statistics",
      [](const PermGroup &g, std::uint64_t cap) {
        auto st = order_statistics(g, cap);
        return py::make_tuple(st.exponent, st.psi);
      },
      py::arg("group"), py::arg("cap") = kDefaultElementCap);
  m.def(
      "conjugacy_classes",
      [](std::shared_ptr<PermGroup> g, std::uint64_t cap) {
        auto table = conjugacy_classes(g, cap);
        std::vector<std::pair<Perm, std::vector<Perm>>> out;
        for (std::size_t i = 0; i < table.num_classes(); ++i)
          out.emplace_back(table.reps[i], table.members[i]);
        return out;
      },
      py::arg("group"), py::arg("cap") = kDefaultElementCap);

  py::class_<ClassSet>(m, "ClassSet")
      .def(py::init([](std::shared_ptr<PermGroup> g, const std::vector<Perm> &members,
                       std::uint64_t cap) { return ClassSet(g, members, cap); }),
           py::arg("group"), py::arg("members"), py::arg("element_cap") = kDefaultElementCap)
      .def(py::init([](std::shared_ptr<PermGroup> g, const std::string &spec,
                       std::uint64_t cap) {
             return ClassSet(g, classes_from_spec(g, spec, cap), cap);
           }),
           py::arg("group"), py::arg("spec"), py::arg("element_cap") = kDefaultElementCap)
      .def_property_readonly("members", &ClassSet::members)
      .def_property_readonly("num_classes", &ClassSet::num_classes)
      .def("class_rep", &ClassSet::class_rep, py::arg("pos"))
      .def("contains", &ClassSet::contains);

  m.def("class_closure", &class_closure, py::arg("group"), py::arg("seeds"));

  py::class_<Multidiscriminant>(m, "Multidiscriminant")
      .def_property_readonly("counts", [](const Multidiscriminant &m_) { return m_.counts; })
      .def("total", &Multidiscriminant::total)
      .def("min_count", &Multidiscriminant::min_count)
      .def(py::self == py::self);

  py::class_<Component>(m, "Component")
      .def_property_readonly("points", &Component::points)
      .def_property_readonly("degree", &Component::degree)
      .def_property_readonly("orbit_size", &Component::orbit_size)
      .def_property_readonly("entries",
                             [](const Component &c) { return c.canonical().entries(); })
      .def_property_readonly("monodromy", [](const Component &c) { return c.monodromy_ptr(); })
      .def(py::self == py::self)
      .def(py::self < py::self)
      .def("__repr__", [](const Component &c) { return component_to_json(c); });

  m.def(
      "component_of",
      [](unsigned points, const std::vector<Perm> &entries, std::uint64_t orbit_cap) {
        return component_of(tuple_from(points, entries), orbit_cap);
      },
      py::arg("points"), py::arg("entries"), py::arg("orbit_cap") = kDefaultOrbitCap);
  m.def(
      "tuple_product",
      [](unsigned points, const std::vector<Perm> &entries) {
        return tuple_product(tuple_from(points, entries));
      },
      py::arg("points"), py::arg("entries"));
  m.def(
      "braid_move",
      [](unsigned points, const std::vector<Perm> &entries, std::size_t i, bool inverse_move) {
        return braid_move(tuple_from(points, entries), i, inverse_move).entries();
      },
      py::arg("points"), py::arg("entries"), py::arg("i"), py::arg("inverse") = false);
  m.def("concat", &concat, py::arg("x"), py::arg("y"), py::arg("orbit_cap") = kDefaultOrbitCap);
  m.def("conjugate_component", &conjugate_component, py::arg("x"), py::arg("gamma"),
        py::arg("orbit_cap") = kDefaultOrbitCap);
  m.def(
      "multidiscriminant",
      [](const Component &x, const ClassSet &cs) { return multidiscriminant(x, cs); },
      py::arg("component"), py::arg("class_set"));
  m.def(
      "enumerate_components",
      [](const ClassSet &cs, unsigned n, bool generating_only, std::uint64_t orbit_cap) {
        EnumOptions opts;
        if (generating_only)
          opts.monodromy_equals = cs.group_ptr();
        return enumerate_components(cs, n, opts, orbit_cap);
      },
      py::arg("class_set"), py::arg("degree"), py::arg("generating_only") = false,
      py::arg("orbit_cap") = kDefaultOrbitCap);

  m.def(
      "ni_set",
      [](std::shared_ptr<PermGroup> h, const std::vector<Component> &factors, bool sharp,
         std::uint64_t orbit_cap, std::uint64_t element_cap) {
        return ni_set(NiQuery{h, factors, sharp}, Caps{orbit_cap, element_cap});
      },
      py::arg("group"), py::arg("factors"), py::arg("sharp") = false,
      py::arg("orbit_cap") = kDefaultOrbitCap, py::arg("element_cap") = kDefaultElementCap);
  m.def(
      "are_permuting",
      [](const Component &x, const Component &y, std::uint64_t element_cap) {
        return are_permuting(x, y, Caps{kDefaultOrbitCap, element_cap});
      },
      py::arg("x"), py::arg("y"), py::arg("element_cap") = kDefaultElementCap);
  m.def(
      "is_permuting_family",
      [](const std::vector<Component> &factors, std::uint64_t element_cap) {
        return is_permuting_family(factors, Caps{kDefaultOrbitCap, element_cap});
      },
      py::arg("factors"), py::arg("element_cap") = kDefaultElementCap);
  m.def(
      "verify_singleton",
      [](std::shared_ptr<PermGroup> h, const std::vector<Component> &factors,
         std::uint64_t orbit_cap, std::uint64_t element_cap) {
        auto v = verify_singleton(NiQuery{h, factors, true}, Caps{orbit_cap, element_cap});
        return py::make_tuple(v.holds, v.witness);
      },
      py::arg("group"), py::arg("factors"), py::arg("orbit_cap") = kDefaultOrbitCap,
      py::arg("element_cap") = kDefaultElementCap);
  m.def(
      "factor_small",
      [](const Component &x, std::uint64_t psi, std::uint64_t orbit_cap) {
        auto f = factor_small(x, psi, Caps{orbit_cap, kDefaultElementCap});
        std::vector<std::pair<Perm, std::uint64_t>> blocks;
        for (const auto &b : f.blocks)
          blocks.emplace_back(b.element, b.count);
        return py::make_tuple(blocks, f.rest);
      },
      py::arg("x"), py::arg("psi"), py::arg("orbit_cap") = kDefaultOrbitCap);
  m.def(
      "reduction_bounds",
      [](const ClassSet &cs) {
        auto b = reduction_bounds(cs, Caps{});
        return py::make_tuple(b.coarse, b.refined);
      },
      py::arg("class_set"));
  m.def(
      "build_v",
      [](const ClassSet &cs, std::uint64_t orbit_cap) {
        return build_v(cs, Caps{orbit_cap, kDefaultElementCap});
      },
      py::arg("class_set"), py::arg("orbit_cap") = kDefaultOrbitCap);
  m.def(
      "is_complete_class_set",
      [](const ClassSet &cs, std::uint64_t element_cap) {
        return is_complete_class_set(cs, Caps{kDefaultOrbitCap, element_cap});
      },
      py::arg("class_set"), py::arg("element_cap") = kDefaultElementCap);

  py::class_<UnitGroup>(m, "UnitGroup")
      .def_readonly("modulus", &UnitGroup::modulus)
      .def_readonly("units", &UnitGroup::units)
      .def("contains", &UnitGroup::contains);
  m.def(
      "make_context",
      [](unsigned modulus, const std::string &mode) {
        if (mode == "full")
          return make_context(modulus, ContextMode::Full);
        if (mode == "trivial")
          return make_context(modulus, ContextMode::Trivial);
        throw DomainError("mode must be 'full' or 'trivial'");
      },
      py::arg("modulus"), py::arg("mode") = "full");
  m.def(
      "make_context_explicit",
      [](unsigned modulus, const std::vector<unsigned> &units) {
        return make_context(modulus, units);
      },
      py::arg("modulus"), py::arg("units"));

  m.def("is_rational_subset", &is_rational_subset, py::arg("members"), py::arg("context"));
  m.def("class_power_map", &class_power_map, py::arg("class_set"), py::arg("unit"));
  m.def("is_rational_multidiscriminant", &is_rational_multidiscriminant, py::arg("component"),
        py::arg("class_set"), py::arg("context"));
  m.def("abelian_action", &abelian_action, py::arg("component"), py::arg("unit"),
        py::arg("modulus"), py::arg("orbit_cap") = kDefaultOrbitCap);
  m.def("is_defined_over_abelian", &is_defined_over_abelian, py::arg("component"),
        py::arg("context"), py::arg("orbit_cap") = kDefaultOrbitCap);
  m.def("galois_norm_abelian", &galois_norm_abelian, py::arg("component"), py::arg("context"),
        py::arg("orbit_cap") = kDefaultOrbitCap);
  m.def(
      "resolve_action",
      [](const Component &x, unsigned k, const SchurCover &cover, std::uint64_t orbit_cap) {
        auto r = resolve_action(x, k, cover, orbit_cap);
        return py::make_tuple(r.determined, r.candidates);
      },
      py::arg("component"), py::arg("unit"), py::arg("cover"),
      py::arg("orbit_cap") = kDefaultOrbitCap);

  py::class_<SchurCover>(m, "SchurCover")
      .def(py::init([](const ClassSet &cs, std::uint64_t max_cosets, std::uint64_t element_cap) {
             return SchurCover(cs, max_cosets, element_cap);
           }),
           py::arg("class_set"), py::arg("max_cosets") = kDefaultCosetCap,
           py::arg("element_cap") = kDefaultElementCap)
      .def_property_readonly("size", &SchurCover::size)
      .def_property_readonly("kernel_order", &SchurCover::kernel_order)
      .def_property_readonly("exponent", &SchurCover::exponent)
      .def("mult", &SchurCover::mult)
      .def("inv", &SchurCover::inv)
      .def("project", &SchurCover::project);

  py::class_<LiftInvariant>(m, "LiftInvariant")
      .def_readonly("s_part", &LiftInvariant::s_part)
      .def_readonly("psi", &LiftInvariant::psi)
      .def(py::self == py::self);
  m.def(
      "lifting_invariant",
      [](const Component &x, const SchurCover &cover) { return lifting_invariant(x, cover); },
      py::arg("component"), py::arg("cover"));
  m.def("invariant_product", &invariant_product, py::arg("u"), py::arg("v"), py::arg("cover"));
  m.def("tilde_pi", &tilde_pi, py::arg("psi"), py::arg("cover"));
  m.def("w_element", &w_element, py::arg("class_pos"), py::arg("unit"), py::arg("cover"));
  m.def("galois_act_invariant", &galois_act_invariant, py::arg("invariant"), py::arg("unit"),
        py::arg("cover"));
  m.def(
      "estimate_m_big",
      [](const SchurCover &cover, unsigned degree_cap,
         std::uint64_t orbit_cap) -> py::object {
        auto m_ = estimate_m_big(cover, degree_cap, orbit_cap);
        if (m_)
          return py::cast(*m_);
        return py::none();
      },
      py::arg("cover"), py::arg("degree_cap"), py::arg("orbit_cap") = kDefaultOrbitCap);

  m.def("parse_cycles", &parse_cycles, py::arg("text"), py::arg("degree"));
  m.def("cycle_string", &cycle_string, py::arg("perm"));
}
