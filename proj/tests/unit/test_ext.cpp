#include <memory>
#include <string>
#include <vector>

#include "doctest.h"
#include "monoext/builders.hpp"
#include "monoext/error.hpp"
#include "monoext/ext.hpp"
#include "monoext/green.hpp"
#include "monoext/irreps.hpp"
#include "monoext/modules.hpp"
#include "monoext/mset.hpp"

using namespace monoext;

namespace {

  MonoidPtr share(FiniteMonoid m) {
    return std::make_shared<FiniteMonoid const>(std::move(m));
  }

  // An idempotent generating a minimal right ideal (so R(e) is empty).
  Element minimal_idempotent(FiniteMonoid const& m) {
    for (Element e : m.idempotents()) {
      if (ideal_data(m, e).r_minus.empty()) {
        return e;
      }
    }
    FAIL("no minimal idempotent");
    return 0;
  }

  std::vector<std::size_t> seq(std::initializer_list<std::size_t> xs) {
    return xs;
  }

}  // namespace

TEST_CASE("cohomology of T_3 with simple unit-group coefficients") {
  auto t3 = share(full_transformation_monoid(3));
  for (Field f : {Field::rational(), Field::prime(5)}) {
    auto g = std::make_shared<GroupTable const>(maximal_subgroup(*t3, 0));
    auto irr = fixture_irreps(g, f);
    REQUIRE(irr.has_value());
    auto k = trivial_module(t3, f);
    RLData rl = ideal_data(*t3, 0);
    for (auto const& ir : irr->irreps) {
      auto top = ext_topological(k, 0, ir.rep, 0, 3);
      auto orc = ext_oracle(k, coinduce(t3, rl, ir.rep), 0, 3);
      CHECK(top.dims == orc.dims);
      if (ir.name == "sign") {
        CHECK(top.dims == seq({0, 0, 1, 0}));
      } else {
        CHECK(top.dims == seq({0, 0, 0, 0}));
      }
    }
  }
}

TEST_CASE("oracle with trivial source equals monoid cohomology") {
  Field q = Field::rational();
  for (auto m : {share(full_transformation_monoid(2)), share(affine_monoid(1, 2)), share(nilpotent_monoid()),
                 share(rectangular_band_monoid())}) {
    auto k = trivial_module(m, q);
    auto kg = trivial_of_units(m, q);
    CHECK(ext_oracle(k, k, 0, 3).dims == monoid_cohomology(k, 0, 3).dims);
    CHECK(ext_oracle(k, kg, 0, 3).dims == monoid_cohomology(kg, 0, 3).dims);
  }
}

TEST_CASE("cohomology of a group is group cohomology") {
  auto z2 = share(cyclic_group_monoid(2));
  CHECK(monoid_cohomology(trivial_module(z2, Field::rational()), 0, 3).dims == seq({1, 0, 0, 0}));
  CHECK(monoid_cohomology(trivial_module(z2, Field::prime(2)), 0, 3).dims == seq({1, 1, 1, 1}));
}

TEST_CASE("two trivial modules through the orbit quotient") {
  for (auto m : {share(full_transformation_monoid(2)), share(affine_monoid(1, 2)), share(nilpotent_monoid()),
                 share(two_element_semilattice()), share(rectangular_band_monoid())}) {
    for (Field f : {Field::rational(), Field::prime(2)}) {
      auto orc = ext_oracle(trivial_module(m, f), trivial_of_units(m, f), 0, 2);
      CHECK(ext_two_trivials(m, f, 0, 2).dims == orc.dims);
    }
  }
}

TEST_CASE("degree -1 homology slot for a minimal right ideal") {
  Field q = Field::rational();
  auto aff = share(affine_monoid(1, 2));
  Element e = minimal_idempotent(*aff);
  auto g = std::make_shared<GroupTable const>(maximal_subgroup(*aff, e));
  auto w = fixture_irrep(g, q, "trivial");
  auto k = trivial_module(aff, q);
  auto top = ext_topological(k, e, w, 0, 2);
  CHECK(top.dims == seq({1, 0, 0}));
  CHECK(ext_oracle(k, coinduce(aff, ideal_data(*aff, e), w), 0, 2).dims == top.dims);
  CHECK(reduced_homology_rep(aff, e, q, -1).dim() == 1);
  CHECK_THROWS_AS(ext1_fast(k, e, w), Error);
}

TEST_CASE("fast Ext^1 matches the oracle in bad characteristic") {
  Field f2 = Field::prime(2);
  auto t3 = share(full_transformation_monoid(3));
  auto k = trivial_module(t3, f2);
  auto g = std::make_shared<GroupTable const>(maximal_subgroup(*t3, 0));
  auto w = fixture_irrep(g, f2, "trivial");
  CHECK_THROWS_AS(ext_topological(k, 0, w, 0, 1), Error);
  auto fast = ext1_fast(k, 0, w);
  auto orc = ext_oracle(k, trivial_of_units(t3, f2), 0, 1);
  CHECK(fast.at(1) == orc.at(1));
}

TEST_CASE("Ext out of induced modules through the opposite monoid") {
  Field q = Field::rational();
  for (auto m : {share(full_transformation_monoid(2)), share(affine_monoid(1, 2))}) {
    auto k = trivial_module(m, q);
    for (Element e : m->idempotents()) {
      RLData rl = ideal_data(*m, e);
      auto g = std::make_shared<GroupTable const>(rl.group);
      auto irr = fixture_irreps(g, q);
      REQUIRE(irr.has_value());
      for (auto const& ir : irr->irreps) {
        auto via_op = ext_from_induced(k, e, ir.rep, 0, 2);
        auto direct = ext_oracle(induce(m, rl, ir.rep), k, 0, 2);
        CHECK(via_op.dims == direct.dims);
      }
    }
  }
}

TEST_CASE("Tor and homology") {
  Field q = Field::rational();
  auto z2 = share(cyclic_group_monoid(2));
  CHECK(monoid_homology(z2, q, 2) == seq({1, 0, 0}));
  CHECK(monoid_homology(z2, Field::prime(2), 2) == seq({1, 1, 1}));
  auto t2 = share(full_transformation_monoid(2));
  // A monoid with a left zero is contractible.
  CHECK(monoid_homology(t2, q, 2) == seq({1, 0, 0}));
  auto tor = tor_bar(t2, right_regular(*t2), left_point(*t2), q, 2);
  CHECK(tor == seq({1, 0, 0}));
}

TEST_CASE("homological epimorphism checks") {
  auto aff = share(affine_monoid(1, 2));
  auto m1 = share(matrix_monoid(1, 2));
  auto v = homological_epi_check(aff, m1, affine_linear_part(1, 2), Field::rational(), 2);
  CHECK(v.surjective);
  CHECK(v.tor_dims == seq({0, 0}));
  CHECK(v.homological_epi_up_to_d);

  auto sys = CrossedSystem::semidirect(cyclic_group_monoid(2), cyclic_group_monoid(1), {{0, 1}});
  auto prod = share(crossed_product(sys));
  auto one = share(cyclic_group_monoid(1));
  auto w = homological_epi_check(prod, one, crossed_projection(sys), Field::prime(2), 1,
                                 share(cyclic_group_monoid(2)));
  CHECK(w.tor_dims == seq({1}));
  CHECK_FALSE(w.homological_epi_up_to_d);
  REQUIRE(w.crossed_prediction.has_value());
  CHECK(*w.crossed_prediction == w.tor_dims);
}

TEST_CASE("global dimension bounds") {
  Field q = Field::rational();
  auto b12 = global_dimension_bound(affine_monoid(1, 2), q);
  CHECK(b12.applicable);
  CHECK(b12.bound == 1);
  auto b22 = global_dimension_bound(affine_monoid(2, 2), q);
  CHECK(b22.applicable);
  CHECK(b22.bound == 2);
  auto m2 = global_dimension_bound(matrix_monoid(2, 2), Field::prime(2));
  CHECK_FALSE(m2.applicable);
  CHECK_FALSE(m2.reasons.empty());
  // The rank 2 class of T_3 has a singular square sandwich matrix.
  auto t3 = global_dimension_bound(full_transformation_monoid(3), q);
  CHECK_FALSE(t3.applicable);
}

TEST_CASE("standard resolution of Aff(1,3)") {
  Field q = Field::rational();
  auto aff = share(affine_monoid(1, 3));
  auto r = standard_resolution(aff, q);
  CHECK(r.length == 1);
  CHECK(r.dims == seq({1, 4, 3}));
  for (bool b : r.exact) {
    CHECK(b);
  }
  CHECK(r.projectivity_checked);
  for (bool b : r.projective) {
    CHECK(b);
  }
  CHECK(r.equivariant);
  CHECK(r.cellular);
  for (auto const& layer : r.layers) {
    CHECK(layer.accepted);
  }

  auto k = trivial_module(aff, q);
  for (Element e : aff->idempotents()) {
    RLData rl = ideal_data(*aff, e);
    auto g = std::make_shared<GroupTable const>(rl.group);
    auto irr = fixture_irreps(g, q);
    REQUIRE(irr.has_value());
    for (auto const& ir : irr->irreps) {
      auto n = coinduce(aff, rl, ir.rep);
      CHECK(ext_from_resolution(r, n) == ext_topological(k, e, ir.rep, 0, 1).dims);
    }
  }
}

TEST_CASE("standard resolution of a group is a point") {
  auto z3 = share(cyclic_group_monoid(3));
  auto r = standard_resolution(z3, Field::rational());
  CHECK(r.length == 0);
  CHECK(r.projective.at(0));
}

TEST_CASE("simple modules of Aff(1,2)") {
  Field q = Field::rational();
  auto aff = share(affine_monoid(1, 2));
  auto simples = simple_modules_coind(aff, q);
  REQUIRE(simples.size() == 3);
  for (auto const& s : simples) {
    CHECK(s.module.dim() == 1);
  }
  auto gs = green_structure(*aff);
  for (auto const& a : simples) {
    for (auto const& b : simples) {
      if (!gs.j_leq[a.j][b.j] || a.j == b.j) {
        auto ext = ext_oracle(a.module, b.module, 1, 2);
        CHECK(ext.dims == seq({0, 0}));
      }
    }
  }
  CHECK_THROWS_AS(simple_modules_coind(share(matrix_monoid(2, 2)), Field::prime(2)), Error);
}

TEST_CASE("oracle cap truncates honestly") {
  auto t3 = share(full_transformation_monoid(3));
  auto k = trivial_module(t3, Field::rational());
  ExtOptions opt;
  opt.cap = 1000;
  auto r = ext_oracle(k, k, 0, 4, opt);
  CHECK(r.valid_through < 4);
  CHECK(r.hi() == r.valid_through);
  CHECK_FALSE(r.notes.empty());
}
