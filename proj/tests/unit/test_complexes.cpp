#include <algorithm>
#include <memory>

#include "doctest.h"
#include "monoext/builders.hpp"
#include "monoext/chain_complex.hpp"
#include "monoext/error.hpp"
#include "monoext/green.hpp"

using namespace monoext;

namespace {

  std::vector<Element> singular_elements(FiniteMonoid const& m) {
    std::vector<Element> out;
    for (Element x = 0; x < m.size(); ++x) {
      if (!m.is_unit(x)) {
        out.push_back(x);
      }
    }
    return out;
  }

  std::vector<std::size_t> reduced_homology(SimplicialComplex const& x, Field const& f, int hi) {
    auto s = simplicial_chains(x, nullptr, f, true);
    return homology(s.complex, -1, hi).dims;
  }

}  // namespace

TEST_CASE("poset axioms are validated") {
  CHECK_THROWS_AS(Poset::make({}, {{1, 1}, {1, 1}}), Error);
  CHECK_THROWS_AS(Poset::make({}, {{1, 1, 0}, {0, 1, 1}, {0, 0, 1}}), Error);
  auto p = Poset::make({}, {{1, 1, 1}, {0, 1, 1}, {0, 0, 1}});
  CHECK(path_components(p) == 1);
  auto antichain = Poset::make({}, {{1, 0}, {0, 1}});
  CHECK(path_components(antichain) == 2);
  CHECK(reduced_homology(order_complex(antichain), Field::rational(), 1)
        == std::vector<std::size_t>{0, 1, 0});
}

TEST_CASE("simplicial homology of small spaces") {
  Field q = Field::rational();
  // Boundary of a triangle: a circle.
  auto circle = SimplicialComplex::from_facets(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(reduced_homology(circle, q, 2) == std::vector<std::size_t>{0, 0, 1, 0});
  CHECK(euler_characteristic(circle) == 0);
  // Empty complex: only the (-1)-slot survives.
  SimplicialComplex empty;
  CHECK(reduced_homology(empty, q, 1) == std::vector<std::size_t>{1, 0, 0});
  // Disk relative to its boundary circle is a 2-sphere in relative homology.
  auto disk = SimplicialComplex::from_facets(3, {{0, 1, 2}});
  auto rel = simplicial_chains(disk, &circle, q, false);
  CHECK(homology(rel.complex, 0, 2).dims == std::vector<std::size_t>{0, 0, 1});
  CHECK(boundaries_compose_to_zero(rel.complex));
  auto not_sub = SimplicialComplex::from_facets(4, {{0, 3}});
  CHECK_THROWS_AS(simplicial_chains(disk, &not_sub, q, false), Error);
  // Real projective plane (6 vertex triangulation): torsion shows in F_2.
  auto rp2 = SimplicialComplex::from_facets(
      6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5}, {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {1, 3, 5}, {2, 4, 5}});
  CHECK(reduced_homology(rp2, q, 2) == std::vector<std::size_t>{0, 0, 0, 0});
  CHECK(reduced_homology(rp2, Field::prime(2), 2) == std::vector<std::size_t>{0, 0, 1, 1});
}

TEST_CASE("T_3: order complex of Omega(S) is a hexagon carrying the sign action") {
  auto m = std::make_shared<FiniteMonoid const>(full_transformation_monoid(3));
  auto sing = singular_elements(*m);
  auto x = right_ideal_mset(*m, sing);
  auto omega = omega_poset(x);
  CHECK(omega.poset.size() == 6);
  // Linear extension: every relation goes up in index.
  for (std::size_t a = 0; a < omega.poset.size(); ++a) {
    for (std::size_t b = 0; b < omega.poset.size(); ++b) {
      if (omega.poset.less(a, b)) {
        CHECK(a < b);
      }
    }
  }
  auto delta = order_complex(omega.poset);
  CHECK(delta.count(0) == 6);
  CHECK(delta.count(1) == 6);
  CHECK(delta.dimension() == 1);

  auto chains = std::make_shared<SimplicialChains>(simplicial_chains(delta, nullptr, Field::rational(), true));
  CHECK(homology(chains->complex, -1, 2).dims == std::vector<std::size_t>{0, 0, 1, 0});

  auto g = std::make_shared<GroupTable const>(maximal_subgroup(*m, 0));
  REQUIRE(g->size() == 6);
  std::vector<std::uint32_t> pos(m->size(), UINT32_MAX);
  for (std::uint32_t i = 0; i < sing.size(); ++i) {
    pos[sing[i]] = i;
  }
  std::vector<std::vector<std::uint32_t>> vmaps;
  for (std::uint32_t el = 0; el < g->size(); ++el) {
    std::vector<std::uint32_t> vm(omega.poset.size());
    for (std::uint32_t v = 0; v < vm.size(); ++v) {
      Element gx = m->mul(g->embedding()[el], sing[omega.generator[v]]);
      vm[v] = omega.class_of[pos[gx]];
    }
    vmaps.push_back(std::move(vm));
  }
  auto action = simplicial_action(chains, g, vmaps);
  auto h1 = g_action_on_homology(chains->complex, action, 1);
  REQUIRE(h1.dim() == 1);
  for (std::uint32_t el = 0; el < g->size(); ++el) {
    Rational expected = g->order_of(el) == 2 ? Rational(-1) : Rational(1);
    CHECK(h1.rho(el).at(0, 0) == expected);
  }
  // H_0 of the unreduced hexagon is the trivial module.
  auto plain = simplicial_chains(delta, nullptr, Field::rational(), false);
  auto h0 = g_action_on_homology(plain.complex, simplicial_action(std::make_shared<SimplicialChains>(plain), g, vmaps), 0);
  REQUIRE(h0.dim() == 1);
  for (std::uint32_t el = 0; el < g->size(); ++el) {
    CHECK(h0.rho(el).at(0, 0) == Rational(1));
  }
}

TEST_CASE("T_4: order complex of Omega(S) is a 2-sphere") {
  auto m = full_transformation_monoid(4);
  auto x = right_ideal_mset(m, singular_elements(m));
  auto omega = omega_poset(x);
  CHECK(omega.poset.size() == 14);
  auto delta = order_complex(omega.poset);
  for (auto f : {Field::rational(), Field::prime(2), Field::prime(3)}) {
    CHECK(reduced_homology(delta, f, 3) == std::vector<std::size_t>{0, 0, 0, 1, 0});
  }
}

TEST_CASE("nerve of a right p.p. M-set agrees with the order complex of Omega") {
  auto m = std::make_shared<FiniteMonoid const>(full_transformation_monoid(3));
  auto x = right_ideal_mset(*m, singular_elements(*m));
  auto layout = nerve_layout(m, x, {}, true);
  auto c = bar_chain_complex(layout, Field::rational(), 3);
  CHECK(c.dim(-1) == 1);
  CHECK(c.dim(0) == 21);
  CHECK(c.dim(1) == 21 * 26);
  CHECK(boundaries_compose_to_zero(c));
  CHECK(homology(c, -1, 2).dims == std::vector<std::size_t>{0, 0, 1, 0});
  CHECK_THROWS_AS(homology(c, -1, 3), Error);
  CHECK_THROWS_AS(bar_chain_complex(layout, Field::rational(), 3, 1000), Error);
}

TEST_CASE("relative nerve and two-sided bar complexes") {
  auto m = std::make_shared<FiniteMonoid const>(full_transformation_monoid(2));
  // Nerve of the regular right M-set is contractible (initial object 1).
  auto reg = nerve_layout(m, right_regular(*m), {}, true);
  auto c = bar_chain_complex(reg, Field::rational(), 4);
  CHECK(boundaries_compose_to_zero(c));
  CHECK(homology(c, -1, 3).dims == std::vector<std::size_t>{0, 0, 0, 0, 0});
  // B(M, M, pt) is also contractible; B(pt, M, pt) computes Tor over KM of
  // the trivial modules, which vanishes above degree 0 since M has a zero.
  BarSpec spec{m, right_point(*m), left_point(*m), {}, false};
  auto bar = bar_chain_complex(std::make_shared<BarLayout const>(spec), Field::rational(), 4);
  CHECK(boundaries_compose_to_zero(bar));
  CHECK(homology(bar, 0, 3).dims == std::vector<std::size_t>{1, 0, 0, 0});
  // Relative to the invariant subset of non-units of M.
  std::vector<char> sub(m->size(), 0);
  for (Element a = 0; a < m->size(); ++a) {
    sub[a] = m->is_unit(a) ? 0 : 1;
  }
  auto rel = bar_chain_complex(nerve_layout(m, right_regular(*m), sub), Field::rational(), 3);
  CHECK(boundaries_compose_to_zero(rel));
  CHECK(rel.dim(0) == 2);
  std::vector<char> bad(m->size(), 0);
  bad[0] = 1;
  CHECK_THROWS_AS(nerve_layout(m, right_regular(*m), bad), Error);
}
