#include <algorithm>
#include <set>

#include "doctest.h"
#include "monoext/builders.hpp"
#include "monoext/error.hpp"
#include "monoext/green.hpp"

using namespace monoext;

namespace {

  // Counts of idempotent transformations, computed directly from the maps.
  std::size_t count_idempotent_maps(std::size_t n) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
      total *= n;
    }
    std::size_t count = 0;
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<std::size_t> f(n);
      std::size_t c = code;
      for (std::size_t i = 0; i < n; ++i) {
        f[i] = c % n;
        c /= n;
      }
      bool idem = true;
      for (std::size_t i = 0; i < n; ++i) {
        idem = idem && f[f[i]] == f[i];
      }
      count += idem ? 1 : 0;
    }
    return count;
  }

}  // namespace

TEST_CASE("full transformation monoids have the right size and idempotents") {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto m = full_transformation_monoid(n);
    std::size_t expect = 1;
    for (std::size_t i = 0; i < n; ++i) {
      expect *= n;
    }
    CHECK(m.size() == expect);
    CHECK(m.idempotents().size() == count_idempotent_maps(n));
  }
}

TEST_CASE("green structure of T_3 has one J-class per rank") {
  auto m = full_transformation_monoid(3);
  auto g = green_structure(m);
  CHECK(g.num_j() == 3);
  std::multiset<std::size_t> sizes;
  for (auto const& j : g.j_classes) {
    sizes.insert(j.size());
  }
  // Ranks 3, 2, 1 give 6, 18 and 3 elements.
  CHECK(sizes == std::multiset<std::size_t>{3, 6, 18});
  CHECK(j_order_height(g) == 2);
  auto flags = structural_flags(m);
  CHECK(flags.regular);
  CHECK(flags.dedekind_finite);
  CHECK(flags.right_pp);
  CHECK(flags.left_pp);
}

TEST_CASE("T_2 has two J-classes and three idempotents") {
  auto m = full_transformation_monoid(2);
  auto g = green_structure(m);
  CHECK(g.num_j() == 2);
  CHECK(g.idempotents.size() == 3);
  auto comp = group_completion(m);
  CHECK(comp.group.size() == 1);
}

TEST_CASE("matrix monoid M_2(F_2)") {
  auto m = matrix_monoid(2, 2);
  CHECK(m.size() == 16);
  auto g = green_structure(m);
  std::multiset<std::size_t> sizes;
  for (auto const& j : g.j_classes) {
    sizes.insert(j.size());
  }
  CHECK(sizes == std::multiset<std::size_t>{1, 6, 9});
  CHECK(j_order_height(g) == 2);
  auto units = m.units();
  CHECK(units.size() == 6);
}

TEST_CASE("matrix and affine monoid sizes") {
  CHECK(matrix_monoid(2, 3).size() == 81);
  CHECK(matrix_monoid(1, 4).size() == 4);
  CHECK(affine_monoid(1, 2).size() == 4);
  CHECK(affine_monoid(1, 3).size() == 9);
  CHECK(affine_monoid(2, 2).size() == 64);
}

TEST_CASE("affine monoid Aff(1,2)") {
  auto m = affine_monoid(1, 2);
  CHECK(m.units().size() == 2);
  auto g = green_structure(m);
  CHECK(j_order_height(g) == 1);
  CHECK(j_order_height(green_structure(affine_monoid(2, 2))) == 2);
}

TEST_CASE("maximal subgroups of T_3") {
  auto m = full_transformation_monoid(3);
  for (Element e : m.idempotents()) {
    auto grp = maximal_subgroup(m, e);
    std::set<Element> image;
    for (Element x = 0; x < 3; ++x) {
      image.insert(x);
    }
    // The group at e is the symmetric group on the image of e.
    std::vector<std::uint32_t> const& row = m.table_rows()[e];
    (void) row;
    CHECK((grp.size() == 1 || grp.size() == 2 || grp.size() == 6));
    CHECK(grp.embedding()[0] == e);
  }
  CHECK(maximal_subgroup(m, 0).size() == 6);
}

TEST_CASE("sandwich matrix of the rank-2 J-class of T_3") {
  auto m = full_transformation_monoid(3);
  auto g = green_structure(m);
  std::uint32_t j2 = 0;
  for (std::uint32_t j = 0; j < g.num_j(); ++j) {
    if (g.j_classes[j].size() == 18) {
      j2 = j;
    }
  }
  auto d = sandwich_matrix(m, g, j2);
  // Three images and three kernels.
  CHECK(d.a_classes.size() == 3);
  CHECK(d.b_classes.size() == 3);
  CHECK(d.group.size() == 2);
  CHECK(d.entry(0, 0) == 0);
  std::size_t zeros = 0;
  for (auto v : d.sandwich) {
    zeros += v < 0 ? 1 : 0;
  }
  // A kernel {i,j} misses an image of size two in exactly one way.
  CHECK(zeros == 3);
}

TEST_CASE("ideal data gives free orbits") {
  auto m = full_transformation_monoid(3);
  for (Element e : m.idempotents()) {
    auto d = ideal_data(m, e);
    CHECK(d.r_e.size() == d.left_orbit_reps.size() * d.group.size());
    CHECK(d.l_e.size() == d.right_orbit_reps.size() * d.group.size());
  }
}

TEST_CASE("principal series grows by J-classes") {
  auto m = full_transformation_monoid(3);
  auto g = green_structure(m);
  auto s = principal_series(m, g);
  REQUIRE(s.size() == 3);
  CHECK(s[0].size() == 3);
  CHECK(s[1].size() == 21);
  CHECK(s[2].size() == 27);
}

TEST_CASE("group completion is a homomorphism") {
  auto check = [](FiniteMonoid const& m, std::size_t expected) {
    auto c = group_completion(m);
    CHECK(c.group.size() == expected);
    for (Element a = 0; a < m.size(); ++a) {
      for (Element b = 0; b < m.size(); ++b) {
        CHECK(c.psi[m.mul(a, b)] == c.group.mul(c.psi[a], c.psi[b]));
      }
    }
  };
  check(full_transformation_monoid(3), 1);
  check(matrix_monoid(2, 2), 1);
  check(transformation_monoid(3, {{1, 2, 0}}), 3);
}

TEST_CASE("crossed product axioms are checked") {
  auto z2 = transformation_monoid(2, {{1, 0}});
  auto semi = transformation_monoid(2, {{0, 0}});
  std::vector<std::vector<Element>> alpha(z2.size());
  for (Element n = 0; n < z2.size(); ++n) {
    alpha[n].resize(semi.size());
    for (Element x = 0; x < semi.size(); ++x) {
      alpha[n][x] = x;
    }
  }
  auto sys = CrossedSystem::semidirect(semi, z2, alpha);
  CHECK_NOTHROW(validate_crossed_system(sys));
  auto p = crossed_product(sys);
  CHECK(p.size() == 4);
  auto proj = crossed_projection(sys);
  CHECK(is_homomorphism(p, z2, proj));

  auto bad = sys;
  bad.alpha[1][0] = 1;
  CHECK_THROWS_AS(validate_crossed_system(bad), Error);
}
