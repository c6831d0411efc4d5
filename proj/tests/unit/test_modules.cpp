#include <memory>
#include <random>

#include "doctest.h"
#include "monoext/builders.hpp"
#include "monoext/error.hpp"
#include "monoext/group_algebra.hpp"
#include "monoext/irreps.hpp"
#include "monoext/linalg.hpp"
#include "monoext/modules.hpp"

using namespace monoext;

namespace {

  MonoidPtr share(FiniteMonoid m) {
    return std::make_shared<FiniteMonoid const>(std::move(m));
  }

  GroupPtr group_at(MonoidPtr const& m, Element e) {
    return std::make_shared<GroupTable const>(maximal_subgroup(*m, e));
  }

  // A random invertible integer matrix (unipotent times permutation).
  Matrix random_invertible(Field const& f, std::size_t n, std::mt19937& rng) {
    Matrix u = Matrix::identity(f, n);
    std::uniform_int_distribution<int> coef(-2, 2);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        u.set(i, j, f.from_int(coef(rng)));
      }
    }
    Matrix p(f, n, n);
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) {
      perm[i] = i;
    }
    std::shuffle(perm.begin(), perm.end(), rng);
    for (std::size_t i = 0; i < n; ++i) {
      p.set(perm[i], i, 1);
    }
    return u * p;
  }

  MonRep conjugate(MonRep const& v, Matrix const& a) {
    auto inv = *inverse(a);
    std::vector<Matrix> rho;
    for (auto const& r : v.matrices()) {
      rho.push_back(a * r * inv);
    }
    return MonRep::make(v.monoid_ptr(), v.field(), v.dim(), std::move(rho));
  }

}  // namespace

TEST_CASE("basic module constructions") {
  Field q = Field::rational();
  auto t3 = share(full_transformation_monoid(3));
  auto triv = trivial_module(t3, q);
  CHECK(triv.dim() == 1);
  for (auto const& r : triv.matrices()) {
    CHECK(r == Matrix::identity(q, 1));
  }
  auto nil = share(nilpotent_monoid());
  auto kg = trivial_of_units(nil, q);
  CHECK(kg.rho(0) == Matrix::identity(q, 1));
  CHECK(kg.rho(1).is_zero());
  CHECK(kg.rho(2).is_zero());

  auto units = group_at(t3, 0);
  auto sign = fixture_irrep(units, q, "sign");
  auto inflated = inflate_units(t3, sign);
  std::size_t zeros = 0;
  for (Element x = 0; x < t3->size(); ++x) {
    if (t3->is_unit(x)) {
      auto g = *units->index_of(x);
      CHECK(inflated.rho(x).at(0, 0) == Rational(units->order_of(g) == 2 ? -1 : 1));
    } else {
      zeros += inflated.rho(x).is_zero() ? 1 : 0;
    }
  }
  CHECK(zeros == 21);
  CHECK_FALSE(inflated.is_invertible());
  CHECK(triv.is_invertible());

  // Explicit matrices must be multiplicative.
  std::vector<Matrix> bad(nil->size(), Matrix::identity(q, 1));
  bad[1] = Matrix::from_ints(q, {{2}});
  CHECK_THROWS_AS(MonRep::make(nil, q, 1, bad), Error);
}

TEST_CASE("fixture irreps match groups up to isomorphism") {
  Field q = Field::rational();
  for (std::size_t n = 2; n <= 6; ++n) {
    auto g = std::make_shared<GroupTable const>(GroupTable::cyclic(n));
    auto set = fixture_irreps(g, q);
    REQUIRE(set.has_value());
    // Rational irreps of Z/n: one per divisor, dimensions phi(d) summing to n.
    std::size_t total = 0;
    for (auto const& r : set->irreps) {
      total += r.rep.dim();
      CHECK(equivariant_hom(r.rep, r.rep).dim == r.rep.dim());
    }
    CHECK(total == n);
  }
  auto t4 = share(full_transformation_monoid(4));
  auto s4 = group_at(t4, 0);
  auto set = fixture_irreps(s4, q);
  REQUIRE(set.has_value());
  std::size_t squares = 0;
  for (auto const& a : set->irreps) {
    squares += a.rep.dim() * a.rep.dim();
    for (auto const& b : set->irreps) {
      CHECK(equivariant_hom(a.rep, b.rep).dim == (a.name == b.name ? 1u : 0u));
    }
  }
  CHECK(squares == 24);
  // Mod p reduction keeps representations valid.
  auto f5 = fixture_irreps(s4, Field::prime(5));
  REQUIRE(f5.has_value());
  CHECK(f5->irreps.size() == 5);
  CHECK_FALSE(fixture_irreps(std::make_shared<GroupTable const>(GroupTable::cyclic(7)), q).has_value());
}

TEST_CASE("duals, tensors and Hom modules") {
  Field q = Field::rational();
  auto t3 = share(full_transformation_monoid(3));
  auto s3 = group_at(t3, 0);
  auto set = *fixture_irreps(s3, q);
  for (auto const& v : set.irreps) {
    for (auto const& w : set.irreps) {
      CHECK(equivariant_hom(contragredient(v.rep), contragredient(w.rep)).dim
            == equivariant_hom(w.rep, v.rep).dim);
      CHECK(tensor(v.rep, w.rep).dim() == v.rep.dim() * w.rep.dim());
    }
  }
  auto sign = fixture_irrep(s3, q, "sign");
  CHECK(contragredient(sign).matrices() == sign.matrices());
  CHECK(equivariant_hom(sign, sign).dim == 1);
  CHECK(equivariant_hom(fixture_irrep(s3, q, "trivial"), sign).dim == 0);

  // S_3 as a monoid of permutations: every module is invertible.
  auto g = share(transformation_monoid(3, {{1, 0, 2}, {1, 2, 0}}));
  auto completion = group_completion(*g);
  auto gc = std::make_shared<GroupTable const>(completion.group);
  auto gset = *fixture_irreps(gc, q);
  for (auto const& a : gset.irreps) {
    for (auto const& b : gset.irreps) {
      auto v = inflate_completion(g, completion, a.rep);
      auto w = inflate_completion(g, completion, b.rep);
      auto h = hom_module(v, w);
      // Dual of V as a monoid module: rho(m)^-T.
      std::vector<Matrix> dual;
      for (auto const& r : v.matrices()) {
        dual.push_back(inverse(r)->transpose());
      }
      auto t = tensor(MonRep::make(g, q, v.dim(), dual), w);
      auto p = hom_to_tensor_swap(v.dim(), w.dim(), q);
      for (Element x = 0; x < g->size(); ++x) {
        CHECK(p * h.rho(x) == t.rho(x) * p);
      }
      CHECK(rank(p) == v.dim() * w.dim());
    }
  }
  // Hom(K, W) = W.
  auto w = inflate_completion(g, completion, gset.irreps.back().rep);
  CHECK(hom_module(trivial_module(g, q), w).matrices() == w.matrices());
  CHECK_THROWS_AS(hom_module(trivial_of_units(t3, q), trivial_module(t3, q)), Error);
}

TEST_CASE("coinduction and induction") {
  Field q = Field::rational();
  auto t3 = share(full_transformation_monoid(3));
  for (Element e : t3->idempotents()) {
    auto rl = ideal_data(*t3, e);
    auto ge = std::make_shared<GroupTable const>(rl.group);
    auto set = *fixture_irreps(ge, q);
    for (auto const& w : set.irreps) {
      auto c = coinduce(t3, rl, w.rep);
      auto i = induce(t3, rl, w.rep);
      CHECK(c.dim() * rl.group.size() == rl.r_e.size() * w.rep.dim());
      CHECK(i.dim() * rl.group.size() == rl.l_e.size() * w.rep.dim());
    }
  }
  // e = 1: both are the unit inflation.
  auto rl1 = ideal_data(*t3, 0);
  auto s3 = std::make_shared<GroupTable const>(rl1.group);
  auto std3 = fixture_irrep(s3, q, "standard");
  auto infl = inflate_units(t3, std3);
  CHECK(monoid_hom(coinduce(t3, rl1, std3), infl).dim == 1);
  CHECK(monoid_hom(induce(t3, rl1, std3), infl).dim == 1);
  CHECK(coinduce(t3, rl1, std3).dim() == 2);

  // T_2 with a constant idempotent: R_e = {e} under composition.
  auto t2 = share(full_transformation_monoid(2));
  for (Element e : t2->idempotents()) {
    if (e == 0) {
      continue;
    }
    auto rl = ideal_data(*t2, e);
    auto triv = GroupRep::trivial(std::make_shared<GroupTable const>(rl.group), q);
    CHECK(coinduce(t2, rl, triv).dim() == 1);
    CHECK(induce(t2, rl, triv).dim() == 2);
  }
  // Wrong group.
  auto rl_const = ideal_data(*t3, t3->idempotents().back());
  CHECK_THROWS_AS(coinduce(t3, rl_const, std3), Error);
}

TEST_CASE("Hom into a coinduced module is Hom out of the local quotient") {
  Field q = Field::rational();
  for (auto const& m : {share(full_transformation_monoid(3)), share(affine_monoid(1, 3)), share(rectangular_band_monoid()),
                        share(nilpotent_monoid())}) {
    std::vector<MonRep> sources{trivial_module(m, q), trivial_of_units(m, q), regular_module(m, q)};
    for (Element e : m->idempotents()) {
      auto rl = ideal_data(*m, e);
      auto ge = std::make_shared<GroupTable const>(rl.group);
      auto set = *fixture_irreps(ge, q);
      sources.push_back(induce(m, rl, set.irreps.back().rep));
    }
    for (Element e : m->idempotents()) {
      auto rl = ideal_data(*m, e);
      auto ge = std::make_shared<GroupTable const>(rl.group);
      auto irreps = *fixture_irreps(ge, q);
      for (auto const& w : irreps.irreps) {
        auto c = coinduce(m, rl, w.rep);
        for (auto const& v : sources) {
          CHECK(monoid_hom(v, c).dim == equivariant_hom(local_quotient(v, rl), w.rep).dim);
        }
      }
    }
  }
}

TEST_CASE("dual of an induced module is coinduced over the opposite monoid") {
  Field q = Field::rational();
  for (auto const& m : {share(full_transformation_monoid(3)), share(affine_monoid(1, 3))}) {
    auto op = share(m->opposite());
    for (Element e : m->idempotents()) {
      auto rl = ideal_data(*m, e);
      auto rl_op = ideal_data(*op, e);
      auto ge = std::make_shared<GroupTable const>(rl.group);
      auto ge_op = std::make_shared<GroupTable const>(rl_op.group);
      auto irreps = *fixture_irreps(ge, q);
      for (auto const& w : irreps.irreps) {
        // W^T over the opposite group: same indices, transposed matrices.
        std::vector<Matrix> tr;
        for (auto const& r : w.rep.matrices()) {
          tr.push_back(r.transpose());
        }
        auto w_op = GroupRep::make(ge_op, q, w.rep.dim(), tr);
        auto lhs = dual_op(induce(m, rl, w.rep), op);
        auto rhs = coinduce(op, rl_op, w_op);
        REQUIRE(lhs.dim() == rhs.dim());
        auto hom = monoid_hom(lhs, rhs);
        REQUIRE(hom.dim >= 1);
        CHECK(rank(hom.basis[0]) == lhs.dim());
      }
    }
  }
}

TEST_CASE("projectivity") {
  Field q = Field::rational();
  std::mt19937 rng(7);
  auto nil = share(nilpotent_monoid());
  CHECK(is_projective(regular_module(nil, q)));
  // The zero is a central idempotent z and K = KMz is a summand of KM; the
  // module where x and 0 act as zero is the non-projective simple.
  CHECK(is_projective(trivial_module(nil, q)));
  CHECK_FALSE(is_projective(trivial_of_units(nil, q)));
  CHECK_FALSE(is_projective(trivial_of_units(nil, Field::prime(2))));
  auto z3 = share(cyclic_group_monoid(3));
  CHECK(is_projective(trivial_module(z3, q)));
  CHECK_FALSE(is_projective(trivial_module(z3, Field::prime(3))));
  CHECK(is_projective(trivial_module(z3, Field::prime(2))));
  auto t2 = share(full_transformation_monoid(2));
  auto reg = regular_module(t2, q);
  CHECK(is_projective(reg));
  CHECK(is_projective(conjugate(reg, random_invertible(q, reg.dim(), rng))));
  auto triv = trivial_module(t2, q);
  // K over T_2: the constant maps give a splitting, so K is projective.
  CHECK(is_projective(triv) == is_projective(conjugate(triv, random_invertible(q, 1, rng))));
  auto sum_dim = trivial_of_units(nil, q);
  CHECK(is_projective(sum_dim) == is_projective(conjugate(sum_dim, random_invertible(q, 1, rng))));
}

TEST_CASE("induced permutation modules are recognized") {
  Field q = Field::rational();
  auto g = share(transformation_monoid(3, {{1, 0, 2}, {1, 2, 0}}));
  auto rl = ideal_data(*g, 0);
  std::vector<char> none(g->size(), 0);
  auto w = induced_recognizer(*g, rl, left_regular(*g), none, q);
  REQUIRE(w.has_value());
  CHECK(w->points.size() == 6);
  CHECK(w->permutation.dim() == 6);

  auto t3 = share(full_transformation_monoid(3));
  auto rl3 = ideal_data(*t3, 0);
  std::vector<char> empty(t3->size(), 0);
  CHECK_FALSE(induced_recognizer(*t3, rl3, left_regular(*t3), empty, q).has_value());
  // Relative to the singular ideal it is the regular S_3-set.
  std::vector<char> sing(t3->size(), 0);
  for (Element x = 0; x < t3->size(); ++x) {
    sing[x] = t3->is_unit(x) ? 0 : 1;
  }
  auto w3 = induced_recognizer(*t3, rl3, left_regular(*t3), sing, q);
  REQUIRE(w3.has_value());
  CHECK(w3->points.size() == 6);
}

TEST_CASE("right inverses over group algebras") {
  Field q = Field::rational();
  auto z3 = GroupTable::cyclic(3);
  auto inv = group_algebra_right_inverse({{1}}, z3, q);
  REQUIRE(inv.has_value());
  CHECK((*inv)[0][0][2] == Rational(1));
  CHECK((*inv)[0][0][0] == Rational(0));
  CHECK_FALSE(group_algebra_right_inverse({{-1}}, z3, q).has_value());

  auto m22 = matrix_monoid(2, 2);
  auto gs = green_structure(m22);
  std::size_t checked = 0;
  for (std::uint32_t j = 0; j < gs.num_j(); ++j) {
    if (!gs.regular_j[j]) {
      continue;
    }
    auto data = sandwich_matrix(m22, gs, j);
    std::vector<std::vector<std::int64_t>> p(data.b_classes.size(), std::vector<std::int64_t>(data.a_classes.size()));
    for (std::size_t b = 0; b < p.size(); ++b) {
      for (std::size_t a = 0; a < p[b].size(); ++a) {
        p[b][a] = data.entry(b, a);
      }
    }
    auto qinv = group_algebra_right_inverse(p, data.group, q);
    REQUIRE(qinv.has_value());
    auto prod = ga_product(p, *qinv, data.group, q);
    for (std::size_t b = 0; b < p.size(); ++b) {
      for (std::size_t c = 0; c < p.size(); ++c) {
        CHECK(prod[b][c][0] == Rational(b == c ? 1 : 0));
      }
    }
    if (data.a_classes.size() == 3) {
      CHECK_FALSE(group_algebra_right_inverse(p, data.group, Field::prime(2)).has_value());
    }
    ++checked;
  }
  CHECK(checked == 3);
}
