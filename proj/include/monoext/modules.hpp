// Module constructions: inflation, duals, tensor and Hom modules,
// coinduction and induction from maximal subgroups, Hom spaces,
// projectivity and recognition of induced permutation modules.
#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "monoext/green.hpp"
#include "monoext/mset.hpp"
#include "monoext/rep.hpp"

namespace monoext {

  using MonoidPtr = std::shared_ptr<FiniteMonoid const>;
  using GroupPtr = std::shared_ptr<GroupTable const>;

  // Every element acts as the identity.
  MonRep trivial_module(MonoidPtr m, Field const& f);

  // V inflated along psi: M -> G(M); v must be over completion.group.
  MonRep inflate_completion(MonoidPtr m, GroupCompletion const& completion, GroupRep const& v);

  // V over the unit group (maximal_subgroup(M, 0), same multiplication
  // table) with every non-unit acting as zero.
  MonRep inflate_units(MonoidPtr m, GroupRep const& v);

  // The trivial module of the unit group inflated this way: units act as 1
  // and non-units as 0.
  MonRep trivial_of_units(MonoidPtr m, Field const& f);

  // KM with left multiplication, basis indexed by elements.
  MonRep regular_module(MonoidPtr m, Field const& f);

  // rho(g^-1)^T.
  GroupRep contragredient(GroupRep const& v);

  // The transpose representation, a left module over the opposite monoid.
  MonRep dual_op(MonRep const& v, MonoidPtr opposite);

  // Action of g in G (given with its embedding into M) on V.  Requires
  // rho(e) = I where e is the identity of G.
  GroupRep restrict_to_group(MonRep const& v, GroupPtr g);

  // Kronecker products rho_V(x) ⊗ rho_W(x).
  MonRep tensor(MonRep const& v, MonRep const& w);
  GroupRep tensor(GroupRep const& v, GroupRep const& w);

  // Hom_K(V, W) with (m f)(v) = rho_W(m) f(rho_V(m)^-1 v); V must act
  // invertibly.  A map f is vectorized row-major: index a * dim V + b holds
  // the coefficient of w_a in f(v_b).
  MonRep hom_module(MonRep const& v, MonRep const& w);

  // The K-linear isomorphism Hom_K(V, W) -> V* ⊗ W sending the row-major
  // vectorization to the Kronecker basis (index b * dim W + a).
  Matrix hom_to_tensor_swap(std::size_t dim_v, std::size_t dim_w, Field const& f);

  // Coind_e(W) = Hom_{KG_e}(KR_e, W).  Basis: (left orbit representative
  // r_i of G_e \ R_e, basis vector of W) with index i * dim W + j.
  // W must be over rl.group.
  MonRep coinduce(MonoidPtr m, RLData const& rl, GroupRep const& w);

  // Ind_e(W) = KL_e ⊗_{KG_e} W.  Basis: (right orbit representative t_i of
  // L_e / G_e, basis vector of W) with index i * dim W + j.
  MonRep induce(MonoidPtr m, RLData const& rl, GroupRep const& w);

  // eV / R(e)V as a KG_e-module.
  GroupRep local_quotient(MonRep const& v, RLData const& rl);

  // Basis of a space of module maps U -> V, each a dim V x dim U matrix.
  struct HomSpace {
    std::size_t dim = 0;
    std::vector<Matrix> basis;
  };

  // Hom_{KG}(U, V), solving f rho_U(g) = rho_V(g) f over group generators.
  HomSpace equivariant_hom(GroupRep const& u, GroupRep const& v);

  // Hom_{KM}(U, V), solving over monoid generators.
  HomSpace monoid_hom(MonRep const& u, MonRep const& v);

  // True when some equivariant splitting of the free cover
  // KM^{dim V} -> V exists, i.e. V is projective.
  bool is_projective(MonRep const& v);

  // Checks the three conditions under which KX/KY is induced from the
  // G_e-set eX \ eY:
  //   (1) X \ Y lies in MeX,
  //   (2) L(e)X lies in Y,
  //   (3) for x, x' in eX \ eY and t, t' in L_e with tx = t'x', tG_e = t'G_e.
  // Returns the permutation representation of G_e on eX \ eY on success.
  struct InducedWitness {
    std::vector<std::uint32_t> points;  // eX \ eY
    GroupRep permutation;
  };

  std::optional<InducedWitness> induced_recognizer(FiniteMonoid const& m,
                                                   RLData const& rl,
                                                   LeftMSet const& x,
                                                   std::vector<char> const& y,
                                                   Field const& f);

}  // namespace monoext
