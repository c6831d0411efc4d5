// Ext, Tor and cohomology of finite monoid algebras.
//
// Two independent routes are provided.  The topological route evaluates
//
//   dim Ext^n_{KM}(V, Coind_e(W)) = dim Hom_{KG_e}(H~_{n-1}(R(e)), V* ⊗ W)
//
// where H~ is the reduced homology of the order complex of the poset of
// cyclic right ideals inside R(e) (or of the nerve of R(e) as an M-set when
// M is not right p.p.), valid when V is inflated from the group completion
// and char K does not divide |G_e|.  The oracle route builds the cochain
// complex Hom_{KM}(B_q ⊗ V, W) of the normalized bar resolution directly.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monoext/chain_complex.hpp"
#include "monoext/group_algebra.hpp"
#include "monoext/modules.hpp"

namespace monoext {

  struct ExtReport {
    std::string method;
    int lo = 0;
    // dims[k] is the dimension in degree lo + k, for degrees up to
    // valid_through (which may be below the requested top degree when a
    // cap truncated the computation).
    std::vector<std::size_t> dims;
    int valid_through = 0;
    std::vector<std::pair<std::string, std::string>> assumptions;
    std::vector<std::string> notes;

    [[nodiscard]] std::size_t at(int n) const {
      return dims.at(static_cast<std::size_t>(n - lo));
    }
    [[nodiscard]] int hi() const {
      return lo + static_cast<int>(dims.size()) - 1;
    }
  };

  struct ExtOptions {
    std::size_t cap = kDefaultCellCap;
  };

  // H^q(M, V) for q in [lo, hi] from the normalized cochain complex
  // C^q = Hom((M \ 1)^q, V) with
  //   (d f)(m_q..m_0) = f(m_q..m_1)
  //                   + sum_{i=0}^{q-1} (-1)^(i+1) f(.., m_{i+1} m_i, ..)
  //                   + (-1)^(q+1) m_q f(m_{q-1}..m_0).
  ExtReport monoid_cohomology(MonRep const& v, int lo, int hi, ExtOptions const& opt = {});

  // Ext^n_{KM}(V, W) from Hom_{KM}(KM ⊗ (KM̄)^{⊗q} ⊗ V, W), identified with
  // functions f(m_q..m_1; v) in W.  Degree 0 is Hom_{KM}(V, W).
  ExtReport ext_oracle(MonRep const& v, MonRep const& w, int lo, int hi, ExtOptions const& opt = {});

  // The representation of G_e (a copy of ideal_data(M, e).group) on
  // H~_d(R(e)) computed from the order complex of Omega(R(e)), d >= -1.
  GroupRep reduced_homology_rep(MonoidPtr m, Element e, Field const& f, int d);

  // Ext^n(V, Coind_e(W)) by the topological formula.  Throws
  // kBadCharacteristic when char K divides |G_e| and kHypothesis when V
  // does not act invertibly.
  ExtReport ext_topological(MonRep const& v, Element e, GroupRep const& w, int lo, int hi,
                            ExtOptions const& opt = {});

  // Ext^1(V, Coind_e(W)) = Hom_{KG_e}(H~_0(R(e)), V* ⊗ W) in any
  // characteristic.  Throws kMinimalIdeal when R(e) is empty.
  ExtReport ext1_fast(MonRep const& v, Element e, GroupRep const& w);

  // Ext^n(Ind_e(W), V) via the opposite monoid: dualizing turns Ind_e(W)
  // into Coind_e(W^T) over M^op and V into its transpose module.
  ExtReport ext_from_induced(MonRep const& v, Element e, GroupRep const& w, int lo, int hi,
                             ExtOptions const& opt = {});

  // Ext^n(K, K_(G)) as the relative homology of the quotient pair
  // (G \ M, G \ S) with S the non-units, through its nerve.
  ExtReport ext_two_trivials(MonoidPtr m, Field const& f, int lo, int hi, ExtOptions const& opt = {});

  // Tor_i^{KM}(KX, KY) = H_i(B(X, M, Y)) for i in [0, max_n].
  std::vector<std::size_t> tor_bar(MonoidPtr m, RightMSet const& x, LeftMSet const& y, Field const& f, int max_n,
                                   ExtOptions const& opt = {});

  // H_i(M, K) with trivial coefficients for i in [0, max_n].
  std::vector<std::size_t> monoid_homology(MonoidPtr m, Field const& f, int max_n, ExtOptions const& opt = {});

  struct HomEpiVerdict {
    bool surjective = false;
    std::string epi_status;  // "surjective" or "unknown"
    std::vector<std::size_t> tor_dims;  // H_i(B(N, M, N)) for i = 1..d
    bool homological_epi_up_to_d = false;
    // For crossed product projections: |N| * dim H_i(base) for i = 1..d.
    std::optional<std::vector<std::size_t>> crossed_prediction;
  };

  HomEpiVerdict homological_epi_check(MonoidPtr m, MonoidPtr n, std::vector<Element> const& phi, Field const& f,
                                      int d, MonoidPtr crossed_base = nullptr, ExtOptions const& opt = {});

  struct JClassWitness {
    std::uint32_t j = 0;
    Element e = 0;
    std::size_t group_order = 0;
    bool good_characteristic = false;
    bool right_invertible = false;
    std::optional<GroupAlgebraMatrix> right_inverse;
  };

  struct GlobalDimensionBound {
    bool applicable = false;
    std::size_t bound = 0;
    bool regular = false;
    std::vector<JClassWitness> witnesses;
    std::vector<std::string> reasons;  // why not applicable
  };

  GlobalDimensionBound global_dimension_bound(FiniteMonoid const& m, Field const& f);

  struct LayerWitness {
    std::size_t layer = 0;  // principal series index k (1-based)
    int degree = 0;
    Element e = 0;
    bool accepted = false;
    std::size_t points = 0;  // |eX \ eY|
  };

  struct ResolutionReport {
    std::size_t length = 0;
    // Degrees -1..length: dims[q + 1] = dim C_q.
    std::vector<std::size_t> dims;
    std::vector<bool> exact;       // per degree -1..length
    std::vector<bool> projective;  // per degree 0..length
    bool equivariant = false;      // boundaries commute with the action
    bool cellular = false;
    bool projectivity_checked = false;
    std::vector<LayerWitness> layers;
    // The chain modules C_0..C_length and boundaries d_q: C_q -> C_{q-1}
    // (d_0 is the augmentation), as matrices acting on column vectors.
    std::vector<MonRep> modules;
    std::vector<Matrix> boundaries;
    SimplicialComplex space;
  };

  // C_•(Δ(M/R)) -> K with M acting on cyclic right ideals by m·xM = mxM.
  ResolutionReport standard_resolution(MonoidPtr m, Field const& f, bool verify = true);

  // Ext^n(K, N) from a projective resolution: the cohomology of
  // Hom_KM(C_•, N), for n in [0, length].
  std::vector<std::size_t> ext_from_resolution(ResolutionReport const& r, MonRep const& n);

  struct SimpleModule {
    std::uint32_t j = 0;  // apex J-class
    Element e = 0;
    std::string name;
    MonRep module;
  };

  // Coind_{e_J}(V) for every regular J-class and every fixture irrep of its
  // maximal subgroup.  Throws kHypothesis when the global dimension bound
  // hypotheses fail.
  std::vector<SimpleModule> simple_modules_coind(MonoidPtr m, Field const& f);

}  // namespace monoext
