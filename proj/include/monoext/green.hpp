// Green's relations, maximal subgroups, Schützenberger data, sandwich
// matrices, the principal series and the group completion.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "monoext/group.hpp"
#include "monoext/monoid.hpp"

namespace monoext {

  // Class ids are assigned in order of each class's smallest element.
  struct GreenStructure {
    std::vector<std::vector<Element>> r_classes, l_classes, h_classes, j_classes;
    std::vector<std::uint32_t> r_of, l_of, h_of, j_of;
    // j_leq[a][b] is true when J_a <= J_b, i.e. M J_a M is inside M J_b M.
    std::vector<std::vector<char>> j_leq;
    std::vector<char> regular_j;
    std::vector<Element> idempotents;

    [[nodiscard]] std::size_t num_j() const {
      return j_classes.size();
    }
  };

  GreenStructure green_structure(FiniteMonoid const& m);

  struct StructuralFlags {
    bool regular = false;
    bool dedekind_finite = false;
    bool right_pp = false;
    bool left_pp = false;
  };

  StructuralFlags structural_flags(FiniteMonoid const& m);

  // Unit group of eMe with its embedding into M.  Group index 0 is e.
  GroupTable maximal_subgroup(FiniteMonoid const& m, Element e);

  // R_e = {x : xM = eM}, R(e) = eM \ R_e and the dual left sets.  The
  // coordinates record the free G_e-actions:
  //   x in R_e:  x = group.embedding()[r_coord[x].first] * left_orbit_reps[r_coord[x].second]
  //   t in L_e:  t = right_orbit_reps[l_coord[t].second] * group.embedding()[l_coord[t].first]
  struct RLData {
    Element e = 0;
    GroupTable group;
    std::vector<Element> r_e, r_minus, l_e, l_minus;
    std::vector<Element> left_orbit_reps, right_orbit_reps;
    // Indexed by monoid element; (group index, orbit number), or
    // (UINT32_MAX, UINT32_MAX) outside R_e (resp. L_e).
    std::vector<std::pair<std::uint32_t, std::uint32_t>> r_coord, l_coord;
  };

  RLData ideal_data(FiniteMonoid const& m, Element e);

  // Sandwich data of a regular J-class.  Index 0 of A and B is the class
  // of e (the usual "index 1").  sandwich[b * |A| + a] is the group index
  // of l_b r_a, or -1 when that product leaves G_e.
  struct JClassData {
    std::uint32_t j = 0;
    Element e = 0;
    std::vector<std::uint32_t> a_classes;  // R-class ids
    std::vector<std::uint32_t> b_classes;  // L-class ids
    std::vector<Element> r_reps;           // r_a in R_a and L_e
    std::vector<Element> l_reps;           // l_b in L_b and R_e
    GroupTable group;
    std::vector<std::int64_t> sandwich;

    [[nodiscard]] std::int64_t entry(std::size_t b, std::size_t a) const {
      return sandwich[b * a_classes.size() + a];
    }
  };

  JClassData sandwich_matrix(FiniteMonoid const& m, GreenStructure const& g, std::uint32_t j);

  // Smallest idempotent of a regular J-class.
  std::optional<Element> j_class_idempotent(GreenStructure const& g, std::uint32_t j);

  // I_1 < ... < I_n, each a sorted element list, adding one J-class at a
  // time (a minimal remaining one, smallest id first).
  std::vector<std::vector<Element>> principal_series(FiniteMonoid const& m,
                                                     GreenStructure const& g);

  // Length of the longest strict chain J_0 < J_1 < ... < J_n.
  std::size_t j_order_height(GreenStructure const& g);

  struct GroupCompletion {
    GroupTable group;
    std::vector<std::uint32_t> psi;
    Element e = 0;
  };

  GroupCompletion group_completion(FiniteMonoid const& m);

}  // namespace monoext
