// Matrices over a group algebra KG with entries in G ∪ {0}.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "monoext/group.hpp"
#include "monoext/matrix.hpp"

namespace monoext {

  // An element of KG as its coefficient vector indexed by group elements.
  using GroupAlgebraElement = Vector;

  // Matrix over KG, entries[i][j].
  using GroupAlgebraMatrix = std::vector<std::vector<GroupAlgebraElement>>;

  GroupAlgebraElement ga_multiply(GroupTable const& g,
                                  Field const& f,
                                  GroupAlgebraElement const& a,
                                  GroupAlgebraElement const& b);

  // P is a |B| x |A| matrix whose entries are group indices or -1 for 0.
  // Returns Q (|A| x |B| over KG) with P Q = I when P is right invertible
  // over KG.  Each entry g of P acts on a column of Q by left multiplication
  // by g, so P Q = I is a linear system on the coefficients of Q; P is
  // right invertible exactly when the expanded (|B||G|) x (|A||G|) matrix has
  // full row rank.  The returned Q is checked by multiplying out in KG.
  std::optional<GroupAlgebraMatrix> group_algebra_right_inverse(std::vector<std::vector<std::int64_t>> const& p,
                                                                GroupTable const& g,
                                                                Field const& f);

  // P Q computed in KG, for P with entries in G ∪ {0}.
  GroupAlgebraMatrix ga_product(std::vector<std::vector<std::int64_t>> const& p,
                                GroupAlgebraMatrix const& q,
                                GroupTable const& g,
                                Field const& f);

}  // namespace monoext
