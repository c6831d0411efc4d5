// Exact elimination: ranks, kernels, reduced echelon forms and solving.
//
// Pivoting is deterministic.  Dense inputs with fewer than
// kDenseEntryLimit entries are eliminated densely with smallest-index
// pivots (fraction free over Q, with row contents divided out after each
// step).  Larger or sparse inputs go through a sparse row eliminator that
// processes rows in order of increasing length (ties by original index) and
// always eliminates on the leading column.
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "monoext/matrix.hpp"

namespace monoext {

  inline constexpr std::size_t kDenseEntryLimit = 1'000'000;

  // Reduced row echelon form: rows[k] has a 1 in pivot_cols[k] and zeros in
  // every other pivot column.  pivot_cols is increasing.
  struct Echelon {
    Field field;
    std::size_t cols = 0;
    std::vector<std::uint32_t> pivot_cols;
    std::vector<SparseMatrix::Row> rows;
  };

  Echelon reduced_echelon(Matrix const& a);
  Echelon reduced_echelon(SparseMatrix const& a);

  struct RankKernel {
    std::size_t rank = 0;
    std::vector<std::uint32_t> pivot_cols;
    std::vector<Vector> kernel_basis;
  };

  RankKernel rank_kernel(Matrix const& a);
  RankKernel rank_kernel(SparseMatrix const& a);

  std::size_t rank(Matrix const& a);
  std::size_t rank(SparseMatrix const& a);

  // Kernel basis extracted from an echelon form (one vector per free column).
  std::vector<Vector> kernel_from_echelon(Echelon const& e);

  // Some X with A X = B, or nullopt if the system is inconsistent.
  std::optional<Matrix> solve_right(Matrix const& a, Matrix const& b);
  std::optional<Vector> solve_sparse(SparseMatrix const& a, Vector const& b);
  std::optional<Matrix> inverse(Matrix const& a);

  // Indices of a maximal linearly independent subset of the given vectors,
  // chosen greedily in order.
  std::vector<std::size_t> independent_subset(Field const& field,
                                              std::vector<Vector> const& vectors);

}  // namespace monoext
