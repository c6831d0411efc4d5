// Ranks of large, implicitly generated matrices.
//
// Differentials of bar and nerve complexes are too large to store with
// rational entries, so they are streamed row by row.  Over F_p ranks are
// computed directly.  Over Q the rank of each differential is first
// computed modulo a large prime, which gives a lower bound; when the maps
// form a complex (consecutive composites vanish) the exact rank of the
// previous map gives the upper bound
//
//   rank f_k <= dim(shared space) - rank f_{k-1}.
//
// If both bounds agree the rank is certified.  Otherwise an exact rational
// elimination is run.  In both regimes elimination stops as soon as the
// upper bound is reached.
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "monoext/matrix.hpp"

namespace monoext {

  using ModpEntries = std::vector<std::pair<std::uint32_t, std::uint32_t>>;
  using RationalEntries = std::vector<std::pair<std::uint32_t, Rational>>;

  // Thrown by RowSource::rows_modp when a scalar has a denominator divisible
  // by the requested prime.
  struct BadPrime {};

  class RowSource {
   public:
    virtual ~RowSource() = default;
    [[nodiscard]] virtual std::size_t num_rows() const = 0;
    [[nodiscard]] virtual std::size_t num_cols() const = 0;
    // Calls emit once per row.  Entries may be unsorted and repeated.
    virtual void rows_modp(std::uint32_t p,
                           std::function<void(ModpEntries&)> const& emit) const
        = 0;
    virtual void rows_rational(std::function<void(RationalEntries&)> const& emit) const = 0;
  };

  // A RowSource backed by a stored sparse matrix.
  class StoredRows : public RowSource {
   public:
    explicit StoredRows(SparseMatrix m) : _m(std::move(m)) {}
    [[nodiscard]] std::size_t num_rows() const override {
      return _m.rows();
    }
    [[nodiscard]] std::size_t num_cols() const override {
      return _m.cols();
    }
    void rows_modp(std::uint32_t p, std::function<void(ModpEntries&)> const& emit) const override;
    void rows_rational(std::function<void(RationalEntries&)> const& emit) const override;
    [[nodiscard]] SparseMatrix const& matrix() const {
      return _m;
    }

   private:
    SparseMatrix _m;
  };

  enum class RankMethod { kTrivial, kPrimeField, kModularCertified, kExactRational };

  char const* rank_method_name(RankMethod m) noexcept;

  struct RankResult {
    std::size_t rank = 0;
    RankMethod method = RankMethod::kTrivial;
    std::uint32_t prime = 0;
  };

  // Rank of one streamed matrix; upper_bound must be a valid bound over
  // the given field (min(rows, cols) is always applied on top).
  RankResult streamed_rank(RowSource const& src, Field const& field, std::size_t upper_bound);

  // Ranks of f_0, f_1, ... where f_k and f_{k-1} meet in a space of
  // dimension shared_dims[k] and compose to zero (shared_dims[0] is
  // ignored).
  std::vector<RankResult> sequence_ranks(std::vector<RowSource const*> const& maps,
                                         std::vector<std::size_t> const& shared_dims,
                                         Field const& field);

  // Number of worker threads allowed (MONOEXT_THREADS, default hardware).
  std::size_t thread_limit();

  // Runs body(i) for i in [0, n) on up to thread_limit() threads.
  void parallel_for(std::size_t n, std::function<void(std::size_t)> const& body);

}  // namespace monoext
