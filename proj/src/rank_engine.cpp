#include "monoext/rank_engine.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include "elimination.hpp"
#include "monoext/error.hpp"

namespace monoext {

  namespace {

    constexpr std::uint32_t kPrimes[] = {2147483629u, 2147483587u, 2147483579u,
                                         2147483563u, 2147483549u, 2147483543u};

    // Rows of a streamed matrix in compressed form.
    template <class T>
    struct Compressed {
      std::vector<std::size_t> offsets{0};
      std::vector<std::uint32_t> cols;
      std::vector<T> vals;

      [[nodiscard]] std::size_t rows() const {
        return offsets.size() - 1;
      }
      [[nodiscard]] std::size_t length(std::size_t i) const {
        return offsets[i + 1] - offsets[i];
      }
    };

    template <class Ops, class Entries>
    void compress(Ops const& ops, Entries& entries, Compressed<typename Ops::T>& out) {
      auto row = detail::make_row(ops, entries);
      out.cols.insert(out.cols.end(), row.cols.begin(), row.cols.end());
      out.vals.insert(out.vals.end(), row.vals.begin(), row.vals.end());
      out.offsets.push_back(out.cols.size());
    }

    template <class Ops>
    std::size_t eliminate(Ops const& ops,
                          Compressed<typename Ops::T> const& rows,
                          std::size_t ncols,
                          std::size_t bound) {
      if (bound == 0) {
        return 0;
      }
      std::vector<std::size_t> order(rows.rows());
      for (std::size_t i = 0; i < order.size(); ++i) {
        order[i] = i;
      }
      std::stable_sort(order.begin(), order.end(), [&rows](std::size_t a, std::size_t b) {
        return rows.length(a) < rows.length(b);
      });
      detail::Eliminator<Ops> elim(ops, ncols);
      for (std::size_t i : order) {
        if (rows.length(i) == 0) {
          continue;
        }
        detail::SRow<Ops> r;
        r.cols.assign(rows.cols.begin() + rows.offsets[i], rows.cols.begin() + rows.offsets[i + 1]);
        r.vals.assign(rows.vals.begin() + rows.offsets[i], rows.vals.begin() + rows.offsets[i + 1]);
        elim.insert(std::move(r));
        if (elim.rank() >= bound) {
          break;
        }
      }
      return elim.rank();
    }

    std::size_t modp_rank(RowSource const& src, std::uint32_t p, std::size_t bound) {
      detail::ModpOps ops{p};
      Compressed<std::uint32_t> rows;
      src.rows_modp(p, [&](ModpEntries& e) { compress(ops, e, rows); });
      return eliminate(ops, rows, src.num_cols(), bound);
    }

    std::size_t rational_rank(RowSource const& src, std::size_t bound) {
      detail::RationalOps ops;
      Compressed<Rational> rows;
      src.rows_rational([&](RationalEntries& e) { compress(ops, e, rows); });
      return eliminate(ops, rows, src.num_cols(), bound);
    }

  }  // namespace

  void StoredRows::rows_modp(std::uint32_t p,
                             std::function<void(ModpEntries&)> const& emit) const {
    ModpEntries e;
    for (std::size_t i = 0; i < _m.rows(); ++i) {
      e.clear();
      for (auto const& [c, v] : _m.row(i)) {
        std::uint32_t x = 0;
        if (!reduce_mod(v, p, x)) {
          throw BadPrime{};
        }
        e.emplace_back(c, x);
      }
      emit(e);
    }
  }

  void StoredRows::rows_rational(std::function<void(RationalEntries&)> const& emit) const {
    RationalEntries e;
    for (std::size_t i = 0; i < _m.rows(); ++i) {
      e.assign(_m.row(i).begin(), _m.row(i).end());
      emit(e);
    }
  }

  char const* rank_method_name(RankMethod m) noexcept {
    switch (m) {
      case RankMethod::kTrivial:
        return "trivial";
      case RankMethod::kPrimeField:
        return "prime_field";
      case RankMethod::kModularCertified:
        return "modular_certified";
      case RankMethod::kExactRational:
        return "exact_rational";
    }
    return "unknown";
  }

  RankResult streamed_rank(RowSource const& src, Field const& field, std::size_t upper_bound) {
    std::size_t bound = std::min({upper_bound, src.num_rows(), src.num_cols()});
    if (bound == 0) {
      return {0, RankMethod::kTrivial, 0};
    }
    if (!field.is_rational()) {
      std::uint32_t p = field.characteristic();
      return {modp_rank(src, p, bound), RankMethod::kPrimeField, p};
    }
    for (std::uint32_t p : kPrimes) {
      std::size_t r = 0;
      try {
        r = modp_rank(src, p, bound);
      } catch (BadPrime const&) {
        continue;
      }
      if (r == bound) {
        return {r, RankMethod::kModularCertified, p};
      }
      break;
    }
    return {rational_rank(src, bound), RankMethod::kExactRational, 0};
  }

  std::vector<RankResult> sequence_ranks(std::vector<RowSource const*> const& maps,
                                         std::vector<std::size_t> const& shared_dims,
                                         Field const& field) {
    require(maps.size() == shared_dims.size(), ErrorCode::kDimensionMismatch,
            "sequence_ranks: one shared dimension per map expected");
    std::vector<RankResult> out;
    out.reserve(maps.size());
    for (std::size_t k = 0; k < maps.size(); ++k) {
      std::size_t bound = maps[k]->num_rows() + maps[k]->num_cols();
      if (k > 0) {
        require(shared_dims[k] >= out[k - 1].rank, ErrorCode::kDimensionMismatch,
                "sequence_ranks: inconsistent dimensions");
        bound = shared_dims[k] - out[k - 1].rank;
      }
      out.push_back(streamed_rank(*maps[k], field, bound));
    }
    return out;
  }

  std::size_t thread_limit() {
    std::size_t hw = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    if (char const* env = std::getenv("MONOEXT_THREADS")) {
      char* end = nullptr;
      unsigned long v = std::strtoul(env, &end, 10);
      if (end != env && v > 0) {
        return std::min<std::size_t>(v, 256);
      }
    }
    return hw;
  }

  void parallel_for(std::size_t n, std::function<void(std::size_t)> const& body) {
    std::size_t workers = std::min(thread_limit(), n);
    if (workers <= 1) {
      for (std::size_t i = 0; i < n; ++i) {
        body(i);
      }
      return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < workers; ++w) {
      threads.emplace_back([&]() {
        while (true) {
          std::size_t i = next.fetch_add(1);
          if (i >= n) {
            return;
          }
          try {
            body(i);
          } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) {
              failure = std::current_exception();
            }
          }
        }
      });
    }
    for (auto& t : threads) {
      t.join();
    }
    if (failure) {
      std::rethrow_exception(failure);
    }
  }

}  // namespace monoext
