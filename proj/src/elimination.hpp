// Internal sparse elimination kernels shared by linalg.cpp and
// rank_engine.cpp.  Not installed.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "monoext/field.hpp"

namespace monoext::detail {

  struct ModpOps {
    using T = std::uint32_t;
    std::uint32_t p;

    [[nodiscard]] T add(T a, T b) const {
      std::uint32_t s = a + b;
      return s >= p ? s - p : s;
    }
    [[nodiscard]] T sub(T a, T b) const {
      return a >= b ? a - b : a + (p - b);
    }
    [[nodiscard]] T mul(T a, T b) const {
      return static_cast<T>(static_cast<std::uint64_t>(a) * b % p);
    }
    [[nodiscard]] T neg(T a) const {
      return a == 0 ? 0 : p - a;
    }
    [[nodiscard]] T inv(T a) const {
      return mod_inverse(a, p);
    }
    [[nodiscard]] static bool is_zero(T const& a) {
      return a == 0;
    }
  };

  struct RationalOps {
    using T = Rational;

    [[nodiscard]] T add(T const& a, T const& b) const {
      return a + b;
    }
    [[nodiscard]] T sub(T const& a, T const& b) const {
      return a - b;
    }
    [[nodiscard]] T mul(T const& a, T const& b) const {
      return a * b;
    }
    [[nodiscard]] T neg(T const& a) const {
      return -a;
    }
    [[nodiscard]] T inv(T const& a) const {
      return T(1) / a;
    }
    [[nodiscard]] static bool is_zero(T const& a) {
      return sgn(a) == 0;
    }
  };

  template <class Ops>
  struct SRow {
    std::vector<std::uint32_t> cols;
    std::vector<typename Ops::T> vals;

    [[nodiscard]] std::size_t size() const {
      return cols.size();
    }
    [[nodiscard]] bool empty() const {
      return cols.empty();
    }
  };

  // Sorts entries by column, merges duplicates and removes zeros.
  template <class Ops>
  SRow<Ops> make_row(Ops const& ops,
                     std::vector<std::pair<std::uint32_t, typename Ops::T>>& entries) {
    std::sort(entries.begin(), entries.end(),
              [](auto const& x, auto const& y) { return x.first < y.first; });
    SRow<Ops> row;
    row.cols.reserve(entries.size());
    row.vals.reserve(entries.size());
    for (auto& [c, v] : entries) {
      if (!row.cols.empty() && row.cols.back() == c) {
        row.vals.back() = ops.add(row.vals.back(), v);
      } else {
        row.cols.push_back(c);
        row.vals.push_back(v);
      }
    }
    std::size_t k = 0;
    for (std::size_t i = 0; i < row.cols.size(); ++i) {
      if (!Ops::is_zero(row.vals[i])) {
        row.cols[k] = row.cols[i];
        row.vals[k] = row.vals[i];
        ++k;
      }
    }
    row.cols.resize(k);
    row.vals.resize(k);
    return row;
  }

  // out = a - coef * b, assuming both sorted.
  template <class Ops>
  void axpy_merge(Ops const& ops,
                  SRow<Ops> const& a,
                  typename Ops::T const& coef,
                  SRow<Ops> const& b,
                  SRow<Ops>& out) {
    out.cols.clear();
    out.vals.clear();
    out.cols.reserve(a.size() + b.size());
    out.vals.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a.cols[i] < b.cols[j])) {
        out.cols.push_back(a.cols[i]);
        out.vals.push_back(a.vals[i]);
        ++i;
      } else if (i == a.size() || b.cols[j] < a.cols[i]) {
        out.cols.push_back(b.cols[j]);
        out.vals.push_back(ops.neg(ops.mul(coef, b.vals[j])));
        ++j;
      } else {
        auto v = ops.sub(a.vals[i], ops.mul(coef, b.vals[j]));
        if (!Ops::is_zero(v)) {
          out.cols.push_back(a.cols[i]);
          out.vals.push_back(std::move(v));
        }
        ++i;
        ++j;
      }
    }
  }

  // Incremental eliminator.  Stored pivot rows have leading coefficient 1
  // and pairwise distinct leading columns.
  template <class Ops>
  class Eliminator {
   public:
    Eliminator(Ops ops, std::size_t ncols) : _ops(ops), _pivot_at(ncols, -1) {}

    // Reduces row against the pivots; stores it if it stays nonzero.
    bool insert(SRow<Ops> row) {
      while (!row.empty()) {
        std::int64_t k = _pivot_at[row.cols[0]];
        if (k < 0) {
          break;
        }
        typename Ops::T coef = row.vals[0];
        axpy_merge(_ops, row, coef, _pivots[k], _scratch);
        std::swap(row, _scratch);
      }
      if (row.empty()) {
        return false;
      }
      if (!(row.vals[0] == typename Ops::T(1))) {
        typename Ops::T s = _ops.inv(row.vals[0]);
        for (auto& v : row.vals) {
          v = _ops.mul(v, s);
        }
      }
      _pivot_at[row.cols[0]] = static_cast<std::int64_t>(_pivots.size());
      _pivots.push_back(std::move(row));
      return true;
    }

    [[nodiscard]] std::size_t rank() const {
      return _pivots.size();
    }

    // Reduced echelon rows sorted by leading column.
    std::vector<SRow<Ops>> reduced() {
      std::vector<std::size_t> order(_pivots.size());
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [this](std::size_t a, std::size_t b) {
        return _pivots[a].cols[0] < _pivots[b].cols[0];
      });
      // Back substitution from the last pivot column down.
      for (auto it = order.rbegin(); it != order.rend(); ++it) {
        SRow<Ops>& row = _pivots[*it];
        std::size_t pos = 1;
        while (pos < row.size()) {
          std::int64_t k = _pivot_at[row.cols[pos]];
          if (k < 0) {
            ++pos;
            continue;
          }
          typename Ops::T coef = row.vals[pos];
          axpy_merge(_ops, row, coef, _pivots[k], _scratch);
          std::swap(row, _scratch);
        }
      }
      std::vector<SRow<Ops>> out;
      out.reserve(order.size());
      for (std::size_t k : order) {
        out.push_back(_pivots[k]);
      }
      return out;
    }

   private:
    Ops _ops;
    std::vector<std::int64_t> _pivot_at;
    std::vector<SRow<Ops>> _pivots;
    SRow<Ops> _scratch;
  };

  // Stable order of row indices by increasing length.
  template <class Row>
  std::vector<std::size_t> length_order(std::vector<Row> const& rows) {
    std::vector<std::size_t> order(rows.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&rows](std::size_t a, std::size_t b) {
      return rows[a].size() < rows[b].size();
    });
    return order;
  }

}  // namespace monoext::detail
