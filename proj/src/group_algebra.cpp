#include "monoext/group_algebra.hpp"

#include "monoext/error.hpp"
#include "monoext/linalg.hpp"

namespace monoext {

  GroupAlgebraElement ga_multiply(GroupTable const& g,
                                  Field const& f,
                                  GroupAlgebraElement const& a,
                                  GroupAlgebraElement const& b) {
    GroupAlgebraElement out(g.size());
    for (std::uint32_t x = 0; x < g.size(); ++x) {
      if (a[x] == 0) {
        continue;
      }
      for (std::uint32_t y = 0; y < g.size(); ++y) {
        if (b[y] != 0) {
          auto& slot = out[g.mul(x, y)];
          slot = f.add(slot, f.mul(a[x], b[y]));
        }
      }
    }
    return out;
  }

  GroupAlgebraMatrix ga_product(std::vector<std::vector<std::int64_t>> const& p,
                                GroupAlgebraMatrix const& q,
                                GroupTable const& g,
                                Field const& f) {
    std::size_t rows = p.size();
    std::size_t inner = rows == 0 ? 0 : p[0].size();
    require(q.size() == inner, ErrorCode::kDimensionMismatch, "group algebra matrices do not compose");
    std::size_t cols = inner == 0 ? 0 : q[0].size();
    GroupAlgebraMatrix out(rows, std::vector<GroupAlgebraElement>(cols, GroupAlgebraElement(g.size())));
    for (std::size_t b = 0; b < rows; ++b) {
      for (std::size_t a = 0; a < inner; ++a) {
        if (p[b][a] < 0) {
          continue;
        }
        GroupAlgebraElement left(g.size());
        left[static_cast<std::size_t>(p[b][a])] = 1;
        for (std::size_t c = 0; c < cols; ++c) {
          auto prod = ga_multiply(g, f, left, q[a][c]);
          for (std::size_t x = 0; x < g.size(); ++x) {
            out[b][c][x] = f.add(out[b][c][x], prod[x]);
          }
        }
      }
    }
    return out;
  }

  std::optional<GroupAlgebraMatrix> group_algebra_right_inverse(std::vector<std::vector<std::int64_t>> const& p,
                                                                GroupTable const& g,
                                                                Field const& f) {
    std::size_t nb = p.size();
    require(nb > 0, ErrorCode::kInvalidArgument, "empty sandwich matrix");
    std::size_t na = p[0].size();
    std::size_t n = g.size();
    for (auto const& row : p) {
      require(row.size() == na, ErrorCode::kDimensionMismatch, "ragged group algebra matrix");
      for (auto v : row) {
        require(v >= -1 && v < static_cast<std::int64_t>(n), ErrorCode::kInvalidArgument,
                "entry is not a group index");
      }
    }
    // Row (b, x) of the expansion is the coefficient of x in (P q)_b; the
    // unknowns are the coefficients (a, h) of a column q.
    SparseMatrix e(f, na * n);
    for (std::size_t b = 0; b < nb; ++b) {
      std::vector<SparseMatrix::Row> rows(n);
      for (std::size_t a = 0; a < na; ++a) {
        if (p[b][a] < 0) {
          continue;
        }
        auto gi = static_cast<std::uint32_t>(p[b][a]);
        for (std::uint32_t h = 0; h < n; ++h) {
          rows[g.mul(gi, h)].emplace_back(static_cast<std::uint32_t>(a * n + h), Rational(1));
        }
      }
      for (auto& r : rows) {
        e.add_row(std::move(r));
      }
    }
    if (rank(e) < nb * n) {
      return std::nullopt;
    }
    GroupAlgebraMatrix q(na, std::vector<GroupAlgebraElement>(nb, GroupAlgebraElement(n)));
    for (std::size_t col = 0; col < nb; ++col) {
      Vector rhs(nb * n);
      rhs[col * n + g.identity()] = 1;
      auto sol = solve_sparse(e, rhs);
      require(sol.has_value(), ErrorCode::kInvalidArgument, "full row rank system without a solution");
      for (std::size_t a = 0; a < na; ++a) {
        for (std::size_t h = 0; h < n; ++h) {
          q[a][col][h] = (*sol)[a * n + h];
        }
      }
    }
    auto check = ga_product(p, q, g, f);
    for (std::size_t b = 0; b < nb; ++b) {
      for (std::size_t c = 0; c < nb; ++c) {
        for (std::uint32_t x = 0; x < n; ++x) {
          Rational expected = (b == c && x == g.identity()) ? Rational(1) : Rational(0);
          require(check[b][c][x] == expected, ErrorCode::kInvalidArgument,
                  "right inverse failed verification");
        }
      }
    }
    return q;
  }

}  // namespace monoext
