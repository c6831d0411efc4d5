#include "monoext/linalg.hpp"

#include <algorithm>

#include "elimination.hpp"
#include "monoext/error.hpp"

namespace monoext {

  namespace {

    using detail::Eliminator;
    using detail::ModpOps;
    using detail::RationalOps;
    using detail::SRow;

    // Dense Gauss-Jordan over F_p with smallest-index pivoting.
    Echelon dense_echelon_modp(Matrix const& a) {
      std::uint32_t p = a.field().characteristic();
      ModpOps ops{p};
      std::size_t m = a.rows(), n = a.cols();
      std::vector<std::uint32_t> d(m * n);
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          d[i * n + j] = static_cast<std::uint32_t>(a.at(i, j).get_num().get_ui());
        }
      }
      Echelon out;
      out.field = a.field();
      out.cols = n;
      std::size_t r = 0;
      for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t piv = r;
        while (piv < m && d[piv * n + c] == 0) {
          ++piv;
        }
        if (piv == m) {
          continue;
        }
        if (piv != r) {
          std::swap_ranges(d.begin() + piv * n, d.begin() + (piv + 1) * n, d.begin() + r * n);
        }
        std::uint32_t s = ops.inv(d[r * n + c]);
        for (std::size_t j = c; j < n; ++j) {
          d[r * n + j] = ops.mul(d[r * n + j], s);
        }
        for (std::size_t i = 0; i < m; ++i) {
          if (i == r || d[i * n + c] == 0) {
            continue;
          }
          std::uint64_t f = d[i * n + c];
          for (std::size_t j = c; j < n; ++j) {
            if (d[r * n + j] != 0) {
              d[i * n + j] = ops.sub(d[i * n + j], static_cast<std::uint32_t>(f * d[r * n + j] % p));
            }
          }
        }
        out.pivot_cols.push_back(static_cast<std::uint32_t>(c));
        ++r;
      }
      for (std::size_t k = 0; k < r; ++k) {
        SparseMatrix::Row row;
        for (std::size_t j = 0; j < n; ++j) {
          if (d[k * n + j] != 0) {
            row.emplace_back(static_cast<std::uint32_t>(j), Rational(d[k * n + j]));
          }
        }
        out.rows.push_back(std::move(row));
      }
      return out;
    }

    void divide_content(std::vector<mpz_class>& row) {
      mpz_class g = 0;
      for (auto const& x : row) {
        if (sgn(x) != 0) {
          mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
          if (g == 1) {
            return;
          }
        }
      }
      if (g > 1) {
        for (auto& x : row) {
          if (sgn(x) != 0) {
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
          }
        }
      }
    }

    // Fraction-free Gauss-Jordan over Z for a rational matrix.  Each row is
    // first scaled to integers; elimination steps use cross multiplication
    // by the reduced pivot pair followed by removal of the row content.
    Echelon dense_echelon_rational(Matrix const& a) {
      std::size_t m = a.rows(), n = a.cols();
      std::vector<std::vector<mpz_class>> d(m, std::vector<mpz_class>(n));
      for (std::size_t i = 0; i < m; ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < n; ++j) {
          mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.at(i, j).get_den_mpz_t());
        }
        for (std::size_t j = 0; j < n; ++j) {
          Rational const& x = a.at(i, j);
          if (sgn(x) != 0) {
            d[i][j] = x.get_num() * (l / x.get_den());
          }
        }
        divide_content(d[i]);
      }
      Echelon out;
      out.field = a.field();
      out.cols = n;
      std::size_t r = 0;
      mpz_class g, x, y;
      for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t piv = r;
        while (piv < m && sgn(d[piv][c]) == 0) {
          ++piv;
        }
        if (piv == m) {
          continue;
        }
        std::swap(d[piv], d[r]);
        for (std::size_t i = 0; i < m; ++i) {
          if (i == r || sgn(d[i][c]) == 0) {
            continue;
          }
          mpz_gcd(g.get_mpz_t(), d[r][c].get_mpz_t(), d[i][c].get_mpz_t());
          x = d[r][c] / g;
          y = d[i][c] / g;
          for (std::size_t j = 0; j < n; ++j) {
            if (sgn(d[r][j]) == 0) {
              if (sgn(d[i][j]) != 0) {
                d[i][j] *= x;
              }
            } else {
              d[i][j] = d[i][j] * x - y * d[r][j];
            }
          }
          divide_content(d[i]);
        }
        out.pivot_cols.push_back(static_cast<std::uint32_t>(c));
        ++r;
      }
      for (std::size_t k = 0; k < r; ++k) {
        mpz_class const& lead = d[k][out.pivot_cols[k]];
        SparseMatrix::Row row;
        for (std::size_t j = 0; j < n; ++j) {
          if (sgn(d[k][j]) != 0) {
            Rational v(d[k][j], lead);
            v.canonicalize();
            row.emplace_back(static_cast<std::uint32_t>(j), std::move(v));
          }
        }
        out.rows.push_back(std::move(row));
      }
      return out;
    }

    template <class Ops>
    Echelon sparse_echelon(Ops const& ops, SparseMatrix const& a) {
      std::vector<SRow<Ops>> rows;
      rows.reserve(a.rows());
      for (std::size_t i = 0; i < a.rows(); ++i) {
        SRow<Ops> r;
        for (auto const& [c, v] : a.row(i)) {
          r.cols.push_back(c);
          if constexpr (std::is_same_v<Ops, ModpOps>) {
            r.vals.push_back(static_cast<std::uint32_t>(v.get_num().get_ui()));
          } else {
            r.vals.push_back(v);
          }
        }
        rows.push_back(std::move(r));
      }
      Eliminator<Ops> elim(ops, a.cols());
      for (std::size_t i : detail::length_order(rows)) {
        elim.insert(std::move(rows[i]));
      }
      Echelon out;
      out.field = a.field();
      out.cols = a.cols();
      for (auto& r : elim.reduced()) {
        out.pivot_cols.push_back(r.cols[0]);
        SparseMatrix::Row row;
        for (std::size_t k = 0; k < r.size(); ++k) {
          row.emplace_back(r.cols[k], Rational(r.vals[k]));
        }
        out.rows.push_back(std::move(row));
      }
      return out;
    }

    template <class Ops>
    std::size_t sparse_rank_only(Ops const& ops, SparseMatrix const& a) {
      std::vector<SRow<Ops>> rows;
      rows.reserve(a.rows());
      for (std::size_t i = 0; i < a.rows(); ++i) {
        SRow<Ops> r;
        for (auto const& [c, v] : a.row(i)) {
          r.cols.push_back(c);
          if constexpr (std::is_same_v<Ops, ModpOps>) {
            r.vals.push_back(static_cast<std::uint32_t>(v.get_num().get_ui()));
          } else {
            r.vals.push_back(v);
          }
        }
        rows.push_back(std::move(r));
      }
      Eliminator<Ops> elim(ops, a.cols());
      std::size_t bound = std::min(a.rows(), a.cols());
      for (std::size_t i : detail::length_order(rows)) {
        elim.insert(std::move(rows[i]));
        if (elim.rank() == bound) {
          break;
        }
      }
      return elim.rank();
    }

  }  // namespace

  Echelon reduced_echelon(Matrix const& a) {
    if (a.rows() * a.cols() >= kDenseEntryLimit) {
      return reduced_echelon(SparseMatrix::from_dense(a));
    }
    return a.field().is_rational() ? dense_echelon_rational(a) : dense_echelon_modp(a);
  }

  Echelon reduced_echelon(SparseMatrix const& a) {
    if (a.field().is_rational()) {
      return sparse_echelon(RationalOps{}, a);
    }
    return sparse_echelon(ModpOps{a.field().characteristic()}, a);
  }

  std::vector<Vector> kernel_from_echelon(Echelon const& e) {
    std::vector<char> is_pivot(e.cols, 0);
    for (auto c : e.pivot_cols) {
      is_pivot[c] = 1;
    }
    // For each free column f, column f of the echelon form gives the
    // coordinates of the pivot variables.
    std::vector<std::vector<std::pair<std::size_t, Rational>>> by_col(e.cols);
    for (std::size_t k = 0; k < e.rows.size(); ++k) {
      for (auto const& [c, v] : e.rows[k]) {
        if (!is_pivot[c]) {
          by_col[c].emplace_back(k, v);
        }
      }
    }
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < e.cols; ++f) {
      if (is_pivot[f]) {
        continue;
      }
      Vector v(e.cols);
      v[f] = 1;
      for (auto const& [k, x] : by_col[f]) {
        v[e.pivot_cols[k]] = e.field.neg(x);
      }
      basis.push_back(std::move(v));
    }
    return basis;
  }

  RankKernel rank_kernel(Matrix const& a) {
    Echelon e = reduced_echelon(a);
    return RankKernel{e.pivot_cols.size(), e.pivot_cols, kernel_from_echelon(e)};
  }

  RankKernel rank_kernel(SparseMatrix const& a) {
    Echelon e = reduced_echelon(a);
    return RankKernel{e.pivot_cols.size(), e.pivot_cols, kernel_from_echelon(e)};
  }

  std::size_t rank(Matrix const& a) {
    if (a.rows() * a.cols() >= kDenseEntryLimit) {
      return rank(SparseMatrix::from_dense(a));
    }
    return reduced_echelon(a).pivot_cols.size();
  }

  std::size_t rank(SparseMatrix const& a) {
    if (a.field().is_rational()) {
      return sparse_rank_only(RationalOps{}, a);
    }
    return sparse_rank_only(ModpOps{a.field().characteristic()}, a);
  }

  namespace {
    // Reads a solution of [A | B] from its echelon form; nullopt when some
    // pivot lies in the B block.
    std::optional<Matrix> read_solution(Echelon const& e, std::size_t acols, std::size_t bcols) {
      Matrix x(e.field, acols, bcols);
      for (std::size_t k = 0; k < e.rows.size(); ++k) {
        std::uint32_t pc = e.pivot_cols[k];
        if (pc >= acols) {
          return std::nullopt;
        }
        for (auto const& [c, v] : e.rows[k]) {
          if (c >= acols) {
            x.raw(pc, c - acols) = v;
          }
        }
      }
      return x;
    }
  }  // namespace

  std::optional<Matrix> solve_right(Matrix const& a, Matrix const& b) {
    require(a.field() == b.field(), ErrorCode::kFieldMismatch, "solve_right: field mismatch");
    require(a.rows() == b.rows(), ErrorCode::kDimensionMismatch, "solve_right: row mismatch");
    std::size_t n = a.cols() + b.cols();
    if (a.rows() * n >= kDenseEntryLimit) {
      SparseMatrix s(a.field(), n);
      for (std::size_t i = 0; i < a.rows(); ++i) {
        SparseMatrix::Row row;
        for (std::size_t j = 0; j < a.cols(); ++j) {
          if (sgn(a.at(i, j)) != 0) {
            row.emplace_back(static_cast<std::uint32_t>(j), a.at(i, j));
          }
        }
        for (std::size_t j = 0; j < b.cols(); ++j) {
          if (sgn(b.at(i, j)) != 0) {
            row.emplace_back(static_cast<std::uint32_t>(a.cols() + j), b.at(i, j));
          }
        }
        s.add_row(std::move(row));
      }
      return read_solution(reduced_echelon(s), a.cols(), b.cols());
    }
    Matrix aug(a.field(), a.rows(), n);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        aug.raw(i, j) = a.at(i, j);
      }
      for (std::size_t j = 0; j < b.cols(); ++j) {
        aug.raw(i, a.cols() + j) = b.at(i, j);
      }
    }
    return read_solution(reduced_echelon(aug), a.cols(), b.cols());
  }

  std::optional<Vector> solve_sparse(SparseMatrix const& a, Vector const& b) {
    require(a.rows() == b.size(), ErrorCode::kDimensionMismatch, "solve_sparse: row mismatch");
    SparseMatrix s(a.field(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      SparseMatrix::Row row = a.row(i);
      if (sgn(b[i]) != 0) {
        row.emplace_back(static_cast<std::uint32_t>(a.cols()), b[i]);
      }
      s.add_row(std::move(row));
    }
    auto x = read_solution(reduced_echelon(s), a.cols(), 1);
    if (!x) {
      return std::nullopt;
    }
    return x->column(0);
  }

  std::optional<Matrix> inverse(Matrix const& a) {
    require(a.is_square(), ErrorCode::kDimensionMismatch, "inverse of a non-square matrix");
    if (rank(a) != a.rows()) {
      return std::nullopt;
    }
    return solve_right(a, Matrix::identity(a.field(), a.rows()));
  }

  std::vector<std::size_t> independent_subset(Field const& field,
                                              std::vector<Vector> const& vectors) {
    std::vector<std::size_t> chosen;
    if (vectors.empty()) {
      return chosen;
    }
    std::size_t n = vectors[0].size();
    auto try_all = [&](auto ops, auto convert) {
      using Ops = decltype(ops);
      Eliminator<Ops> elim(ops, n);
      for (std::size_t i = 0; i < vectors.size(); ++i) {
        SRow<Ops> r;
        for (std::size_t j = 0; j < n; ++j) {
          if (sgn(vectors[i][j]) != 0) {
            r.cols.push_back(static_cast<std::uint32_t>(j));
            r.vals.push_back(convert(vectors[i][j]));
          }
        }
        if (elim.insert(std::move(r))) {
          chosen.push_back(i);
        }
      }
    };
    if (field.is_rational()) {
      try_all(RationalOps{}, [](Rational const& x) { return x; });
    } else {
      try_all(ModpOps{field.characteristic()},
              [](Rational const& x) { return static_cast<std::uint32_t>(x.get_num().get_ui()); });
    }
    return chosen;
  }

}  // namespace monoext
