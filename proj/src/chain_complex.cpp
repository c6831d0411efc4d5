#include "monoext/chain_complex.hpp"

#include <algorithm>
#include <map>

#include "monoext/error.hpp"
#include "monoext/linalg.hpp"

namespace monoext {

  SparseMatrix materialize(RowSource const& src, Field const& field) {
    SparseMatrix out(field, src.num_cols());
    src.rows_rational([&](RationalEntries& e) {
      SparseMatrix::Row row(e.begin(), e.end());
      out.add_row(std::move(row));
    });
    return out;
  }

  namespace {

    SparseMatrix transpose(SparseMatrix const& a) {
      std::vector<SparseMatrix::Row> cols(a.cols());
      for (std::size_t i = 0; i < a.rows(); ++i) {
        for (auto const& [c, v] : a.row(i)) {
          cols[c].emplace_back(static_cast<std::uint32_t>(i), v);
        }
      }
      SparseMatrix t(a.field(), a.rows());
      for (auto& r : cols) {
        t.add_row(std::move(r));
      }
      return t;
    }

    Vector dense_row(SparseMatrix::Row const& row, std::size_t n) {
      Vector v(n);
      for (auto const& [c, x] : row) {
        v[c] = x;
      }
      return v;
    }

    bool is_zero_vector(Vector const& v) {
      return std::all_of(v.begin(), v.end(), [](Rational const& x) { return x == 0; });
    }

    // Reduces v modulo the row space of a reduced echelon form, leaving a
    // canonical representative of the coset (zero in every pivot column).
    void reduce(Echelon const& e, Vector& v) {
      Field const& f = e.field;
      for (std::size_t k = 0; k < e.rows.size(); ++k) {
        Rational c = v[e.pivot_cols[k]];
        if (c == 0) {
          continue;
        }
        for (auto const& [col, x] : e.rows[k]) {
          v[col] = f.sub(v[col], f.mul(c, x));
        }
      }
    }

    // Sparse combination of signed cells into a column map.
    using Combination = std::map<std::uint32_t, Rational>;

    void accumulate(Field const& f, Combination& out, std::uint32_t col, Rational const& c) {
      auto [it, inserted] = out.emplace(col, c);
      if (!inserted) {
        it->second = f.add(it->second, c);
      }
      if (it->second == 0) {
        out.erase(it);
      }
    }

  }  // namespace

  bool boundaries_compose_to_zero(ChainComplex const& c, std::size_t max_rows) {
    Field const& f = c.field;
    for (int d = c.min_degree + 2; d <= c.max_degree(); ++d) {
      auto const* hi = c.boundary(d);
      auto const* lo = c.boundary(d - 1);
      if (!hi || !lo || hi->num_rows() > max_rows || lo->num_rows() > max_rows) {
        continue;
      }
      SparseMatrix a = materialize(*hi, f);
      SparseMatrix b = materialize(*lo, f);
      for (std::size_t i = 0; i < a.rows(); ++i) {
        Combination sum;
        for (auto const& [mid, x] : a.row(i)) {
          for (auto const& [col, y] : b.row(mid)) {
            accumulate(f, sum, col, f.mul(x, y));
          }
        }
        if (!sum.empty()) {
          return false;
        }
      }
    }
    return true;
  }

  HomologyDims homology(ChainComplex const& c, int lo, int hi) {
    require(lo <= hi, ErrorCode::kInvalidArgument, "empty degree range");
    require(!c.truncated || hi <= c.valid_through, ErrorCode::kTruncation,
            "requested homology beyond the constructed degrees");
    // Ranks of boundary(d) for min_degree < d <= top, computed in sequence so
    // that each certified rank bounds the next.
    int top = std::min(hi + 1, c.max_degree());
    std::vector<RowSource const*> maps;
    std::vector<std::size_t> shared;
    for (int d = c.min_degree + 1; d <= top; ++d) {
      maps.push_back(c.boundary(d));
      shared.push_back(c.dim(d - 1));
    }
    auto ranks = sequence_ranks(maps, shared, c.field);
    auto rank_at = [&](int d) -> RankResult {
      if (d <= c.min_degree || d > top) {
        return RankResult{};
      }
      return ranks[static_cast<std::size_t>(d - c.min_degree - 1)];
    };
    HomologyDims out;
    out.lo = lo;
    for (int d = lo; d <= hi; ++d) {
      std::size_t z = c.dim(d) - rank_at(d).rank;
      out.dims.push_back(z - rank_at(d + 1).rank);
    }
    for (int d = lo; d <= hi + 1; ++d) {
      out.ranks.push_back(rank_at(d));
    }
    return out;
  }

  HomologyBasis homology_basis(ChainComplex const& c, int d) {
    require(!c.truncated || d <= c.valid_through, ErrorCode::kTruncation,
            "requested homology beyond the constructed degrees");
    Field const& f = c.field;
    std::size_t n = c.dim(d);
    HomologyBasis out;
    if (n == 0) {
      return out;
    }
    Echelon b;
    b.field = f;
    b.cols = n;
    if (auto const* next = c.boundary(d + 1)) {
      b = reduced_echelon(materialize(*next, f));
    }
    for (auto const& row : b.rows) {
      out.boundaries.push_back(dense_row(row, n));
    }
    std::vector<Vector> cycles;
    if (auto const* here = c.boundary(d)) {
      cycles = rank_kernel(transpose(materialize(*here, f))).kernel_basis;
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        Vector v(n);
        v[i] = 1;
        cycles.push_back(std::move(v));
      }
    }
    // Greedily keep cycles that are independent modulo the boundaries.
    Echelon span = b;
    for (auto& z : cycles) {
      Vector r = z;
      reduce(span, r);
      if (is_zero_vector(r)) {
        continue;
      }
      out.cycles.push_back(z);
      SparseMatrix m(f, n);
      for (auto const& row : span.rows) {
        m.add_row(row);
      }
      SparseMatrix::Row sr;
      for (std::uint32_t i = 0; i < n; ++i) {
        if (r[i] != 0) {
          sr.emplace_back(i, r[i]);
        }
      }
      m.add_row(std::move(sr));
      span = reduced_echelon(m);
    }
    return out;
  }

  bool is_chain_map(ChainComplex const& c,
                    std::function<std::vector<SignedCell>(int)> const& map,
                    int lo,
                    int hi) {
    Field const& f = c.field;
    for (int d = std::max(lo, c.min_degree + 1); d <= std::min(hi, c.max_degree()); ++d) {
      auto const* bd = c.boundary(d);
      if (!bd) {
        continue;
      }
      SparseMatrix a = materialize(*bd, f);
      auto top = map(d);
      auto bottom = map(d - 1);
      require(top.size() == c.dim(d) && bottom.size() == c.dim(d - 1), ErrorCode::kDimensionMismatch,
              "cell map has the wrong length");
      for (std::size_t i = 0; i < a.rows(); ++i) {
        Combination lhs, rhs;
        if (top[i].sign != 0) {
          for (auto const& [col, x] : a.row(top[i].target)) {
            accumulate(f, lhs, col, top[i].sign > 0 ? x : f.neg(x));
          }
        }
        for (auto const& [col, x] : a.row(i)) {
          auto const& img = bottom[col];
          if (img.sign != 0) {
            accumulate(f, rhs, img.target, img.sign > 0 ? x : f.neg(x));
          }
        }
        if (lhs != rhs) {
          return false;
        }
      }
    }
    return true;
  }

  GroupRep g_action_on_homology(ChainComplex const& c, ComplexAction const& action, int d) {
    Field const& f = c.field;
    GroupTable const& g = *action.group;
    for (auto gen : g.generators()) {
      require(is_chain_map(
                  c, [&](int k) { return action.cells(gen, k); }, d, d + 1),
              ErrorCode::kNotChainMap, "group element does not act by a chain map");
    }
    HomologyBasis hb = homology_basis(c, d);
    std::size_t n = c.dim(d);
    std::size_t k = hb.cycles.size();
    if (k == 0) {
      return GroupRep::make(action.group, f, 0, std::vector<Matrix>(g.size(), Matrix(f, 0, 0)));
    }
    // Canonical residues of the representatives modulo B_d, and a set of k
    // columns on which they are independent.
    Echelon b;
    b.field = f;
    b.cols = n;
    if (!hb.boundaries.empty()) {
      SparseMatrix m(f, n);
      for (auto const& v : hb.boundaries) {
        SparseMatrix::Row r;
        for (std::uint32_t i = 0; i < n; ++i) {
          if (v[i] != 0) {
            r.emplace_back(i, v[i]);
          }
        }
        m.add_row(std::move(r));
      }
      b = reduced_echelon(m);
    }
    std::vector<Vector> residues;
    for (auto const& z : hb.cycles) {
      Vector r = z;
      reduce(b, r);
      residues.push_back(std::move(r));
    }
    Echelon re = reduced_echelon(Matrix::from_rows(f, residues));
    require(re.pivot_cols.size() == k, ErrorCode::kInvalidArgument, "homology representatives are dependent");
    Matrix square(f, k, k);  // square(j, i) = residue_i at pivot column j
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        square.set(j, i, residues[i][re.pivot_cols[j]]);
      }
    }
    auto sq_inv = inverse(square);
    require(sq_inv.has_value(), ErrorCode::kInvalidArgument, "homology representatives are dependent");

    std::vector<Matrix> rho(g.size(), Matrix(f, k, k));
    for (std::uint32_t el = 0; el < g.size(); ++el) {
      auto cells = action.cells(el, d);
      require(cells.size() == n, ErrorCode::kDimensionMismatch, "cell map has the wrong length");
      for (std::size_t i = 0; i < k; ++i) {
        Vector img(n);
        for (std::uint32_t cell = 0; cell < n; ++cell) {
          auto const& x = hb.cycles[i][cell];
          if (x == 0 || cells[cell].sign == 0) {
            continue;
          }
          auto& slot = img[cells[cell].target];
          slot = f.add(slot, cells[cell].sign > 0 ? x : f.neg(x));
        }
        reduce(b, img);
        Vector rhs(k);
        for (std::size_t j = 0; j < k; ++j) {
          rhs[j] = img[re.pivot_cols[j]];
        }
        Vector coords = sq_inv->apply(rhs);
        // The image residue must equal the combination exactly.
        Vector check = img;
        for (std::size_t j = 0; j < k; ++j) {
          if (coords[j] == 0) {
            continue;
          }
          for (std::size_t t = 0; t < n; ++t) {
            if (residues[j][t] != 0) {
              check[t] = f.sub(check[t], f.mul(coords[j], residues[j][t]));
            }
          }
        }
        require(is_zero_vector(check), ErrorCode::kNotChainMap, "image of a cycle is not a cycle");
        for (std::size_t j = 0; j < k; ++j) {
          rho[el].set(j, i, coords[j]);
        }
      }
    }
    return GroupRep::make(action.group, f, k, std::move(rho));
  }

  SimplicialChains simplicial_chains(SimplicialComplex x,
                                     SimplicialComplex const* sub,
                                     Field const& field,
                                     bool augmented) {
    require(!(sub && augmented), ErrorCode::kInvalidArgument,
            "augmentation is only defined for absolute chains");
    if (sub) {
      require(is_subcomplex(*sub, x), ErrorCode::kNotSubcomplex, "not a subcomplex");
    }
    SimplicialChains s;
    s.space = std::move(x);
    SimplicialComplex const& sp = s.space;
    int top = sp.dimension();
    for (int d = 0; d <= top; ++d) {
      std::vector<std::uint32_t> basis;
      std::vector<std::uint32_t> pos(sp.count(d), UINT32_MAX);
      for (std::uint32_t i = 0; i < sp.count(d); ++i) {
        if (sub && sub->find(sp.simplices[d][i])) {
          continue;
        }
        pos[i] = static_cast<std::uint32_t>(basis.size());
        basis.push_back(i);
      }
      s.basis.push_back(std::move(basis));
      s.position.push_back(std::move(pos));
    }
    ChainComplex& c = s.complex;
    c.field = field;
    c.min_degree = augmented ? -1 : 0;
    if (augmented) {
      c.dims.push_back(1);
      c.boundaries.push_back(nullptr);
    }
    for (int d = 0; d <= top; ++d) {
      c.dims.push_back(s.basis[d].size());
      if (d == 0 && !augmented) {
        c.boundaries.push_back(nullptr);
        continue;
      }
      SparseMatrix m(field, d == 0 ? 1 : s.basis[d - 1].size());
      for (auto idx : s.basis[d]) {
        SparseMatrix::Row row;
        if (d == 0) {
          row.emplace_back(0, Rational(1));
        } else {
          Simplex const& sigma = sp.simplices[d][idx];
          for (std::size_t i = 0; i < sigma.size(); ++i) {
            Simplex face = sigma;
            face.erase(face.begin() + static_cast<long>(i));
            auto fi = sp.find(face);
            require(fi.has_value(), ErrorCode::kNotSubcomplex, "complex is not closed under faces");
            auto p = s.position[d - 1][*fi];
            if (p != UINT32_MAX) {
              row.emplace_back(p, field.from_int(i % 2 == 0 ? 1 : -1));
            }
          }
        }
        m.add_row(std::move(row));
      }
      c.boundaries.push_back(std::make_shared<StoredRows>(std::move(m)));
    }
    return s;
  }

  std::vector<SignedCell> simplicial_cell_map(SimplicialChains const& s,
                                              std::vector<std::uint32_t> const& vertex_map,
                                              int d) {
    if (d < 0) {
      return std::vector<SignedCell>(s.complex.dim(d), SignedCell{0, 1});
    }
    if (d >= static_cast<int>(s.basis.size())) {
      return {};
    }
    require(vertex_map.size() == s.space.num_vertices, ErrorCode::kDimensionMismatch,
            "vertex map has the wrong length");
    std::vector<SignedCell> out;
    out.reserve(s.basis[d].size());
    for (auto idx : s.basis[d]) {
      Simplex img;
      for (auto v : s.space.simplices[d][idx]) {
        img.push_back(vertex_map[v]);
      }
      // Insertion sort, tracking the parity of the permutation.
      int sign = 1;
      for (std::size_t i = 1; i < img.size(); ++i) {
        for (std::size_t j = i; j > 0 && img[j - 1] > img[j]; --j) {
          std::swap(img[j - 1], img[j]);
          sign = -sign;
        }
      }
      if (std::adjacent_find(img.begin(), img.end()) != img.end()) {
        out.push_back(SignedCell{0, 0});
        continue;
      }
      auto fi = s.space.find(img);
      require(fi.has_value(), ErrorCode::kNotSubcomplex, "vertex map is not simplicial");
      auto p = s.position[d][*fi];
      out.push_back(p == UINT32_MAX ? SignedCell{0, 0} : SignedCell{p, sign});
    }
    return out;
  }

  ComplexAction simplicial_action(std::shared_ptr<SimplicialChains const> s,
                                  std::shared_ptr<GroupTable const> group,
                                  std::vector<std::vector<std::uint32_t>> vertex_maps) {
    require(vertex_maps.size() == group->size(), ErrorCode::kDimensionMismatch,
            "one vertex map per group element expected");
    auto maps = std::make_shared<std::vector<std::vector<std::uint32_t>> const>(std::move(vertex_maps));
    ComplexAction a;
    a.group = std::move(group);
    a.cells = [s, maps](std::uint32_t g, int d) { return simplicial_cell_map(*s, (*maps)[g], d); };
    return a;
  }

  // ---------------------------------------------------------------------
  // Bar complexes

  BarLayout::BarLayout(BarSpec spec) : _spec(std::move(spec)) {
    require(_spec.monoid != nullptr, ErrorCode::kInvalidArgument, "bar complex needs a monoid");
    std::size_t ms = _spec.monoid->size();
    require(_spec.x.monoid_size() == ms && _spec.y.monoid_size() == ms, ErrorCode::kDimensionMismatch,
            "M-sets are over a different monoid");
    _base = ms - 1;
    if (!_spec.sub.empty()) {
      require(_spec.sub.size() == _spec.x.size(), ErrorCode::kDimensionMismatch,
              "subset has the wrong length");
      require(is_invariant(_spec.x, _spec.sub), ErrorCode::kNotInvariant, "subset is not M-invariant");
      require(!_spec.augmented, ErrorCode::kInvalidArgument,
              "augmentation is only defined for absolute complexes");
    }
    _xpos.assign(_spec.x.size(), UINT32_MAX);
    for (std::uint32_t p = 0; p < _spec.x.size(); ++p) {
      if (_spec.sub.empty() || !_spec.sub[p]) {
        _xpos[p] = static_cast<std::uint32_t>(_xs.size());
        _xs.push_back(p);
      }
    }
  }

  std::size_t BarLayout::cells(int q) const {
    if (q < 0) {
      return q == -1 && _spec.augmented ? 1 : 0;
    }
    // Saturating product so oversized layouts are reported, not wrapped.
    constexpr std::size_t kHuge = std::size_t{1} << 62;
    std::size_t n = _xs.size() * _spec.y.size();
    for (int k = 0; k < q && n > 0; ++k) {
      if (_base > 0 && n > kHuge / _base) {
        return kHuge;
      }
      n *= _base;
    }
    return n;
  }

  void BarLayout::boundary_rows(int q,
                                std::function<void(std::vector<std::pair<std::uint32_t, int>>&)> const& emit) const {
    std::vector<std::pair<std::uint32_t, int>> row;
    std::size_t ny = _spec.y.size();
    if (q == 0) {
      require(_spec.augmented, ErrorCode::kInvalidArgument, "B_0 has no boundary");
      for (std::size_t i = 0; i < cells(0); ++i) {
        row.assign(1, {0u, 1});
        emit(row);
      }
      return;
    }
    require(q > 0, ErrorCode::kInvalidArgument, "negative bar degree");
    FiniteMonoid const& m = *_spec.monoid;
    std::size_t b = _base;
    std::size_t tuples = 1;
    for (int k = 0; k < q; ++k) {
      tuples *= b;
    }
    std::size_t lower = tuples / std::max<std::size_t>(b, 1);  // B^(q-1)
    std::vector<Element> digits(static_cast<std::size_t>(q) + 1);  // digits[k] = m_k
    std::vector<Element> merged(static_cast<std::size_t>(q));
    auto encode = [&](std::size_t xp, std::vector<Element> const& tuple, std::size_t len, std::size_t y) {
      // tuple[1..len] holds m_1..m_len.
      std::size_t t = 0;
      for (std::size_t k = len; k >= 1; --k) {
        t = t * b + (tuple[k] - 1);
      }
      std::size_t blen = 1;
      for (std::size_t k = 0; k < len; ++k) {
        blen *= b;
      }
      return static_cast<std::uint32_t>((xp * blen + t) * ny + y);
    };
    for (std::size_t xp = 0; xp < _xs.size(); ++xp) {
      std::uint32_t x = _xs[xp];
      for (std::size_t t = 0; t < tuples; ++t) {
        std::size_t rest = t;
        for (int k = 1; k <= q; ++k) {
          digits[k] = static_cast<Element>(rest % b + 1);
          rest /= b;
        }
        for (std::size_t y = 0; y < ny; ++y) {
          row.clear();
          // (x, m_q..m_2, m_1 y)
          {
            std::size_t y2 = _spec.y.apply(digits[1], static_cast<std::uint32_t>(y));
            std::size_t t0 = t / b;
            row.emplace_back(static_cast<std::uint32_t>((xp * lower + t0) * ny + y2), 1);
          }
          // Inner faces merge m_{i+1} m_i.
          for (int i = 1; i < q; ++i) {
            Element prod = m.mul(digits[i + 1], digits[i]);
            if (prod == 0) {
              continue;
            }
            std::size_t len = 0;
            merged[0] = 0;
            for (int k = 1; k <= q; ++k) {
              if (k == i) {
                merged[++len] = prod;
              } else if (k != i + 1) {
                merged[++len] = digits[k];
              }
            }
            row.emplace_back(encode(xp, merged, len, y), i % 2 == 0 ? 1 : -1);
          }
          // (x m_q, m_{q-1}..m_1, y)
          {
            std::uint32_t x2 = _spec.x.apply(x, digits[q]);
            std::uint32_t p2 = _xpos[x2];
            if (p2 != UINT32_MAX) {
              std::size_t t2 = t % lower;
              row.emplace_back(static_cast<std::uint32_t>((p2 * lower + t2) * ny + y), q % 2 == 0 ? 1 : -1);
            }
          }
          emit(row);
        }
      }
    }
  }

  namespace {

    class BarRows : public RowSource {
     public:
      BarRows(std::shared_ptr<BarLayout const> layout, int q) : _layout(std::move(layout)), _q(q) {}

      [[nodiscard]] std::size_t num_rows() const override {
        return _layout->cells(_q);
      }
      [[nodiscard]] std::size_t num_cols() const override {
        return _layout->cells(_q - 1);
      }
      void rows_modp(std::uint32_t p, std::function<void(ModpEntries&)> const& emit) const override {
        ModpEntries out;
        _layout->boundary_rows(_q, [&](std::vector<std::pair<std::uint32_t, int>>& row) {
          out.clear();
          for (auto const& [c, s] : row) {
            out.emplace_back(c, s > 0 ? 1u : p - 1);
          }
          emit(out);
        });
      }
      void rows_rational(std::function<void(RationalEntries&)> const& emit) const override {
        RationalEntries out;
        _layout->boundary_rows(_q, [&](std::vector<std::pair<std::uint32_t, int>>& row) {
          out.clear();
          for (auto const& [c, s] : row) {
            out.emplace_back(c, Rational(s));
          }
          emit(out);
        });
      }

     private:
      std::shared_ptr<BarLayout const> _layout;
      int _q;
    };

  }  // namespace

  ChainComplex bar_chain_complex(std::shared_ptr<BarLayout const> layout,
                                 Field const& field,
                                 int max_degree,
                                 std::size_t cell_cap) {
    require(max_degree >= 0, ErrorCode::kInvalidArgument, "max degree must be nonnegative");
    cell_cap = std::min<std::size_t>(cell_cap, UINT32_MAX);
    ChainComplex c;
    c.field = field;
    c.min_degree = layout->spec().augmented ? -1 : 0;
    for (int q = c.min_degree; q <= max_degree; ++q) {
      std::size_t n = layout->cells(q);
      require(n <= cell_cap, ErrorCode::kCapExceeded,
              "chain group of degree " + std::to_string(q) + " has " + std::to_string(n)
                  + " cells, above the cap of " + std::to_string(cell_cap));
      c.dims.push_back(n);
      if (q == c.min_degree) {
        c.boundaries.push_back(nullptr);
      } else {
        c.boundaries.push_back(std::make_shared<BarRows>(layout, q));
      }
    }
    c.truncated = true;
    c.valid_through = max_degree - 1;
    return c;
  }

  std::shared_ptr<BarLayout const> nerve_layout(std::shared_ptr<FiniteMonoid const> m,
                                                RightMSet x,
                                                std::vector<char> sub,
                                                bool augmented) {
    LeftMSet pt = left_point(*m);
    return std::make_shared<BarLayout const>(BarSpec{std::move(m), std::move(x), std::move(pt), std::move(sub), augmented});
  }

  ComplexAction bar_x_action(std::shared_ptr<BarLayout const> layout,
                             std::shared_ptr<GroupTable const> group,
                             std::vector<std::vector<std::uint32_t>> x_maps) {
    auto const& spec = layout->spec();
    require(x_maps.size() == group->size(), ErrorCode::kDimensionMismatch,
            "one map per group element expected");
    for (auto const& map : x_maps) {
      require(map.size() == spec.x.size(), ErrorCode::kDimensionMismatch, "map has the wrong length");
      for (std::uint32_t p = 0; p < spec.x.size(); ++p) {
        for (Element a = 0; a < spec.x.monoid_size(); ++a) {
          require(map[spec.x.apply(p, a)] == spec.x.apply(map[p], a), ErrorCode::kNotChainMap,
                  "map does not commute with the monoid action");
        }
        if (!spec.sub.empty()) {
          require(spec.sub[p] == spec.sub[map[p]], ErrorCode::kNotInvariant, "map does not preserve the subset");
        }
      }
    }
    auto maps = std::make_shared<std::vector<std::vector<std::uint32_t>> const>(std::move(x_maps));
    ComplexAction act;
    act.group = std::move(group);
    act.cells = [layout, maps](std::uint32_t g, int d) {
      std::size_t n = layout->cells(d);
      std::vector<SignedCell> out(n);
      if (d < 0) {
        for (auto& c : out) {
          c = SignedCell{0, 1};
        }
        return out;
      }
      std::size_t block = n / std::max<std::size_t>(layout->x_count(), 1);
      for (std::size_t idx = 0; idx < n; ++idx) {
        std::size_t xp = idx / block;
        std::size_t rest = idx % block;
        std::uint32_t x2 = (*maps)[g][layout->x_at(static_cast<std::uint32_t>(xp))];
        out[idx] = SignedCell{static_cast<std::uint32_t>(layout->x_position(x2) * block + rest), 1};
      }
      return out;
    };
    return act;
  }

}  // namespace monoext
