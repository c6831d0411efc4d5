#include "monoext/modules.hpp"

#include <algorithm>

#include "monoext/error.hpp"
#include "monoext/linalg.hpp"

namespace monoext {

  namespace {

    void require_group(GroupTable const& have, GroupTable const& want) {
      require(have.same_table(want), ErrorCode::kGroupMismatch, "representation is over a different group");
    }

    // Writes block (bi, bj) of size d x d.
    void set_block(Matrix& target, std::size_t bi, std::size_t bj, Matrix const& block) {
      std::size_t d = block.rows();
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
          target.set(bi * d + i, bj * d + j, block.at(i, j));
        }
      }
    }

    // Solutions f (dim_v x dim_u) of rho_v(x) f = f rho_u(x) for every pair.
    HomSpace intertwiners(Field const& f,
                          std::size_t du,
                          std::size_t dv,
                          std::vector<std::pair<Matrix const*, Matrix const*>> const& pairs) {
      SparseMatrix sys(f, du * dv);
      for (auto const& [ru, rv] : pairs) {
        for (std::size_t i = 0; i < dv; ++i) {
          for (std::size_t j = 0; j < du; ++j) {
            SparseMatrix::Row row;
            for (std::size_t k = 0; k < dv; ++k) {
              auto const& c = rv->at(i, k);
              if (c != 0) {
                row.emplace_back(static_cast<std::uint32_t>(k * du + j), c);
              }
            }
            for (std::size_t k = 0; k < du; ++k) {
              auto const& c = ru->at(k, j);
              if (c != 0) {
                row.emplace_back(static_cast<std::uint32_t>(i * du + k), f.neg(c));
              }
            }
            sys.add_row(std::move(row));
          }
        }
      }
      HomSpace out;
      std::vector<Vector> kernel;
      if (sys.rows() == 0) {
        for (std::size_t i = 0; i < du * dv; ++i) {
          Vector v(du * dv);
          v[i] = 1;
          kernel.push_back(std::move(v));
        }
      } else {
        kernel = rank_kernel(sys).kernel_basis;
      }
      for (auto const& v : kernel) {
        Matrix m(f, dv, du);
        for (std::size_t i = 0; i < dv; ++i) {
          for (std::size_t j = 0; j < du; ++j) {
            m.set(i, j, v[i * du + j]);
          }
        }
        out.basis.push_back(std::move(m));
      }
      out.dim = out.basis.size();
      return out;
    }

  }  // namespace

  MonRep trivial_module(MonoidPtr m, Field const& f) {
    std::vector<Matrix> rho(m->size(), Matrix::identity(f, 1));
    return MonRep::make(std::move(m), f, 1, std::move(rho));
  }

  MonRep inflate_completion(MonoidPtr m, GroupCompletion const& completion, GroupRep const& v) {
    require_group(v.group(), completion.group);
    require(completion.psi.size() == m->size(), ErrorCode::kDimensionMismatch,
            "completion map has the wrong length");
    std::vector<Matrix> rho;
    for (Element x = 0; x < m->size(); ++x) {
      rho.push_back(v.rho(completion.psi[x]));
    }
    return MonRep::make(std::move(m), v.field(), v.dim(), std::move(rho));
  }

  MonRep inflate_units(MonoidPtr m, GroupRep const& v) {
    GroupTable units = maximal_subgroup(*m, 0);
    require_group(v.group(), units);
    Field const& f = v.field();
    std::vector<Matrix> rho(m->size(), Matrix(f, v.dim(), v.dim()));
    for (std::uint32_t g = 0; g < units.size(); ++g) {
      rho[units.embedding()[g]] = v.rho(g);
    }
    return MonRep::make(std::move(m), f, v.dim(), std::move(rho));
  }

  MonRep trivial_of_units(MonoidPtr m, Field const& f) {
    auto units = std::make_shared<GroupTable const>(maximal_subgroup(*m, 0));
    return inflate_units(std::move(m), GroupRep::trivial(units, f));
  }

  MonRep regular_module(MonoidPtr m, Field const& f) {
    std::size_t n = m->size();
    std::vector<Matrix> rho;
    for (Element a = 0; a < n; ++a) {
      Matrix r(f, n, n);
      for (Element x = 0; x < n; ++x) {
        r.set(m->mul(a, x), x, 1);
      }
      rho.push_back(std::move(r));
    }
    return MonRep::make(std::move(m), f, n, std::move(rho));
  }

  GroupRep contragredient(GroupRep const& v) {
    std::vector<Matrix> rho;
    for (std::uint32_t g = 0; g < v.group().size(); ++g) {
      rho.push_back(v.rho(v.group().inv(g)).transpose());
    }
    return GroupRep::make(v.group_ptr(), v.field(), v.dim(), std::move(rho));
  }

  MonRep dual_op(MonRep const& v, MonoidPtr opposite) {
    require(opposite->size() == v.monoid().size(), ErrorCode::kDimensionMismatch,
            "opposite monoid has the wrong size");
    for (Element a = 0; a < opposite->size(); ++a) {
      for (Element b = 0; b < opposite->size(); ++b) {
        require(opposite->mul(a, b) == v.monoid().mul(b, a), ErrorCode::kInvalidArgument,
                "monoid is not the opposite");
      }
    }
    std::vector<Matrix> rho;
    for (auto const& r : v.matrices()) {
      rho.push_back(r.transpose());
    }
    return MonRep::make(std::move(opposite), v.field(), v.dim(), std::move(rho));
  }

  GroupRep restrict_to_group(MonRep const& v, GroupPtr g) {
    require(g->has_embedding(), ErrorCode::kInvalidArgument, "group has no embedding into the monoid");
    std::vector<Matrix> rho;
    for (std::uint32_t x = 0; x < g->size(); ++x) {
      rho.push_back(v.rho(g->embedding()[x]));
    }
    require(rho[0].is_identity(), ErrorCode::kNotInvertible,
            "the group identity does not act as the identity");
    return GroupRep::make(std::move(g), v.field(), v.dim(), std::move(rho));
  }

  MonRep tensor(MonRep const& v, MonRep const& w) {
    require(v.field() == w.field(), ErrorCode::kFieldMismatch, "modules over different fields");
    require(v.monoid() == w.monoid(), ErrorCode::kDimensionMismatch, "modules over different monoids");
    std::vector<Matrix> rho;
    for (Element x = 0; x < v.monoid().size(); ++x) {
      rho.push_back(kron(v.rho(x), w.rho(x)));
    }
    return MonRep::make(v.monoid_ptr(), v.field(), v.dim() * w.dim(), std::move(rho));
  }

  GroupRep tensor(GroupRep const& v, GroupRep const& w) {
    require(v.field() == w.field(), ErrorCode::kFieldMismatch, "modules over different fields");
    require_group(w.group(), v.group());
    std::vector<Matrix> rho;
    for (std::uint32_t g = 0; g < v.group().size(); ++g) {
      rho.push_back(kron(v.rho(g), w.rho(g)));
    }
    return GroupRep::make(v.group_ptr(), v.field(), v.dim() * w.dim(), std::move(rho));
  }

  MonRep hom_module(MonRep const& v, MonRep const& w) {
    require(v.field() == w.field(), ErrorCode::kFieldMismatch, "modules over different fields");
    require(v.monoid() == w.monoid(), ErrorCode::kDimensionMismatch, "modules over different monoids");
    std::vector<Matrix> rho;
    for (Element x = 0; x < v.monoid().size(); ++x) {
      auto inv = inverse(v.rho(x));
      require(inv.has_value(), ErrorCode::kNotInvertible,
              "Hom module needs a source on which every element acts invertibly");
      rho.push_back(kron(w.rho(x), inv->transpose()));
    }
    return MonRep::make(v.monoid_ptr(), v.field(), v.dim() * w.dim(), std::move(rho));
  }

  Matrix hom_to_tensor_swap(std::size_t dim_v, std::size_t dim_w, Field const& f) {
    Matrix p(f, dim_v * dim_w, dim_v * dim_w);
    for (std::size_t a = 0; a < dim_w; ++a) {
      for (std::size_t b = 0; b < dim_v; ++b) {
        p.set(b * dim_w + a, a * dim_v + b, 1);
      }
    }
    return p;
  }

  MonRep coinduce(MonoidPtr m, RLData const& rl, GroupRep const& w) {
    require_group(w.group(), rl.group);
    Field const& f = w.field();
    std::size_t d = w.dim();
    std::size_t orbits = rl.left_orbit_reps.size();
    std::vector<Matrix> rho;
    for (Element x = 0; x < m->size(); ++x) {
      Matrix r(f, orbits * d, orbits * d);
      for (std::size_t k = 0; k < orbits; ++k) {
        auto [g, i] = rl.r_coord[m->mul(rl.left_orbit_reps[k], x)];
        if (g != UINT32_MAX) {
          set_block(r, k, i, w.rho(g));
        }
      }
      rho.push_back(std::move(r));
    }
    return MonRep::make(std::move(m), f, orbits * d, std::move(rho));
  }

  MonRep induce(MonoidPtr m, RLData const& rl, GroupRep const& w) {
    require_group(w.group(), rl.group);
    Field const& f = w.field();
    std::size_t d = w.dim();
    std::size_t orbits = rl.right_orbit_reps.size();
    std::vector<Matrix> rho;
    for (Element x = 0; x < m->size(); ++x) {
      Matrix r(f, orbits * d, orbits * d);
      for (std::size_t i = 0; i < orbits; ++i) {
        auto [g, i2] = rl.l_coord[m->mul(x, rl.right_orbit_reps[i])];
        if (g != UINT32_MAX) {
          set_block(r, i2, i, w.rho(g));
        }
      }
      rho.push_back(std::move(r));
    }
    return MonRep::make(std::move(m), f, orbits * d, std::move(rho));
  }

  GroupRep local_quotient(MonRep const& v, RLData const& rl) {
    Field const& f = v.field();
    std::size_t n = v.dim();
    std::vector<Vector> candidates;
    for (Element x : rl.r_minus) {
      for (std::size_t j = 0; j < n; ++j) {
        candidates.push_back(v.rho(x).column(j));
      }
    }
    std::vector<Vector> sub;
    for (auto i : independent_subset(f, candidates)) {
      sub.push_back(candidates[i]);
    }
    std::vector<Vector> extended = sub;
    for (std::size_t j = 0; j < n; ++j) {
      extended.push_back(v.rho(rl.e).column(j));
    }
    std::vector<Vector> quot;
    for (auto i : independent_subset(f, extended)) {
      if (i >= sub.size()) {
        quot.push_back(extended[i]);
      }
    }
    std::size_t k = quot.size();
    auto group = std::make_shared<GroupTable const>(rl.group);
    if (k == 0) {
      return GroupRep::make(group, f, 0, std::vector<Matrix>(group->size(), Matrix(f, 0, 0)));
    }
    // Columns [quot | sub] form a basis of eV.
    std::vector<Vector> cols = quot;
    cols.insert(cols.end(), sub.begin(), sub.end());
    Matrix basis = Matrix::from_rows(f, cols).transpose();
    std::vector<Matrix> rho;
    for (std::uint32_t g = 0; g < group->size(); ++g) {
      Matrix images(f, n, k);
      for (std::size_t i = 0; i < k; ++i) {
        auto img = v.rho(group->embedding()[g]).apply(quot[i]);
        for (std::size_t r = 0; r < n; ++r) {
          images.set(r, i, img[r]);
        }
      }
      auto coords = solve_right(basis, images);
      require(coords.has_value(), ErrorCode::kNotInvariant, "eV is not stable under G_e");
      Matrix top(f, k, k);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          top.set(i, j, coords->at(i, j));
        }
      }
      rho.push_back(std::move(top));
    }
    return GroupRep::make(group, f, k, std::move(rho));
  }

  HomSpace equivariant_hom(GroupRep const& u, GroupRep const& v) {
    require(u.field() == v.field(), ErrorCode::kFieldMismatch, "modules over different fields");
    require_group(v.group(), u.group());
    std::vector<std::pair<Matrix const*, Matrix const*>> pairs;
    for (auto g : u.group().generators()) {
      pairs.emplace_back(&u.rho(g), &v.rho(g));
    }
    return intertwiners(u.field(), u.dim(), v.dim(), pairs);
  }

  HomSpace monoid_hom(MonRep const& u, MonRep const& v) {
    require(u.field() == v.field(), ErrorCode::kFieldMismatch, "modules over different fields");
    require(u.monoid() == v.monoid(), ErrorCode::kDimensionMismatch, "modules over different monoids");
    std::vector<std::pair<Matrix const*, Matrix const*>> pairs;
    for (auto g : u.monoid().generators()) {
      pairs.emplace_back(&u.rho(g), &v.rho(g));
    }
    return intertwiners(u.field(), u.dim(), v.dim(), pairs);
  }

  bool is_projective(MonRep const& v) {
    Field const& f = v.field();
    FiniteMonoid const& m = v.monoid();
    std::size_t n = m.size();
    std::size_t d = v.dim();
    if (d == 0) {
      return true;
    }
    // Unknown s[(i, x), c] at index ((i * n + x) * d + c).
    auto var = [n, d](std::size_t i, std::size_t x, std::size_t c) {
      return static_cast<std::uint32_t>((i * n + x) * d + c);
    };
    SparseMatrix sys(f, n * d * d);
    Vector rhs;
    for (auto g : m.generators()) {
      std::vector<std::vector<Element>> pre(n);
      for (Element y = 0; y < n; ++y) {
        pre[m.mul(g, y)].push_back(y);
      }
      Matrix const& rg = v.rho(g);
      for (std::size_t i = 0; i < d; ++i) {
        for (Element x = 0; x < n; ++x) {
          for (std::size_t c = 0; c < d; ++c) {
            // (s rho(g))[(i,x), c] - (rho_F(g) s)[(i,x), c] = 0
            SparseMatrix::Row row;
            for (std::size_t k = 0; k < d; ++k) {
              if (rg.at(k, c) != 0) {
                row.emplace_back(var(i, x, k), rg.at(k, c));
              }
            }
            for (auto y : pre[x]) {
              row.emplace_back(var(i, y, c), f.from_int(-1));
            }
            sys.add_row(std::move(row));
            rhs.push_back(0);
          }
        }
      }
    }
    // pi s = I, where pi(i, x) = rho(x) e_i.
    for (std::size_t a = 0; a < d; ++a) {
      for (std::size_t c = 0; c < d; ++c) {
        SparseMatrix::Row row;
        for (std::size_t i = 0; i < d; ++i) {
          for (Element x = 0; x < n; ++x) {
            auto const& coef = v.rho(x).at(a, i);
            if (coef != 0) {
              row.emplace_back(var(i, x, c), coef);
            }
          }
        }
        sys.add_row(std::move(row));
        rhs.push_back(a == c ? Rational(1) : Rational(0));
      }
    }
    return solve_sparse(sys, rhs).has_value();
  }

  std::optional<InducedWitness> induced_recognizer(FiniteMonoid const& m,
                                                   RLData const& rl,
                                                   LeftMSet const& x,
                                                   std::vector<char> const& y,
                                                   Field const& f) {
    require(y.size() == x.size(), ErrorCode::kDimensionMismatch, "subset has the wrong length");
    require(is_invariant(x, y), ErrorCode::kNotInvariant, "Y is not M-invariant");
    Element e = rl.e;
    // (1) X \ Y inside MeX.
    std::vector<char> mex(x.size(), 0);
    for (Element t : m.left_ideal(e)) {
      for (std::uint32_t p = 0; p < x.size(); ++p) {
        mex[x.apply(t, p)] = 1;
      }
    }
    for (std::uint32_t p = 0; p < x.size(); ++p) {
      if (!y[p] && !mex[p]) {
        return std::nullopt;
      }
    }
    // (2) L(e) X inside Y.
    for (Element t : rl.l_minus) {
      for (std::uint32_t p = 0; p < x.size(); ++p) {
        if (!y[x.apply(t, p)]) {
          return std::nullopt;
        }
      }
    }
    // (3) tx determines the coset tG_e.
    InducedWitness w;
    for (std::uint32_t p = 0; p < x.size(); ++p) {
      if (x.apply(e, p) == p && !y[p]) {
        w.points.push_back(p);
      }
    }
    std::vector<std::uint32_t> coset_of(x.size(), UINT32_MAX);
    for (Element t : rl.l_e) {
      std::uint32_t coset = rl.l_coord[t].second;
      for (auto p : w.points) {
        auto& slot = coset_of[x.apply(t, p)];
        if (slot != UINT32_MAX && slot != coset) {
          return std::nullopt;
        }
        slot = coset;
      }
    }
    auto group = std::make_shared<GroupTable const>(rl.group);
    std::vector<std::uint32_t> index(x.size(), UINT32_MAX);
    for (std::uint32_t i = 0; i < w.points.size(); ++i) {
      index[w.points[i]] = i;
    }
    std::vector<std::vector<std::uint32_t>> perm;
    for (std::uint32_t g = 0; g < group->size(); ++g) {
      std::vector<std::uint32_t> images;
      for (auto p : w.points) {
        auto q = index[x.apply(group->embedding()[g], p)];
        require(q != UINT32_MAX, ErrorCode::kNotInvariant, "eX \\ eY is not a G_e-set");
        images.push_back(q);
      }
      perm.push_back(std::move(images));
    }
    w.permutation = GroupRep::permutation(group, f, perm);
    return w;
  }

}  // namespace monoext
