#include "monoext/ext.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <string>

#include "monoext/error.hpp"
#include "monoext/irreps.hpp"
#include "monoext/linalg.hpp"
#include "monoext/poset.hpp"

namespace monoext {

  namespace {

    // B^q, saturating at SIZE_MAX.
    std::size_t power(std::size_t base, int q) {
      std::size_t out = 1;
      for (int i = 0; i < q; ++i) {
        if (base != 0 && out > std::numeric_limits<std::size_t>::max() / base) {
          return std::numeric_limits<std::size_t>::max();
        }
        out *= base;
      }
      return out;
    }

    std::size_t times(std::size_t a, std::size_t b) {
      if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a) {
        return std::numeric_limits<std::size_t>::max();
      }
      return a * b;
    }

    // Coefficient arithmetic for the two row emitters.
    struct ModpOps {
      std::uint32_t p;
      using Coef = std::uint32_t;
      using Entries = ModpEntries;
      [[nodiscard]] Coef one() const {
        return 1;
      }
      [[nodiscard]] Coef neg(Coef x) const {
        return x == 0 ? 0 : p - x;
      }
      [[nodiscard]] static bool zero(Coef x) {
        return x == 0;
      }
      [[nodiscard]] Coef convert(Rational const& x) const {
        std::uint32_t out = 0;
        if (!reduce_mod(x, p, out)) {
          throw BadPrime{};
        }
        return out;
      }
    };

    struct RationalOps {
      using Coef = Rational;
      using Entries = RationalEntries;
      [[nodiscard]] static Coef one() {
        return Rational(1);
      }
      [[nodiscard]] static Coef neg(Coef const& x) {
        return -x;
      }
      [[nodiscard]] static bool zero(Coef const& x) {
        return x == 0;
      }
      [[nodiscard]] static Coef convert(Rational const& x) {
        return x;
      }
    };

    // Matrices of a module in the coefficient type, flattened row-major.
    template <class Ops>
    std::vector<std::vector<typename Ops::Coef>> convert_rep(MonRep const& v, Ops const& ops) {
      std::vector<std::vector<typename Ops::Coef>> out(v.monoid().size());
      std::size_t d = v.dim();
      for (Element m = 0; m < out.size(); ++m) {
        out[m].resize(d * d);
        for (std::size_t i = 0; i < d; ++i) {
          for (std::size_t j = 0; j < d; ++j) {
            out[m][i * d + j] = ops.convert(v.rho(m).at(i, j));
          }
        }
      }
      return out;
    }

    // Tuples (m_q..m_0) of non-identity elements are indexed by
    // t = sum (m_k - 1) B^k.  For the tuple T of length q + 1 this lists
    // (index of the merged tuple of length q, sign) over the inner faces.
    struct TupleFaces {
      std::size_t drop_first = 0;  // T without m_0
      std::size_t drop_last = 0;   // T without m_q
      Element first = 0;           // m_0
      Element last = 0;            // m_q
      std::vector<std::pair<std::size_t, int>> merges;
    };

    class TupleWalker {
     public:
      TupleWalker(FiniteMonoid const& m, int q) : _m(m), _q(q), _base(m.size() - 1), _digits(q + 1) {
        _top = power(_base, q);
      }

      void faces(std::size_t t, TupleFaces& out) {
        std::size_t rest = t;
        for (int k = 0; k <= _q; ++k) {
          _digits[k] = static_cast<Element>(rest % _base + 1);
          rest /= _base;
        }
        out.first = _digits[0];
        out.last = _digits[_q];
        out.drop_first = t / _base;
        out.drop_last = t % _top;
        out.merges.clear();
        for (int i = 0; i < _q; ++i) {
          Element p = _m.mul(_digits[i + 1], _digits[i]);
          if (p == 0) {
            continue;
          }
          std::size_t idx = 0;
          std::size_t scale = 1;
          for (int k = 0; k < _q; ++k) {
            Element d = k < i ? _digits[k] : (k == i ? p : _digits[k + 1]);
            idx += (d - 1) * scale;
            scale *= _base;
          }
          out.merges.emplace_back(idx, (i % 2 == 0) ? -1 : 1);
        }
      }

     private:
      FiniteMonoid const& _m;
      int _q;
      std::size_t _base;
      std::size_t _top = 1;
      std::vector<Element> _digits;
    };

    // delta^q: Hom_KM(B_q ⊗ V, W) -> Hom_KM(B_{q+1} ⊗ V, W).  One row per
    // coordinate (T, j, a) of the target, one column per unknown
    // f(t; v_j)_a at index (t dV + j) dW + a.
    class OracleRows : public RowSource {
     public:
      OracleRows(MonRep const& v, MonRep const& w, int q) : _v(v), _w(w), _q(q) {
        std::size_t b = v.monoid().size() - 1;
        _rows = power(b, q + 1) * v.dim() * w.dim();
        _cols = power(b, q) * v.dim() * w.dim();
      }
      [[nodiscard]] std::size_t num_rows() const override {
        return _rows;
      }
      [[nodiscard]] std::size_t num_cols() const override {
        return _cols;
      }
      void rows_modp(std::uint32_t p, std::function<void(ModpEntries&)> const& emit) const override {
        run(ModpOps{p}, emit);
      }
      void rows_rational(std::function<void(RationalEntries&)> const& emit) const override {
        run(RationalOps{}, emit);
      }

     private:
      template <class Ops>
      void run(Ops const& ops, std::function<void(typename Ops::Entries&)> const& emit) const {
        auto rv = convert_rep(_v, ops);
        auto rw = convert_rep(_w, ops);
        std::size_t dv = _v.dim();
        std::size_t dw = _w.dim();
        std::size_t tuples = power(_v.monoid().size() - 1, _q + 1);
        TupleWalker walker(_v.monoid(), _q);
        TupleFaces faces;
        typename Ops::Entries row;
        bool last_negative = (_q % 2 == 0);  // sign (-1)^(q+1)
        for (std::size_t t = 0; t < tuples; ++t) {
          walker.faces(t, faces);
          auto const& v0 = rv[faces.first];
          auto const& wq = rw[faces.last];
          for (std::size_t j = 0; j < dv; ++j) {
            for (std::size_t a = 0; a < dw; ++a) {
              row.clear();
              for (std::size_t k = 0; k < dv; ++k) {
                auto const& c = v0[k * dv + j];
                if (!Ops::zero(c)) {
                  row.emplace_back(static_cast<std::uint32_t>((faces.drop_first * dv + k) * dw + a), c);
                }
              }
              for (auto const& [idx, sign] : faces.merges) {
                row.emplace_back(static_cast<std::uint32_t>((idx * dv + j) * dw + a),
                                 sign > 0 ? ops.one() : ops.neg(ops.one()));
              }
              for (std::size_t b = 0; b < dw; ++b) {
                auto const& c = wq[a * dw + b];
                if (!Ops::zero(c)) {
                  row.emplace_back(static_cast<std::uint32_t>((faces.drop_last * dv + j) * dw + b),
                                   last_negative ? ops.neg(c) : c);
                }
              }
              emit(row);
            }
          }
        }
      }

      MonRep const& _v;
      MonRep const& _w;
      int _q;
      std::size_t _rows = 0;
      std::size_t _cols = 0;
    };

    // Coboundary of V-valued normalized cochains, written directly from
    // the defining formula (row (T, a), column t dV + b).
    class CochainRows : public RowSource {
     public:
      CochainRows(MonRep const& v, int q) : _v(v), _q(q) {
        std::size_t b = v.monoid().size() - 1;
        _rows = power(b, q + 1) * v.dim();
        _cols = power(b, q) * v.dim();
      }
      [[nodiscard]] std::size_t num_rows() const override {
        return _rows;
      }
      [[nodiscard]] std::size_t num_cols() const override {
        return _cols;
      }
      void rows_modp(std::uint32_t p, std::function<void(ModpEntries&)> const& emit) const override {
        run(ModpOps{p}, emit);
      }
      void rows_rational(std::function<void(RationalEntries&)> const& emit) const override {
        run(RationalOps{}, emit);
      }

     private:
      template <class Ops>
      void run(Ops const& ops, std::function<void(typename Ops::Entries&)> const& emit) const {
        FiniteMonoid const& m = _v.monoid();
        auto rho = convert_rep(_v, ops);
        std::size_t d = _v.dim();
        std::size_t base = m.size() - 1;
        std::size_t tuples = power(base, _q + 1);
        std::size_t shorter = power(base, _q);
        std::vector<Element> digits(_q + 1);
        typename Ops::Entries row;
        for (std::size_t t = 0; t < tuples; ++t) {
          std::size_t rest = t;
          for (auto& x : digits) {
            x = static_cast<Element>(rest % base + 1);
            rest /= base;
          }
          for (std::size_t a = 0; a < d; ++a) {
            row.clear();
            row.emplace_back(static_cast<std::uint32_t>((t / base) * d + a), ops.one());
            for (int i = 0; i < _q; ++i) {
              Element prod = m.mul(digits[i + 1], digits[i]);
              if (prod == 0) {
                continue;
              }
              std::size_t idx = 0;
              std::size_t scale = 1;
              for (int k = 0; k < _q; ++k) {
                Element x = k < i ? digits[k] : (k == i ? prod : digits[k + 1]);
                idx += (x - 1) * scale;
                scale *= base;
              }
              row.emplace_back(static_cast<std::uint32_t>(idx * d + a),
                               i % 2 == 0 ? ops.neg(ops.one()) : ops.one());
            }
            auto const& act = rho[digits[_q]];
            for (std::size_t b = 0; b < d; ++b) {
              auto const& c = act[a * d + b];
              if (!Ops::zero(c)) {
                row.emplace_back(static_cast<std::uint32_t>((t % shorter) * d + b),
                                 _q % 2 == 0 ? ops.neg(c) : c);
              }
            }
            emit(row);
          }
        }
      }

      MonRep const& _v;
      int _q;
      std::size_t _rows = 0;
      std::size_t _cols = 0;
    };

    // Largest top degree n such that every cochain group up to C^{n+1}
    // stays within the cap, limited to hi.
    int cochain_top(std::size_t base, std::size_t width, int hi, std::size_t cap) {
      int top = -1;
      for (int n = 0; n <= hi; ++n) {
        if (times(power(base, n + 1), width) > cap) {
          break;
        }
        top = n;
      }
      return top;
    }

    // Ext^n = dim C^n - rank d^n - rank d^(n-1) for the given coboundaries.
    template <class Rows>
    ExtReport cochain_dims(std::string method, int lo, int hi, int top, Field const& f,
                           std::function<std::unique_ptr<Rows>(int)> const& make) {
      ExtReport r;
      r.method = std::move(method);
      r.lo = lo;
      std::vector<std::unique_ptr<Rows>> maps;
      std::vector<RowSource const*> ptrs;
      std::vector<std::size_t> shared;
      for (int q = 0; q <= top; ++q) {
        maps.push_back(make(q));
        ptrs.push_back(maps.back().get());
        shared.push_back(maps.back()->num_cols());
      }
      auto ranks = sequence_ranks(ptrs, shared, f);
      for (int n = lo; n <= top; ++n) {
        std::size_t dim = maps[n]->num_cols();
        std::size_t prev = n > 0 ? ranks[n - 1].rank : 0;
        r.dims.push_back(dim - ranks[n].rank - prev);
      }
      r.valid_through = top;
      if (top < hi) {
        r.notes.push_back("truncated by the cell cap: degrees above " + std::to_string(top) + " not computed");
      }
      return r;
    }

    void check_range(int lo, int hi) {
      require(lo >= 0 && lo <= hi, ErrorCode::kInvalidArgument, "degree range must satisfy 0 <= lo <= hi");
    }

    std::string yes_no(bool b) {
      return b ? "true" : "false";
    }

    GroupRep zero_rep(GroupPtr const& g, Field const& f) {
      return GroupRep::make(g, f, 0, std::vector<Matrix>(g->size(), Matrix(f, 0, 0)));
    }

    // G_e-representations on H~_d(R(e)) for d in [lo, hi], where lo >= -1.
    struct ReducedHomology {
      std::vector<GroupRep> reps;
      std::string complex;
    };

    ReducedHomology reduced_homology_reps(FiniteMonoid const& m,
                                          std::shared_ptr<FiniteMonoid const> const& mptr,
                                          RLData const& rl,
                                          GroupPtr const& g,
                                          Field const& f,
                                          int lo,
                                          int hi,
                                          bool use_order_complex,
                                          std::size_t cap) {
      ReducedHomology out;
      std::vector<Element> elems = rl.r_minus;
      std::sort(elems.begin(), elems.end());
      if (elems.empty()) {
        // Empty space: only H~_{-1} = K, with the trivial action.
        out.complex = "empty";
        for (int d = lo; d <= hi; ++d) {
          out.reps.push_back(d == -1 ? GroupRep::trivial(g, f) : zero_rep(g, f));
        }
        return out;
      }
      std::vector<std::uint32_t> pos(m.size(), UINT32_MAX);
      for (std::uint32_t i = 0; i < elems.size(); ++i) {
        pos[elems[i]] = i;
      }
      auto x = right_ideal_mset(m, elems);
      if (use_order_complex) {
        out.complex = "order_complex";
        auto omega = omega_poset(x);
        auto delta = order_complex(omega.poset);
        auto chains = std::make_shared<SimplicialChains>(simplicial_chains(delta, nullptr, f, true));
        std::vector<std::vector<std::uint32_t>> vmaps;
        for (std::uint32_t el = 0; el < g->size(); ++el) {
          std::vector<std::uint32_t> vm(omega.poset.size());
          for (std::uint32_t v = 0; v < vm.size(); ++v) {
            Element gx = m.mul(g->embedding()[el], elems[omega.generator[v]]);
            require(pos[gx] != UINT32_MAX, ErrorCode::kNotInvariant, "G_e does not preserve R(e)");
            vm[v] = omega.class_of[pos[gx]];
          }
          vmaps.push_back(std::move(vm));
        }
        auto action = simplicial_action(chains, g, vmaps);
        for (int d = lo; d <= hi; ++d) {
          if (d > chains->complex.max_degree()) {
            out.reps.push_back(zero_rep(g, f));
          } else {
            out.reps.push_back(g_action_on_homology(chains->complex, action, d));
          }
        }
        return out;
      }
      out.complex = "nerve";
      auto layout = nerve_layout(mptr, x, {}, true);
      auto c = bar_chain_complex(layout, f, hi + 1, cap);
      std::vector<std::vector<std::uint32_t>> xmaps;
      for (std::uint32_t el = 0; el < g->size(); ++el) {
        std::vector<std::uint32_t> xm(elems.size());
        for (std::uint32_t i = 0; i < elems.size(); ++i) {
          xm[i] = pos[m.mul(g->embedding()[el], elems[i])];
          require(xm[i] != UINT32_MAX, ErrorCode::kNotInvariant, "G_e does not preserve R(e)");
        }
        xmaps.push_back(std::move(xm));
      }
      auto action = bar_x_action(layout, g, xmaps);
      for (int d = lo; d <= hi; ++d) {
        out.reps.push_back(g_action_on_homology(c, action, d));
      }
      return out;
    }

    GroupPtr checked_group(RLData const& rl, GroupRep const& w) {
      require(w.group().has_embedding() && w.group().embedding() == rl.group.embedding(),
              ErrorCode::kGroupMismatch, "W must be a representation of the maximal subgroup at e");
      return w.group_ptr();
    }

  }  // namespace

  ExtReport monoid_cohomology(MonRep const& v, int lo, int hi, ExtOptions const& opt) {
    check_range(lo, hi);
    std::size_t base = v.monoid().size() - 1;
    int top = cochain_top(base, v.dim(), hi, opt.cap);
    require(top >= lo, ErrorCode::kCapExceeded,
            "cochain groups exceed the cap; largest computable degree is " + std::to_string(top));
    auto r = cochain_dims<CochainRows>("cohomology", lo, hi, top, v.field(),
                                       [&](int q) { return std::make_unique<CochainRows>(v, q); });
    r.assumptions.emplace_back("coefficients", "left module V, trivial right action");
    return r;
  }

  ExtReport ext_oracle(MonRep const& v, MonRep const& w, int lo, int hi, ExtOptions const& opt) {
    check_range(lo, hi);
    require(v.field() == w.field(), ErrorCode::kFieldMismatch, "modules over different fields");
    require(v.monoid() == w.monoid(), ErrorCode::kDimensionMismatch, "modules over different monoids");
    std::size_t base = v.monoid().size() - 1;
    int top = cochain_top(base, v.dim() * w.dim(), hi, opt.cap);
    require(top >= lo, ErrorCode::kCapExceeded,
            "cochain groups exceed the cap; largest computable degree is " + std::to_string(top));
    auto r = cochain_dims<OracleRows>("oracle", lo, hi, top, v.field(),
                                      [&](int q) { return std::make_unique<OracleRows>(v, w, q); });
    r.assumptions.emplace_back("resolution", "normalized bar resolution");
    return r;
  }

  GroupRep reduced_homology_rep(MonoidPtr m, Element e, Field const& f, int d) {
    require(d >= -1, ErrorCode::kInvalidArgument, "degree must be at least -1");
    require(e < m->size() && m->is_idempotent(e), ErrorCode::kNotIdempotent, "e must be an idempotent");
    RLData rl = ideal_data(*m, e);
    auto g = std::make_shared<GroupTable const>(rl.group);
    return reduced_homology_reps(*m, m, rl, g, f, d, d, true, kDefaultCellCap).reps[0];
  }

  ExtReport ext_topological(MonRep const& v, Element e, GroupRep const& w, int lo, int hi, ExtOptions const& opt) {
    check_range(lo, hi);
    FiniteMonoid const& m = v.monoid();
    require(e < m.size() && m.is_idempotent(e), ErrorCode::kNotIdempotent, "e must be an idempotent");
    require(v.field() == w.field(), ErrorCode::kFieldMismatch, "modules over different fields");
    RLData rl = ideal_data(m, e);
    GroupPtr g = checked_group(rl, w);
    Field const& f = v.field();
    require(f.is_good_for(g->size()), ErrorCode::kBadCharacteristic,
            "characteristic divides |G_e| = " + std::to_string(g->size()));
    require(v.is_invertible(), ErrorCode::kHypothesis, "V must be inflated from the group completion");
    StructuralFlags flags = structural_flags(m);

    GroupRep u = tensor(contragredient(restrict_to_group(v, g)), w);
    auto hom = reduced_homology_reps(m, v.monoid_ptr(), rl, g, f, lo - 1, hi - 1, flags.right_pp, opt.cap);

    ExtReport r;
    r.method = "topological";
    r.lo = lo;
    for (auto const& h : hom.reps) {
      r.dims.push_back(equivariant_hom(h, u).dim);
    }
    r.valid_through = hi;
    r.assumptions.emplace_back("characteristic_good", "true");
    r.assumptions.emplace_back("group_order", std::to_string(g->size()));
    r.assumptions.emplace_back("right_pp", yes_no(flags.right_pp));
    r.assumptions.emplace_back("regular", yes_no(flags.regular));
    r.assumptions.emplace_back("minimal_right_ideal", yes_no(rl.r_minus.empty()));
    r.assumptions.emplace_back("complex", hom.complex);
    return r;
  }

  ExtReport ext1_fast(MonRep const& v, Element e, GroupRep const& w) {
    FiniteMonoid const& m = v.monoid();
    require(e < m.size() && m.is_idempotent(e), ErrorCode::kNotIdempotent, "e must be an idempotent");
    require(v.field() == w.field(), ErrorCode::kFieldMismatch, "modules over different fields");
    RLData rl = ideal_data(m, e);
    require(!rl.r_minus.empty(), ErrorCode::kMinimalIdeal, "eM is a minimal right ideal, so R(e) is empty");
    require(v.is_invertible(), ErrorCode::kHypothesis, "V must be inflated from the group completion");
    GroupPtr g = checked_group(rl, w);
    GroupRep u = tensor(contragredient(restrict_to_group(v, g)), w);
    // H~_0 only depends on the components, which the order complex of
    // Omega(R(e)) shares with the nerve.
    auto hom = reduced_homology_reps(m, v.monoid_ptr(), rl, g, v.field(), 0, 0, true, kDefaultCellCap);
    ExtReport r;
    r.method = "ext1_fast";
    r.lo = 1;
    r.dims.push_back(equivariant_hom(hom.reps[0], u).dim);
    r.valid_through = 1;
    r.assumptions.emplace_back("minimal_right_ideal", "false");
    r.assumptions.emplace_back("group_order", std::to_string(g->size()));
    r.assumptions.emplace_back("characteristic_good", yes_no(v.field().is_good_for(g->size())));
    return r;
  }

  ExtReport ext_from_induced(MonRep const& v, Element e, GroupRep const& w, int lo, int hi, ExtOptions const& opt) {
    FiniteMonoid const& m = v.monoid();
    RLData rl = ideal_data(m, e);
    checked_group(rl, w);
    auto mop = std::make_shared<FiniteMonoid const>(m.opposite());
    MonRep vop = dual_op(v, mop);
    auto gop = std::make_shared<GroupTable const>(maximal_subgroup(*mop, e));
    std::vector<Matrix> rho;
    for (std::uint32_t i = 0; i < gop->size(); ++i) {
      auto idx = w.group().index_of(gop->embedding()[i]);
      require(idx.has_value(), ErrorCode::kGroupMismatch, "maximal subgroups of M and M^op differ");
      rho.push_back(w.rho(*idx).transpose());
    }
    GroupRep wop = GroupRep::make(gop, w.field(), w.dim(), std::move(rho));
    ExtReport r = ext_topological(vop, e, wop, lo, hi, opt);
    r.method = "induced";
    r.assumptions.emplace_back("via", "opposite monoid");
    return r;
  }

  ExtReport ext_two_trivials(MonoidPtr m, Field const& f, int lo, int hi, ExtOptions const& opt) {
    check_range(lo, hi);
    FiniteMonoid const& mon = *m;
    auto units = mon.units();
    std::vector<std::uint32_t> class_of(mon.size(), UINT32_MAX);
    std::uint32_t classes = 0;
    for (Element x = 0; x < mon.size(); ++x) {
      if (class_of[x] != UINT32_MAX) {
        continue;
      }
      for (Element u : units) {
        class_of[mon.mul(u, x)] = classes;
      }
      ++classes;
    }
    auto quotient = quotient_mset(mon, right_regular(mon), class_of);
    std::vector<char> sub(classes, 1);
    sub[class_of[0]] = 0;
    auto layout = nerve_layout(m, quotient, sub, false);
    auto c = bar_chain_complex(layout, f, hi + 1, opt.cap);
    auto h = homology(c, lo, hi);
    ExtReport r;
    r.method = "two_trivials";
    r.lo = lo;
    r.dims = h.dims;
    r.valid_through = hi;
    r.assumptions.emplace_back("pair", "(G\\M, G\\S) relative nerve");
    r.assumptions.emplace_back("unit_group_order", std::to_string(units.size()));
    return r;
  }

  std::vector<std::size_t> tor_bar(MonoidPtr m, RightMSet const& x, LeftMSet const& y, Field const& f, int max_n,
                                   ExtOptions const& opt) {
    require(max_n >= 0, ErrorCode::kInvalidArgument, "max degree must be nonnegative");
    BarSpec spec{m, x, y, {}, false};
    auto c = bar_chain_complex(std::make_shared<BarLayout const>(std::move(spec)), f, max_n + 1, opt.cap);
    return homology(c, 0, max_n).dims;
  }

  std::vector<std::size_t> monoid_homology(MonoidPtr m, Field const& f, int max_n, ExtOptions const& opt) {
    return tor_bar(m, right_point(*m), left_point(*m), f, max_n, opt);
  }

  HomEpiVerdict homological_epi_check(MonoidPtr m, MonoidPtr n, std::vector<Element> const& phi, Field const& f,
                                      int d, MonoidPtr crossed_base, ExtOptions const& opt) {
    require(d >= 1, ErrorCode::kInvalidArgument, "degree bound must be at least 1");
    require(is_homomorphism(*m, *n, phi), ErrorCode::kNotHomomorphism, "phi is not a monoid homomorphism");
    HomEpiVerdict out;
    std::vector<char> hit(n->size(), 0);
    for (auto x : phi) {
      hit[x] = 1;
    }
    out.surjective = std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
    out.epi_status = out.surjective ? "surjective" : "unknown";
    auto tor = tor_bar(m, right_via(*m, *n, phi), left_via(*m, *n, phi), f, d, opt);
    out.tor_dims.assign(tor.begin() + 1, tor.end());
    out.homological_epi_up_to_d =
        out.surjective && std::all_of(out.tor_dims.begin(), out.tor_dims.end(), [](std::size_t x) { return x == 0; });
    if (crossed_base) {
      auto h = monoid_homology(crossed_base, f, d, opt);
      std::vector<std::size_t> pred;
      for (int i = 1; i <= d; ++i) {
        pred.push_back(n->size() * h[i]);
      }
      out.crossed_prediction = std::move(pred);
    }
    return out;
  }

  GlobalDimensionBound global_dimension_bound(FiniteMonoid const& m, Field const& f) {
    GlobalDimensionBound out;
    GreenStructure gs = green_structure(m);
    out.regular = structural_flags(m).regular;
    if (!out.regular) {
      out.reasons.emplace_back("monoid is not regular");
    }
    bool ok = out.regular;
    for (std::uint32_t j = 0; j < gs.num_j(); ++j) {
      if (!gs.regular_j[j]) {
        continue;
      }
      JClassData sd = sandwich_matrix(m, gs, j);
      JClassWitness w;
      w.j = j;
      w.e = sd.e;
      w.group_order = sd.group.size();
      w.good_characteristic = f.is_good_for(sd.group.size());
      std::vector<std::vector<std::int64_t>> p(sd.b_classes.size(), std::vector<std::int64_t>(sd.a_classes.size()));
      for (std::size_t b = 0; b < sd.b_classes.size(); ++b) {
        for (std::size_t a = 0; a < sd.a_classes.size(); ++a) {
          p[b][a] = sd.entry(b, a);
        }
      }
      w.right_inverse = group_algebra_right_inverse(p, sd.group, f);
      w.right_invertible = w.right_inverse.has_value();
      if (!w.good_characteristic) {
        ok = false;
        out.reasons.push_back("characteristic divides |G_e| = " + std::to_string(w.group_order) + " in J-class " +
                              std::to_string(j));
      }
      if (!w.right_invertible) {
        ok = false;
        out.reasons.push_back("sandwich matrix of J-class " + std::to_string(j) + " is not right invertible");
      }
      out.witnesses.push_back(std::move(w));
    }
    out.applicable = ok;
    if (ok) {
      out.bound = j_order_height(gs);
    }
    return out;
  }

  ResolutionReport standard_resolution(MonoidPtr mptr, Field const& f, bool verify) {
    FiniteMonoid const& m = *mptr;
    ResolutionReport out;
    auto omega = omega_poset(right_regular(m));
    out.space = order_complex(omega.poset);
    auto chains = std::make_shared<SimplicialChains>(simplicial_chains(out.space, nullptr, f, true));
    std::size_t nv = omega.poset.size();
    int top = out.space.dimension();
    out.length = static_cast<std::size_t>(std::max(top, 0));

    // m (xM) = (mx) M on vertices.
    std::vector<std::vector<std::uint32_t>> vmaps(m.size(), std::vector<std::uint32_t>(nv));
    for (Element a = 0; a < m.size(); ++a) {
      for (std::uint32_t v = 0; v < nv; ++v) {
        vmaps[a][v] = omega.class_of[m.mul(a, omega.generator[v])];
      }
    }

    out.dims.push_back(1);
    for (int q = 0; q <= top; ++q) {
      std::size_t n = chains->complex.dim(q);
      out.dims.push_back(n);
      std::vector<Matrix> rho;
      for (Element a = 0; a < m.size(); ++a) {
        Matrix mat(f, n, n);
        auto cells = simplicial_cell_map(*chains, vmaps[a], q);
        for (std::uint32_t i = 0; i < n; ++i) {
          if (cells[i].sign != 0) {
            mat.set(cells[i].target, i, Rational(cells[i].sign));
          }
        }
        rho.push_back(std::move(mat));
      }
      out.modules.push_back(MonRep::make(mptr, f, n, std::move(rho)));
      auto sparse = materialize(*chains->complex.boundary(q), f);
      out.boundaries.push_back(sparse.to_dense().transpose());
    }

    // Exactness of the augmented complex.
    auto h = homology(chains->complex, -1, top);
    for (auto x : h.dims) {
      out.exact.push_back(x == 0);
    }

    // d_q rho_q(m) = rho_{q-1}(m) d_q on generators; C_{-1} is trivial.
    out.equivariant = true;
    auto gens = m.generators();
    for (int q = 0; q <= top && out.equivariant; ++q) {
      for (Element a : gens) {
        Matrix const& d = out.boundaries[q];
        Matrix lower = q == 0 ? Matrix::identity(f, 1) : out.modules[q - 1].rho(a);
        if (d * out.modules[q].rho(a) != lower * d) {
          out.equivariant = false;
          break;
        }
      }
    }

    // Cellularity: q <= m p implies q = m p' for some p' <= p.
    out.cellular = true;
    for (Element a : gens) {
      for (std::uint32_t p = 0; p < nv && out.cellular; ++p) {
        for (std::uint32_t q = 0; q < nv; ++q) {
          if (!omega.poset.leq[q][vmaps[a][p]]) {
            continue;
          }
          bool found = false;
          for (std::uint32_t p2 = 0; p2 < nv && !found; ++p2) {
            found = omega.poset.leq[p2][p] && vmaps[a][p2] == q;
          }
          if (!found) {
            out.cellular = false;
            break;
          }
        }
      }
    }

    if (verify) {
      out.projectivity_checked = true;
      for (auto const& mod : out.modules) {
        out.projective.push_back(is_projective(mod));
      }
    }

    // Layer witnesses along the principal series (regular monoids only).
    GreenStructure gs = green_structure(m);
    if (structural_flags(m).regular && verify) {
      auto series = principal_series(m, gs);
      std::vector<char> prev_vertices(nv, 0);
      std::vector<char> in_prev(m.size(), 0);
      for (std::size_t k = 0; k < series.size(); ++k) {
        std::vector<char> in_ideal(m.size(), 0);
        for (auto x : series[k]) {
          in_ideal[x] = 1;
        }
        Element fresh = 0;
        for (auto x : series[k]) {
          if (!in_prev[x]) {
            fresh = x;
            break;
          }
        }
        Element e = *j_class_idempotent(gs, gs.j_of[fresh]);
        RLData rl = ideal_data(m, e);
        std::vector<char> vertices(nv, 0);
        for (std::uint32_t v = 0; v < nv; ++v) {
          vertices[v] = in_ideal[omega.generator[v]];
        }
        for (int q = 0; q <= top; ++q) {
          // X: simplices of Delta(P_k) of dimension <= q; Y: those inside
          // Delta(P_{k-1}) or of dimension < q.
          std::vector<Simplex> xs;
          std::vector<char> ymask;
          std::map<Simplex, std::uint32_t> index;
          for (int dd = 0; dd <= q; ++dd) {
            for (auto const& s : out.space.simplices[dd]) {
              bool inside = std::all_of(s.begin(), s.end(), [&](auto v) { return vertices[v] != 0; });
              if (!inside) {
                continue;
              }
              bool old = std::all_of(s.begin(), s.end(), [&](auto v) { return prev_vertices[v] != 0; });
              index.emplace(s, static_cast<std::uint32_t>(xs.size()));
              xs.push_back(s);
              ymask.push_back(old || dd < q ? 1 : 0);
            }
          }
          std::vector<std::uint32_t> act(xs.size() * m.size());
          for (std::uint32_t i = 0; i < xs.size(); ++i) {
            for (Element a = 0; a < m.size(); ++a) {
              std::set<std::uint32_t> img;
              for (auto v : xs[i]) {
                img.insert(vmaps[a][v]);
              }
              act[static_cast<std::size_t>(i) * m.size() + a] = index.at(Simplex(img.begin(), img.end()));
            }
          }
          auto xset = LeftMSet::make(m, xs.size(), std::move(act));
          auto witness = induced_recognizer(m, rl, xset, ymask, f);
          LayerWitness lw;
          lw.layer = k + 1;
          lw.degree = q;
          lw.e = e;
          lw.accepted = witness.has_value();
          lw.points = witness ? witness->points.size() : 0;
          out.layers.push_back(lw);
        }
        prev_vertices = vertices;
        in_prev = in_ideal;
      }
    }
    return out;
  }

  std::vector<std::size_t> ext_from_resolution(ResolutionReport const& r, MonRep const& n) {
    Field const& f = n.field();
    std::size_t len = r.modules.size();
    std::vector<HomSpace> homs;
    for (auto const& c : r.modules) {
      homs.push_back(monoid_hom(c, n));
    }
    // rank of f -> f d_{q+1} from Hom(C_q, N) to Hom(C_{q+1}, N).
    std::vector<std::size_t> ranks(len, 0);
    for (std::size_t q = 0; q + 1 < len; ++q) {
      std::vector<Vector> images;
      for (auto const& b : homs[q].basis) {
        Matrix img = b * r.boundaries[q + 1];
        Vector flat;
        for (std::size_t i = 0; i < img.rows(); ++i) {
          for (std::size_t j = 0; j < img.cols(); ++j) {
            flat.push_back(img.at(i, j));
          }
        }
        images.push_back(std::move(flat));
      }
      if (!images.empty()) {
        ranks[q] = rank(Matrix::from_rows(f, images));
      }
    }
    std::vector<std::size_t> out;
    for (std::size_t q = 0; q < len; ++q) {
      out.push_back(homs[q].dim - ranks[q] - (q > 0 ? ranks[q - 1] : 0));
    }
    return out;
  }

  std::vector<SimpleModule> simple_modules_coind(MonoidPtr m, Field const& f) {
    auto bound = global_dimension_bound(*m, f);
    if (!bound.applicable) {
      std::string why;
      for (auto const& s : bound.reasons) {
        why += (why.empty() ? "" : "; ") + s;
      }
      throw Error(ErrorCode::kHypothesis, "simple modules via coinduction need: " + why);
    }
    GreenStructure gs = green_structure(*m);
    std::vector<SimpleModule> out;
    for (std::uint32_t j = 0; j < gs.num_j(); ++j) {
      Element e = *j_class_idempotent(gs, j);
      RLData rl = ideal_data(*m, e);
      auto g = std::make_shared<GroupTable const>(rl.group);
      auto irreps = fixture_irreps(g, f);
      require(irreps.has_value(), ErrorCode::kInvalidArgument,
              "no irreducible representation fixture for a maximal subgroup of order " + std::to_string(g->size()));
      for (auto const& ir : irreps->irreps) {
        out.push_back(SimpleModule{j, e, ir.name, coinduce(m, rl, ir.rep)});
      }
    }
    return out;
  }

}  // namespace monoext
