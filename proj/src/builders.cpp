#include "monoext/builders.hpp"

#include <map>
#include <sstream>

#include "monoext/error.hpp"

namespace monoext {

  // ---------------------------------------------------------------------
  // GaloisField
  // ---------------------------------------------------------------------

  namespace {
    bool prime_power(std::uint32_t q, std::uint32_t& p, std::uint32_t& k) {
      if (q < 2) {
        return false;
      }
      for (p = 2; p <= q; ++p) {
        if (q % p == 0) {
          break;
        }
      }
      k = 0;
      std::uint32_t x = q;
      while (x % p == 0) {
        x /= p;
        ++k;
      }
      return x == 1;
    }
  }  // namespace

  GaloisField::GaloisField(std::uint32_t q) : _q(q), _p(0), _k(0) {
    require(q <= 256 && prime_power(q, _p, _k), ErrorCode::kInvalidArgument,
            "field order must be a prime power at most 256, got " + std::to_string(q));
    // Polynomials over F_p of degree < k, digits little-endian in base p.
    auto digits = [this](std::uint32_t a) {
      std::vector<std::uint32_t> d(_k);
      for (std::uint32_t i = 0; i < _k; ++i) {
        d[i] = a % _p;
        a /= _p;
      }
      return d;
    };
    auto encode = [this](std::vector<std::uint32_t> const& d) {
      std::uint32_t a = 0;
      for (std::uint32_t i = _k; i-- > 0;) {
        a = a * _p + d[i];
      }
      return a;
    };
    // The multiplication is taken modulo the first monic polynomial of
    // degree k (in base-p order) whose quotient ring has no zero divisors.
    std::vector<std::uint32_t> modulus(_k + 1, 0);  // coefficients, degree k
    auto poly_mul_mod = [this](std::vector<std::uint32_t> const& a,
                               std::vector<std::uint32_t> const& b,
                               std::vector<std::uint32_t> const& f) {
      std::vector<std::uint32_t> prod(2 * _k, 0);
      for (std::uint32_t i = 0; i < _k; ++i) {
        for (std::uint32_t j = 0; j < _k; ++j) {
          prod[i + j] = (prod[i + j] + a[i] * b[j]) % _p;
        }
      }
      for (std::uint32_t d = 2 * _k - 1; d >= _k; --d) {
        std::uint32_t c = prod[d];
        if (c != 0) {
          for (std::uint32_t i = 0; i <= _k; ++i) {
            prod[d - _k + i] = (prod[d - _k + i] + _p * _p - c * f[i] % _p) % _p;
          }
        }
        if (d == _k) {
          break;
        }
      }
      prod.resize(_k);
      return prod;
    };
    if (_k == 1) {
      modulus = {0, 1};
    } else {
      std::uint32_t count = 1;
      for (std::uint32_t i = 0; i < _k; ++i) {
        count *= _p;
      }
      bool found = false;
      for (std::uint32_t low = 0; low < count && !found; ++low) {
        auto d = digits(low);
        std::vector<std::uint32_t> f(d.begin(), d.end());
        f.push_back(1);
        if (f[0] == 0) {
          continue;
        }
        bool domain = true;
        for (std::uint32_t a = 1; a < count && domain; ++a) {
          for (std::uint32_t b = a; b < count; ++b) {
            auto pr = poly_mul_mod(digits(a), digits(b), f);
            if (encode(pr) == 0) {
              domain = false;
              break;
            }
          }
        }
        if (domain) {
          modulus = f;
          found = true;
        }
      }
      require(found, ErrorCode::kInvalidArgument, "no irreducible polynomial found");
    }
    _add.resize(static_cast<std::size_t>(_q) * _q);
    _mul.resize(static_cast<std::size_t>(_q) * _q);
    for (std::uint32_t a = 0; a < _q; ++a) {
      for (std::uint32_t b = 0; b < _q; ++b) {
        auto da = digits(a), db = digits(b);
        std::vector<std::uint32_t> s(_k);
        for (std::uint32_t i = 0; i < _k; ++i) {
          s[i] = (da[i] + db[i]) % _p;
        }
        _add[a * _q + b] = encode(s);
        if (_k == 1) {
          _mul[a * _q + b] = (a * b) % _p;
        } else {
          _mul[a * _q + b] = encode(poly_mul_mod(da, db, modulus));
        }
      }
    }
    for (std::uint32_t g = 1; g < _q; ++g) {
      std::uint32_t x = g, ord = 1;
      while (x != 1) {
        x = mul(x, g);
        ++ord;
      }
      if (ord == _q - 1) {
        _primitive = g;
        break;
      }
    }
  }

  // ---------------------------------------------------------------------
  // Closure under right multiplication by generators
  // ---------------------------------------------------------------------

  namespace {
    template <class T, class Mul, class Label>
    FiniteMonoid closure(T const& identity,
                         std::vector<T> const& gens,
                         Mul mul,
                         Label label,
                         MonoidOptions const& options,
                         std::vector<T>* elements_out = nullptr) {
      std::vector<T> elems{identity};
      std::map<T, Element> index{{identity, 0}};
      std::vector<Element> parent{0};
      std::vector<std::uint32_t> last_gen{0};
      std::vector<std::vector<Element>> right;  // right[x][g] = x * gen_g
      for (std::size_t k = 0; k < elems.size(); ++k) {
        right.emplace_back(gens.size());
        for (std::size_t g = 0; g < gens.size(); ++g) {
          T y = mul(elems[k], gens[g]);
          auto [it, inserted] = index.emplace(y, static_cast<Element>(elems.size()));
          if (inserted) {
            require(elems.size() < options.size_cap, ErrorCode::kSizeCap,
                    "monoid closure exceeds the size cap " + std::to_string(options.size_cap));
            elems.push_back(std::move(y));
            parent.push_back(static_cast<Element>(k));
            last_gen.push_back(static_cast<std::uint32_t>(g));
          }
          right[k][g] = it->second;
        }
      }
      std::size_t n = elems.size();
      std::vector<Element> table(n * n);
      for (std::size_t a = 0; a < n; ++a) {
        Element* row = &table[a * n];
        row[0] = static_cast<Element>(a);
        // Elements are discovered in breadth-first order, so parents come
        // before children.
        for (std::size_t b = 1; b < n; ++b) {
          row[b] = right[row[parent[b]]][last_gen[b]];
        }
      }
      std::vector<std::string> labels(n);
      for (std::size_t i = 0; i < n; ++i) {
        labels[i] = label(elems[i]);
      }
      if (elements_out != nullptr) {
        *elements_out = std::move(elems);
      }
      return FiniteMonoid::trusted(n, std::move(table), std::move(labels));
    }

    using Word = std::vector<std::uint32_t>;

    std::string list_label(Word const& w) {
      std::ostringstream out;
      out << '[';
      for (std::size_t i = 0; i < w.size(); ++i) {
        out << (i ? "," : "") << w[i];
      }
      out << ']';
      return out.str();
    }

    // Matrices over GF(q) stored row-major in a Word of length n*n.
    Word mat_mul(GaloisField const& f, std::size_t n, Word const& a, Word const& b) {
      Word c(n * n, 0);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
          std::uint32_t x = a[i * n + k];
          if (x == 0) {
            continue;
          }
          for (std::size_t j = 0; j < n; ++j) {
            c[i * n + j] = f.add(c[i * n + j], f.mul(x, b[k * n + j]));
          }
        }
      }
      return c;
    }

    std::string mat_label(std::size_t n, Word const& a) {
      std::ostringstream out;
      out << '[';
      for (std::size_t i = 0; i < n; ++i) {
        out << (i ? "," : "") << '[';
        for (std::size_t j = 0; j < n; ++j) {
          out << (j ? "," : "") << a[i * n + j];
        }
        out << ']';
      }
      out << ']';
      return out.str();
    }

    Word identity_matrix(std::size_t n) {
      Word id(n * n, 0);
      for (std::size_t i = 0; i < n; ++i) {
        id[i * n + i] = 1;
      }
      return id;
    }

    // Transvections, diagonal generators of the unit group, and the
    // idempotent diag(1,...,1,0).
    std::vector<Word> matrix_generators(GaloisField const& f, std::size_t n) {
      std::vector<Word> gens;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (i != j) {
            Word t = identity_matrix(n);
            t[i * n + j] = 1;
            gens.push_back(t);
          }
        }
      }
      if (f.order() > 2) {
        for (std::size_t i = 0; i < n; ++i) {
          Word d = identity_matrix(n);
          d[i * n + i] = f.primitive_element();
          gens.push_back(d);
        }
      }
      Word e = identity_matrix(n);
      e[(n - 1) * n + (n - 1)] = 0;
      gens.push_back(e);
      return gens;
    }

    // Affine maps (A, b) stored as n*n entries of A then n entries of b.
    Word aff_mul(GaloisField const& f, std::size_t n, Word const& x, Word const& y) {
      Word a(x.begin(), x.begin() + n * n), b(x.begin() + n * n, x.end());
      Word a2(y.begin(), y.begin() + n * n), b2(y.begin() + n * n, y.end());
      Word out = mat_mul(f, n, a, a2);
      for (std::size_t i = 0; i < n; ++i) {
        std::uint32_t v = b[i];
        for (std::size_t k = 0; k < n; ++k) {
          v = f.add(v, f.mul(a[i * n + k], b2[k]));
        }
        out.push_back(v);
      }
      return out;
    }

    std::string aff_label(std::size_t n, Word const& x) {
      Word a(x.begin(), x.begin() + n * n), b(x.begin() + n * n, x.end());
      return "A=" + mat_label(n, a) + ";b=" + list_label(b);
    }

    std::vector<Word> affine_generators(GaloisField const& f, std::size_t n) {
      std::vector<Word> gens;
      for (auto const& g : matrix_generators(f, n)) {
        Word w = g;
        w.resize(n * n + n, 0);
        gens.push_back(w);
      }
      Word t = identity_matrix(n);
      t.resize(n * n + n, 0);
      t[n * n] = 1;
      gens.push_back(t);
      return gens;
    }
  }  // namespace

  FiniteMonoid transformation_monoid(std::size_t degree,
                                     std::vector<std::vector<std::uint32_t>> const& gens,
                                     MonoidOptions const& options) {
    for (auto const& g : gens) {
      require(g.size() == degree, ErrorCode::kSchema, "transformation has the wrong degree");
      for (auto x : g) {
        require(x < degree, ErrorCode::kSchema, "transformation image out of range");
      }
    }
    Word id(degree);
    for (std::size_t i = 0; i < degree; ++i) {
      id[i] = static_cast<std::uint32_t>(i);
    }
    auto compose = [degree](Word const& f, Word const& g) {
      Word h(degree);
      for (std::size_t i = 0; i < degree; ++i) {
        h[i] = f[g[i]];
      }
      return h;
    };
    return closure(id, gens, compose, list_label, options);
  }

  FiniteMonoid full_transformation_monoid(std::size_t n, MonoidOptions const& options) {
    require(n >= 1, ErrorCode::kInvalidArgument, "T_n needs n >= 1");
    std::vector<Word> gens;
    if (n >= 2) {
      Word cycle(n), swap(n), collapse(n);
      for (std::size_t i = 0; i < n; ++i) {
        cycle[i] = static_cast<std::uint32_t>((i + 1) % n);
        swap[i] = static_cast<std::uint32_t>(i);
        collapse[i] = static_cast<std::uint32_t>(i);
      }
      std::swap(swap[0], swap[1]);
      collapse[1] = 0;
      gens = {cycle, swap, collapse};
    }
    return transformation_monoid(n, gens, options);
  }

  FiniteMonoid matrix_monoid(std::size_t n, std::uint32_t q, MonoidOptions const& options) {
    require(n >= 1, ErrorCode::kInvalidArgument, "matrix monoid needs n >= 1");
    GaloisField f(q);
    auto mul = [&f, n](Word const& a, Word const& b) { return mat_mul(f, n, a, b); };
    auto label = [n](Word const& a) { return mat_label(n, a); };
    return closure(identity_matrix(n), matrix_generators(f, n), mul, label, options);
  }

  FiniteMonoid affine_monoid(std::size_t n, std::uint32_t q, MonoidOptions const& options) {
    require(n >= 1, ErrorCode::kInvalidArgument, "affine monoid needs n >= 1");
    GaloisField f(q);
    Word id = identity_matrix(n);
    id.resize(n * n + n, 0);
    auto mul = [&f, n](Word const& a, Word const& b) { return aff_mul(f, n, a, b); };
    auto label = [n](Word const& a) { return aff_label(n, a); };
    return closure(id, affine_generators(f, n), mul, label, options);
  }

  std::vector<Element> affine_linear_part(std::size_t n, std::uint32_t q,
                                          MonoidOptions const& options) {
    GaloisField f(q);
    std::vector<Word> aff_elems, lin_elems;
    Word id = identity_matrix(n);
    Word aid = id;
    aid.resize(n * n + n, 0);
    closure(aid, affine_generators(f, n),
            [&f, n](Word const& a, Word const& b) { return aff_mul(f, n, a, b); },
            [](Word const&) { return std::string(); }, options, &aff_elems);
    closure(id, matrix_generators(f, n),
            [&f, n](Word const& a, Word const& b) { return mat_mul(f, n, a, b); },
            [](Word const&) { return std::string(); }, options, &lin_elems);
    std::map<Word, Element> lin_index;
    for (std::size_t i = 0; i < lin_elems.size(); ++i) {
      lin_index.emplace(lin_elems[i], static_cast<Element>(i));
    }
    std::vector<Element> map(aff_elems.size());
    for (std::size_t i = 0; i < aff_elems.size(); ++i) {
      Word a(aff_elems[i].begin(), aff_elems[i].begin() + n * n);
      map[i] = lin_index.at(a);
    }
    return map;
  }

  // ---------------------------------------------------------------------
  // Crossed products
  // ---------------------------------------------------------------------

  CrossedSystem CrossedSystem::semidirect(FiniteMonoid base,
                                          FiniteMonoid acting,
                                          std::vector<std::vector<Element>> alpha) {
    std::size_t nn = acting.size();
    CrossedSystem sys{std::move(base), std::move(acting), std::move(alpha),
                      std::vector<Element>(nn * nn, 0)};
    return sys;
  }

  void validate_crossed_system(CrossedSystem const& sys) {
    FiniteMonoid const& m = sys.base;
    FiniteMonoid const& n = sys.acting;
    std::size_t sm = m.size(), sn = n.size();
    require(sys.alpha.size() == sn, ErrorCode::kSchema, "alpha needs one map per acting element");
    require(sys.cocycle.size() == sn * sn, ErrorCode::kSchema, "cocycle needs |N|^2 entries");
    for (auto const& a : sys.alpha) {
      require(a.size() == sm, ErrorCode::kSchema, "alpha map has the wrong length");
      for (auto x : a) {
        require(x < sm, ErrorCode::kSchema, "alpha image out of range");
      }
    }
    for (auto x : sys.cocycle) {
      require(x < sm, ErrorCode::kSchema, "cocycle value out of range");
    }
    auto fail = [](std::string const& what) { throw Error(ErrorCode::kCrossedAxiom, what); };
    for (Element k = 0; k < sn; ++k) {
      if (!is_homomorphism(m, m, sys.alpha[k])) {
        fail("alpha_" + std::to_string(k) + " is not an endomorphism of the base monoid");
      }
    }
    auto c = [&](Element a, Element b) { return sys.cocycle[a * sn + b]; };
    auto alpha = [&](Element k, Element x) { return sys.alpha[k][x]; };
    for (Element x = 0; x < sm; ++x) {
      if (alpha(0, x) != x) {
        fail("C3 fails: alpha_1(" + std::to_string(x) + ") != " + std::to_string(x));
      }
    }
    for (Element k = 0; k < sn; ++k) {
      if (c(0, k) != 0 || c(k, 0) != 0) {
        fail("C4 fails at n = " + std::to_string(k));
      }
    }
    for (Element n1 = 0; n1 < sn; ++n1) {
      for (Element n2 = 0; n2 < sn; ++n2) {
        Element c12 = c(n1, n2);
        Element n12 = n.mul(n1, n2);
        for (Element x = 0; x < sm; ++x) {
          if (m.mul(alpha(n1, alpha(n2, x)), c12) != m.mul(c12, alpha(n12, x))) {
            fail("C1 fails at (n1, n2, m) = (" + std::to_string(n1) + ", " + std::to_string(n2)
                 + ", " + std::to_string(x) + ")");
          }
        }
        for (Element n3 = 0; n3 < sn; ++n3) {
          Element lhs = m.mul(c12, c(n12, n3));
          Element rhs = m.mul(alpha(n1, c(n2, n3)), c(n1, n.mul(n2, n3)));
          if (lhs != rhs) {
            fail("C2 fails at (n1, n2, n3) = (" + std::to_string(n1) + ", " + std::to_string(n2)
                 + ", " + std::to_string(n3) + ")");
          }
        }
      }
    }
  }

  FiniteMonoid crossed_product(CrossedSystem const& sys, MonoidOptions const& options) {
    validate_crossed_system(sys);
    std::size_t sm = sys.base.size(), sn = sys.acting.size();
    std::size_t total = sm * sn;
    require(total <= options.size_cap, ErrorCode::kSizeCap,
            "crossed product of size " + std::to_string(total) + " exceeds the size cap");
    std::vector<Element> table(total * total);
    for (Element n1 = 0; n1 < sn; ++n1) {
      for (Element m1 = 0; m1 < sm; ++m1) {
        for (Element n2 = 0; n2 < sn; ++n2) {
          Element c12 = sys.cocycle[n1 * sn + n2];
          Element n12 = sys.acting.mul(n1, n2);
          for (Element m2 = 0; m2 < sm; ++m2) {
            Element prod = sys.base.mul(sys.base.mul(m1, sys.alpha[n1][m2]), c12);
            table[(n1 * sm + m1) * total + (n2 * sm + m2)] = n12 * static_cast<Element>(sm) + prod;
          }
        }
      }
    }
    std::vector<std::string> labels(total);
    for (Element k = 0; k < sn; ++k) {
      for (Element x = 0; x < sm; ++x) {
        labels[k * sm + x] = "(" + sys.base.label(x) + "," + sys.acting.label(k) + ")";
      }
    }
    return FiniteMonoid::trusted(total, std::move(table), std::move(labels));
  }

  std::vector<Element> crossed_projection(CrossedSystem const& sys) {
    std::size_t sm = sys.base.size(), sn = sys.acting.size();
    std::vector<Element> map(sm * sn);
    for (std::size_t i = 0; i < map.size(); ++i) {
      map[i] = static_cast<Element>(i / sm);
    }
    return map;
  }

  FiniteMonoid two_element_semilattice() {
    return FiniteMonoid::from_table({{0, 1}, {1, 1}}, 0, {"1", "0"});
  }

  FiniteMonoid nilpotent_monoid() {
    return FiniteMonoid::from_table({{0, 1, 2}, {1, 2, 2}, {2, 2, 2}}, 0, {"1", "x", "0"});
  }

  FiniteMonoid rectangular_band_monoid() {
    // Elements: 0 = identity, 1..4 = (i, j) with index 1 + 2i + j, 5 = zero.
    std::vector<std::vector<Element>> table(6, std::vector<Element>(6));
    std::vector<std::string> labels{"1", "(0,0)", "(0,1)", "(1,0)", "(1,1)", "0"};
    for (Element a = 0; a < 6; ++a) {
      for (Element b = 0; b < 6; ++b) {
        if (a == 0) {
          table[a][b] = b;
        } else if (b == 0) {
          table[a][b] = a;
        } else if (a == 5 || b == 5) {
          table[a][b] = 5;
        } else {
          Element i = (a - 1) / 2;
          Element l = (b - 1) % 2;
          table[a][b] = 1 + 2 * i + l;
        }
      }
    }
    return FiniteMonoid::from_table(table, 0, labels);
  }

  FiniteMonoid cyclic_group_monoid(std::size_t n) {
    require(n >= 1, ErrorCode::kInvalidArgument, "Z/n needs n >= 1");
    std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < n; ++a) {
      labels.push_back(std::to_string(a));
      for (std::size_t b = 0; b < n; ++b) {
        table[a][b] = static_cast<Element>((a + b) % n);
      }
    }
    return FiniteMonoid::from_table(table, 0, labels);
  }

}  // namespace monoext
