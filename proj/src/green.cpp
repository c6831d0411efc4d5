#include "monoext/green.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "monoext/error.hpp"

namespace monoext {

  namespace {

    using Bits = std::vector<std::uint64_t>;

    Bits make_bits(std::size_t n) {
      return Bits((n + 63) / 64, 0);
    }

    void set_bit(Bits& b, std::size_t i) {
      b[i / 64] |= std::uint64_t(1) << (i % 64);
    }

    bool test_bit(Bits const& b, std::size_t i) {
      return (b[i / 64] >> (i % 64)) & 1u;
    }

    // Groups elements by a key; class ids in order of first appearance.
    template <class Key>
    void classify(std::vector<Key> const& keys,
                  std::vector<std::vector<Element>>& classes,
                  std::vector<std::uint32_t>& of) {
      std::map<Key, std::uint32_t> ids;
      of.assign(keys.size(), 0);
      classes.clear();
      for (Element x = 0; x < keys.size(); ++x) {
        auto [it, inserted] = ids.emplace(keys[x], static_cast<std::uint32_t>(classes.size()));
        if (inserted) {
          classes.emplace_back();
        }
        of[x] = it->second;
        classes[it->second].push_back(x);
      }
    }

    std::uint32_t find_root(std::vector<std::uint32_t>& parent, std::uint32_t x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
      }
      return x;
    }

    void require_idempotent(FiniteMonoid const& m, Element e) {
      require(e < m.size(), ErrorCode::kInvalidArgument, "element index out of range");
      require(m.is_idempotent(e), ErrorCode::kNotIdempotent,
              "element " + std::to_string(e) + " is not idempotent");
    }

  }  // namespace

  GreenStructure green_structure(FiniteMonoid const& m) {
    std::size_t n = m.size();
    GreenStructure g;
    std::vector<Bits> right(n, make_bits(n)), left(n, make_bits(n));
    for (Element a = 0; a < n; ++a) {
      for (Element x = 0; x < n; ++x) {
        set_bit(right[a], m.mul(a, x));
        set_bit(left[a], m.mul(x, a));
      }
    }
    classify(right, g.r_classes, g.r_of);
    classify(left, g.l_classes, g.l_of);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> hkey(n);
    for (Element a = 0; a < n; ++a) {
      hkey[a] = {g.r_of[a], g.l_of[a]};
    }
    classify(hkey, g.h_classes, g.h_of);

    // D = J for finite monoids: join R and L.
    std::vector<std::uint32_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    for (Element a = 0; a < n; ++a) {
      for (Element b : {g.r_classes[g.r_of[a]][0], g.l_classes[g.l_of[a]][0]}) {
        std::uint32_t ra = find_root(parent, a), rb = find_root(parent, b);
        if (ra != rb) {
          parent[std::max(ra, rb)] = std::min(ra, rb);
        }
      }
    }
    std::vector<std::uint32_t> jroot(n);
    for (Element a = 0; a < n; ++a) {
      jroot[a] = find_root(parent, a);
    }
    classify(jroot, g.j_classes, g.j_of);

    std::size_t nj = g.j_classes.size();
    std::vector<Bits> ideal(nj, make_bits(n));
    for (std::uint32_t j = 0; j < nj; ++j) {
      Element rep = g.j_classes[j][0];
      for (Element x = 0; x < n; ++x) {
        if (test_bit(right[rep], x)) {
          for (std::size_t w = 0; w < ideal[j].size(); ++w) {
            ideal[j][w] |= left[x][w];
          }
        }
      }
    }
    g.j_leq.assign(nj, std::vector<char>(nj, 0));
    for (std::uint32_t a = 0; a < nj; ++a) {
      for (std::uint32_t b = 0; b < nj; ++b) {
        g.j_leq[a][b] = test_bit(ideal[b], g.j_classes[a][0]) ? 1 : 0;
      }
    }
    g.idempotents = m.idempotents();
    g.regular_j.assign(nj, 0);
    for (Element e : g.idempotents) {
      g.regular_j[g.j_of[e]] = 1;
    }
    return g;
  }

  StructuralFlags structural_flags(FiniteMonoid const& m) {
    std::size_t n = m.size();
    StructuralFlags f;
    f.regular = true;
    for (Element a = 0; a < n && f.regular; ++a) {
      bool found = false;
      for (Element b = 0; b < n && !found; ++b) {
        found = m.mul(m.mul(a, b), a) == a;
      }
      f.regular = found;
    }
    f.dedekind_finite = true;
    for (Element a = 0; a < n && f.dedekind_finite; ++a) {
      bool left_inv = false, right_inv = false;
      for (Element b = 0; b < n; ++b) {
        left_inv = left_inv || m.mul(b, a) == 0;
        right_inv = right_inv || m.mul(a, b) == 0;
      }
      if (left_inv && !right_inv) {
        f.dedekind_finite = false;
      }
    }
    // m L* m' iff the kernels of x -> m x and x -> m' x coincide.  The
    // kernel is encoded by the first x realizing each value.
    auto pp = [&m, n](bool right_side) {
      std::vector<std::vector<Element>> keys(n, std::vector<Element>(n));
      for (Element a = 0; a < n; ++a) {
        std::vector<Element> first(n, UINT32_MAX);
        for (Element x = 0; x < n; ++x) {
          Element v = right_side ? m.mul(a, x) : m.mul(x, a);
          if (first[v] == UINT32_MAX) {
            first[v] = x;
          }
          keys[a][x] = first[v];
        }
      }
      std::vector<std::vector<Element>> classes;
      std::vector<std::uint32_t> of;
      classify(keys, classes, of);
      for (auto const& c : classes) {
        if (std::none_of(c.begin(), c.end(), [&m](Element x) { return m.is_idempotent(x); })) {
          return false;
        }
      }
      return true;
    };
    f.right_pp = pp(true);
    f.left_pp = pp(false);
    return f;
  }

  GroupTable maximal_subgroup(FiniteMonoid const& m, Element e) {
    require_idempotent(m, e);
    std::size_t n = m.size();
    std::vector<Element> local;
    for (Element x = 0; x < n; ++x) {
      if (m.mul(m.mul(e, x), e) == x) {
        local.push_back(x);
      }
    }
    std::vector<Element> units{e};
    for (Element x : local) {
      if (x == e) {
        continue;
      }
      for (Element y : local) {
        if (m.mul(x, y) == e && m.mul(y, x) == e) {
          units.push_back(x);
          break;
        }
      }
    }
    std::map<Element, std::uint32_t> index;
    for (std::uint32_t i = 0; i < units.size(); ++i) {
      index[units[i]] = i;
    }
    std::size_t k = units.size();
    std::vector<std::uint32_t> table(k * k);
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        table[a * k + b] = index.at(m.mul(units[a], units[b]));
      }
    }
    return GroupTable::from_table(k, std::move(table), units);
  }

  RLData ideal_data(FiniteMonoid const& m, Element e) {
    require_idempotent(m, e);
    std::size_t n = m.size();
    RLData d;
    d.e = e;
    d.group = maximal_subgroup(m, e);
    std::vector<char> in_em(n, 0), in_me(n, 0);
    for (Element x = 0; x < n; ++x) {
      in_em[m.mul(e, x)] = 1;
      in_me[m.mul(x, e)] = 1;
    }
    for (Element x = 0; x < n; ++x) {
      if (in_em[x]) {
        bool gen = false;
        for (Element y = 0; y < n && !gen; ++y) {
          gen = m.mul(x, y) == e;
        }
        (gen ? d.r_e : d.r_minus).push_back(x);
      }
      if (in_me[x]) {
        bool gen = false;
        for (Element y = 0; y < n && !gen; ++y) {
          gen = m.mul(y, x) == e;
        }
        (gen ? d.l_e : d.l_minus).push_back(x);
      }
    }
    constexpr std::uint32_t kNone = UINT32_MAX;
    auto const& emb = d.group.embedding();
    d.r_coord.assign(n, {kNone, kNone});
    for (Element x : d.r_e) {
      if (d.r_coord[x].first != kNone) {
        continue;
      }
      auto orbit = static_cast<std::uint32_t>(d.left_orbit_reps.size());
      d.left_orbit_reps.push_back(x);
      for (std::uint32_t g = 0; g < emb.size(); ++g) {
        Element y = m.mul(emb[g], x);
        require(d.r_coord[y].first == kNone, ErrorCode::kInvalidArgument,
                "maximal subgroup does not act freely on R_e");
        d.r_coord[y] = {g, orbit};
      }
    }
    d.l_coord.assign(n, {kNone, kNone});
    for (Element t : d.l_e) {
      if (d.l_coord[t].first != kNone) {
        continue;
      }
      auto orbit = static_cast<std::uint32_t>(d.right_orbit_reps.size());
      d.right_orbit_reps.push_back(t);
      for (std::uint32_t g = 0; g < emb.size(); ++g) {
        Element y = m.mul(t, emb[g]);
        require(d.l_coord[y].first == kNone, ErrorCode::kInvalidArgument,
                "maximal subgroup does not act freely on L_e");
        d.l_coord[y] = {g, orbit};
      }
    }
    return d;
  }

  std::optional<Element> j_class_idempotent(GreenStructure const& g, std::uint32_t j) {
    for (Element x : g.j_classes.at(j)) {
      if (std::binary_search(g.idempotents.begin(), g.idempotents.end(), x)) {
        return x;
      }
    }
    return std::nullopt;
  }

  JClassData sandwich_matrix(FiniteMonoid const& m, GreenStructure const& g, std::uint32_t j) {
    require(j < g.num_j(), ErrorCode::kInvalidArgument, "J-class id out of range");
    auto e_opt = j_class_idempotent(g, j);
    require(e_opt.has_value(), ErrorCode::kNotRegular,
            "J-class " + std::to_string(j) + " is not regular");
    Element e = *e_opt;
    JClassData d;
    d.j = j;
    d.e = e;
    d.group = maximal_subgroup(m, e);
    std::vector<std::uint32_t> rs, ls;
    for (Element x : g.j_classes[j]) {
      rs.push_back(g.r_of[x]);
      ls.push_back(g.l_of[x]);
    }
    std::sort(rs.begin(), rs.end());
    rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
    std::sort(ls.begin(), ls.end());
    ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
    d.a_classes.push_back(g.r_of[e]);
    for (auto r : rs) {
      if (r != g.r_of[e]) {
        d.a_classes.push_back(r);
      }
    }
    d.b_classes.push_back(g.l_of[e]);
    for (auto l : ls) {
      if (l != g.l_of[e]) {
        d.b_classes.push_back(l);
      }
    }
    for (std::size_t a = 0; a < d.a_classes.size(); ++a) {
      if (a == 0) {
        d.r_reps.push_back(e);
        continue;
      }
      for (Element x : g.r_classes[d.a_classes[a]]) {
        if (g.l_of[x] == g.l_of[e]) {
          d.r_reps.push_back(x);
          break;
        }
      }
    }
    for (std::size_t b = 0; b < d.b_classes.size(); ++b) {
      if (b == 0) {
        d.l_reps.push_back(e);
        continue;
      }
      for (Element x : g.l_classes[d.b_classes[b]]) {
        if (g.r_of[x] == g.r_of[e]) {
          d.l_reps.push_back(x);
          break;
        }
      }
    }
    require(d.r_reps.size() == d.a_classes.size() && d.l_reps.size() == d.b_classes.size(),
            ErrorCode::kNotRegular, "J-class representatives missing");
    d.sandwich.resize(d.a_classes.size() * d.b_classes.size());
    for (std::size_t b = 0; b < d.b_classes.size(); ++b) {
      for (std::size_t a = 0; a < d.a_classes.size(); ++a) {
        auto idx = d.group.index_of(m.mul(d.l_reps[b], d.r_reps[a]));
        d.sandwich[b * d.a_classes.size() + a] = idx ? static_cast<std::int64_t>(*idx) : -1;
      }
    }
    return d;
  }

  std::vector<std::vector<Element>> principal_series(FiniteMonoid const& m,
                                                     GreenStructure const& g) {
    std::size_t nj = g.num_j();
    std::vector<char> used(nj, 0);
    std::vector<Element> current;
    std::vector<std::vector<Element>> series;
    for (std::size_t step = 0; step < nj; ++step) {
      std::uint32_t pick = UINT32_MAX;
      for (std::uint32_t j = 0; j < nj && pick == UINT32_MAX; ++j) {
        if (used[j]) {
          continue;
        }
        bool minimal = true;
        for (std::uint32_t k = 0; k < nj; ++k) {
          if (k != j && !used[k] && g.j_leq[k][j]) {
            minimal = false;
            break;
          }
        }
        if (minimal) {
          pick = j;
        }
      }
      used[pick] = 1;
      current.insert(current.end(), g.j_classes[pick].begin(), g.j_classes[pick].end());
      std::sort(current.begin(), current.end());
      series.push_back(current);
    }
    (void) m;
    return series;
  }

  std::size_t j_order_height(GreenStructure const& g) {
    std::size_t nj = g.num_j();
    // Longest chain ending at each class, processing classes by the size
    // of their down-set so that predecessors are done first.
    std::vector<std::size_t> below(nj, 0);
    std::vector<std::uint32_t> order(nj);
    std::iota(order.begin(), order.end(), 0);
    for (std::uint32_t j = 0; j < nj; ++j) {
      for (std::uint32_t k = 0; k < nj; ++k) {
        below[j] += g.j_leq[k][j] ? 1 : 0;
      }
    }
    std::stable_sort(order.begin(), order.end(),
                     [&below](std::uint32_t a, std::uint32_t b) { return below[a] < below[b]; });
    std::vector<std::size_t> height(nj, 0);
    std::size_t best = 0;
    for (std::uint32_t j : order) {
      for (std::uint32_t k = 0; k < nj; ++k) {
        if (k != j && g.j_leq[k][j]) {
          height[j] = std::max(height[j], height[k] + 1);
        }
      }
      best = std::max(best, height[j]);
    }
    return best;
  }

  GroupCompletion group_completion(FiniteMonoid const& m) {
    GreenStructure g = green_structure(m);
    std::uint32_t minimal = UINT32_MAX;
    for (std::uint32_t j = 0; j < g.num_j(); ++j) {
      bool below_all = true;
      for (std::uint32_t k = 0; k < g.num_j(); ++k) {
        below_all = below_all && g.j_leq[j][k];
      }
      if (below_all) {
        minimal = j;
        break;
      }
    }
    require(minimal != UINT32_MAX, ErrorCode::kInvalidArgument, "no minimal ideal found");
    Element e = *j_class_idempotent(g, minimal);
    GroupTable ge = maximal_subgroup(m, e);
    std::size_t k = ge.size();

    // Products of idempotents of the minimal ideal MeM.
    std::vector<char> in_products(m.size(), 0);
    std::vector<Element> products;
    std::vector<Element> ideal_idempotents;
    for (Element x : g.j_classes[minimal]) {
      if (m.is_idempotent(x)) {
        ideal_idempotents.push_back(x);
        in_products[x] = 1;
        products.push_back(x);
      }
    }
    for (std::size_t i = 0; i < products.size(); ++i) {
      for (Element f : ideal_idempotents) {
        Element y = m.mul(products[i], f);
        if (!in_products[y]) {
          in_products[y] = 1;
          products.push_back(y);
        }
      }
    }
    // Normal closure in G_e of those products lying in G_e.
    std::vector<char> in_n(k, 0);
    std::vector<std::uint32_t> normal{0};
    in_n[0] = 1;
    std::vector<std::uint32_t> gens;
    for (Element x : products) {
      if (auto idx = ge.index_of(x)) {
        gens.push_back(*idx);
      }
    }
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<std::uint32_t> candidates;
      for (auto s : gens) {
        for (std::uint32_t h = 0; h < k; ++h) {
          candidates.push_back(ge.mul(ge.mul(h, s), ge.inv(h)));
        }
      }
      for (auto c : candidates) {
        if (!in_n[c]) {
          in_n[c] = 1;
          normal.push_back(c);
          grew = true;
        }
      }
      for (std::size_t i = 0; i < normal.size(); ++i) {
        for (std::size_t j = 0; j < normal.size(); ++j) {
          auto y = ge.mul(normal[i], normal[j]);
          if (!in_n[y]) {
            in_n[y] = 1;
            normal.push_back(y);
            grew = true;
          }
        }
      }
      gens = normal;
    }
    // Cosets gN, numbered by their smallest group index.
    std::vector<std::uint32_t> coset(k, UINT32_MAX);
    std::vector<std::uint32_t> reps;
    for (std::uint32_t x = 0; x < k; ++x) {
      if (coset[x] != UINT32_MAX) {
        continue;
      }
      auto id = static_cast<std::uint32_t>(reps.size());
      reps.push_back(x);
      for (std::uint32_t nn = 0; nn < k; ++nn) {
        if (in_n[nn]) {
          coset[ge.mul(x, nn)] = id;
        }
      }
    }
    std::size_t q = reps.size();
    std::vector<std::uint32_t> table(q * q);
    for (std::size_t a = 0; a < q; ++a) {
      for (std::size_t b = 0; b < q; ++b) {
        table[a * q + b] = coset[ge.mul(reps[a], reps[b])];
      }
    }
    GroupCompletion out;
    out.group = GroupTable::from_table(q, std::move(table));
    out.e = e;
    out.psi.resize(m.size());
    for (Element x = 0; x < m.size(); ++x) {
      out.psi[x] = coset[*ge.index_of(m.mul(m.mul(e, x), e))];
    }
    return out;
  }

}  // namespace monoext
