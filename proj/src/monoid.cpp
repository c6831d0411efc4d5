#include "monoext/monoid.hpp"

#include <algorithm>
#include <random>

#include "monoext/error.hpp"

namespace monoext {

  FiniteMonoid FiniteMonoid::from_table(std::vector<std::vector<Element>> const& table,
                                        Element identity,
                                        std::vector<std::string> labels,
                                        MonoidOptions const& options) {
    std::size_t n = table.size();
    require(n > 0, ErrorCode::kSchema, "monoid table is empty");
    require(n <= options.size_cap, ErrorCode::kSizeCap,
            "monoid of size " + std::to_string(n) + " exceeds the size cap "
                + std::to_string(options.size_cap));
    require(identity < n, ErrorCode::kSchema, "identity index out of range");
    for (auto const& row : table) {
      require(row.size() == n, ErrorCode::kSchema, "monoid table is not square");
      for (Element x : row) {
        require(x < n, ErrorCode::kSchema, "monoid table entry out of range");
      }
    }
    if (labels.empty()) {
      labels.resize(n);
      for (std::size_t i = 0; i < n; ++i) {
        labels[i] = std::to_string(i);
      }
    }
    require(labels.size() == n, ErrorCode::kSchema, "label count differs from monoid size");

    // Relabel so that the identity is element 0.
    std::vector<Element> perm(n);
    for (std::size_t i = 0; i < n; ++i) {
      perm[i] = static_cast<Element>(i);
    }
    std::swap(perm[0], perm[identity]);
    FiniteMonoid m;
    m._size = n;
    m._table.resize(n * n);
    m._labels.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      m._labels[perm[i]] = labels[i];
      for (std::size_t j = 0; j < n; ++j) {
        m._table[perm[i] * n + perm[j]] = perm[table[i][j]];
      }
    }
    for (Element x = 0; x < n; ++x) {
      if (m.mul(0, x) != x || m.mul(x, 0) != x) {
        throw Error(ErrorCode::kNotIdentity,
                    "element " + std::to_string(identity) + " is not a two-sided identity");
      }
    }
    auto check = [&m](Element a, Element b, Element c) {
      if (m.mul(m.mul(a, b), c) != m.mul(a, m.mul(b, c))) {
        throw Error(ErrorCode::kNotAssociative,
                    "table is not associative at (" + std::to_string(a) + ", "
                        + std::to_string(b) + ", " + std::to_string(c) + ")");
      }
    };
    if (n <= options.exhaustive_associativity_limit) {
      for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) {
          for (Element c = 0; c < n; ++c) {
            check(a, b, c);
          }
        }
      }
    } else {
      std::mt19937_64 rng(options.seed);
      std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
      std::size_t trials = 10 * n * n;
      for (std::size_t t = 0; t < trials; ++t) {
        check(pick(rng), pick(rng), pick(rng));
      }
    }
    return m;
  }

  FiniteMonoid FiniteMonoid::trusted(std::size_t size,
                                     std::vector<Element> table,
                                     std::vector<std::string> labels) {
    FiniteMonoid m;
    m._size = size;
    m._table = std::move(table);
    m._labels = std::move(labels);
    if (m._labels.empty()) {
      m._labels.resize(size);
      for (std::size_t i = 0; i < size; ++i) {
        m._labels[i] = std::to_string(i);
      }
    }
    return m;
  }

  std::vector<std::vector<Element>> FiniteMonoid::table_rows() const {
    std::vector<std::vector<Element>> rows(_size);
    for (std::size_t i = 0; i < _size; ++i) {
      rows[i].assign(_table.begin() + i * _size, _table.begin() + (i + 1) * _size);
    }
    return rows;
  }

  std::vector<Element> FiniteMonoid::idempotents() const {
    std::vector<Element> out;
    for (Element e = 0; e < _size; ++e) {
      if (is_idempotent(e)) {
        out.push_back(e);
      }
    }
    return out;
  }

  std::vector<Element> FiniteMonoid::generators() const {
    std::vector<char> in(_size, 0);
    in[0] = 1;
    std::vector<Element> members{0};
    std::vector<Element> gens;
    for (Element g = 1; g < _size; ++g) {
      if (in[g]) {
        continue;
      }
      gens.push_back(g);
      // Extend the closure: new products arise from members times any
      // generator, so rescan everything reachable.
      std::vector<Element> queue = members;
      in[g] = 1;
      members.push_back(g);
      queue.push_back(g);
      for (std::size_t k = 0; k < queue.size(); ++k) {
        Element x = queue[k];
        for (Element s : gens) {
          Element y = mul(x, s);
          if (!in[y]) {
            in[y] = 1;
            members.push_back(y);
            queue.push_back(y);
          }
        }
      }
    }
    return gens;
  }

  FiniteMonoid FiniteMonoid::opposite() const {
    FiniteMonoid m;
    m._size = _size;
    m._labels = _labels;
    m._table.resize(_table.size());
    for (std::size_t a = 0; a < _size; ++a) {
      for (std::size_t b = 0; b < _size; ++b) {
        m._table[a * _size + b] = _table[b * _size + a];
      }
    }
    return m;
  }

  std::vector<Element> FiniteMonoid::right_ideal(Element x) const {
    std::vector<char> in(_size, 0);
    for (Element m = 0; m < _size; ++m) {
      in[mul(x, m)] = 1;
    }
    std::vector<Element> out;
    for (Element y = 0; y < _size; ++y) {
      if (in[y]) {
        out.push_back(y);
      }
    }
    return out;
  }

  std::vector<Element> FiniteMonoid::left_ideal(Element x) const {
    std::vector<char> in(_size, 0);
    for (Element m = 0; m < _size; ++m) {
      in[mul(m, x)] = 1;
    }
    std::vector<Element> out;
    for (Element y = 0; y < _size; ++y) {
      if (in[y]) {
        out.push_back(y);
      }
    }
    return out;
  }

  std::vector<Element> FiniteMonoid::two_sided_ideal(Element x) const {
    std::vector<char> in(_size, 0);
    for (Element r : right_ideal(x)) {
      for (Element m = 0; m < _size; ++m) {
        in[mul(m, r)] = 1;
      }
    }
    std::vector<Element> out;
    for (Element y = 0; y < _size; ++y) {
      if (in[y]) {
        out.push_back(y);
      }
    }
    return out;
  }

  bool FiniteMonoid::is_unit(Element a) const {
    for (Element b = 0; b < _size; ++b) {
      if (mul(a, b) == 0 && mul(b, a) == 0) {
        return true;
      }
    }
    return false;
  }

  std::vector<Element> FiniteMonoid::units() const {
    std::vector<Element> out;
    for (Element a = 0; a < _size; ++a) {
      if (is_unit(a)) {
        out.push_back(a);
      }
    }
    return out;
  }

  bool is_homomorphism(FiniteMonoid const& from,
                       FiniteMonoid const& to,
                       std::vector<Element> const& map) {
    if (map.size() != from.size() || map[0] != to.identity()) {
      return false;
    }
    for (Element x : map) {
      if (x >= to.size()) {
        return false;
      }
    }
    for (Element a = 0; a < from.size(); ++a) {
      for (Element b = 0; b < from.size(); ++b) {
        if (map[from.mul(a, b)] != to.mul(map[a], map[b])) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace monoext
