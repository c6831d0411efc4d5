#include "monoext/group.hpp"

#include <algorithm>
#include <map>

#include "monoext/error.hpp"

namespace monoext {

  GroupTable GroupTable::from_table(std::size_t size,
                                    std::vector<std::uint32_t> table,
                                    std::vector<Element> embedding) {
    require(size > 0, ErrorCode::kSchema, "group table is empty");
    require(table.size() == size * size, ErrorCode::kSchema, "group table has the wrong size");
    require(embedding.empty() || embedding.size() == size, ErrorCode::kSchema,
            "group embedding has the wrong size");
    GroupTable g;
    g._size = size;
    g._table = std::move(table);
    g._embedding = std::move(embedding);
    for (auto x : g._table) {
      require(x < size, ErrorCode::kSchema, "group table entry out of range");
    }
    for (std::uint32_t a = 0; a < size; ++a) {
      require(g.mul(0, a) == a && g.mul(a, 0) == a, ErrorCode::kNotIdentity,
              "group element 0 is not the identity");
    }
    g._inverse.assign(size, 0);
    for (std::uint32_t a = 0; a < size; ++a) {
      bool found = false;
      for (std::uint32_t b = 0; b < size; ++b) {
        if (g.mul(a, b) == 0 && g.mul(b, a) == 0) {
          g._inverse[a] = b;
          found = true;
          break;
        }
      }
      require(found, ErrorCode::kNotInvertible, "group element without inverse");
    }
    for (std::uint32_t a = 0; a < size; ++a) {
      for (std::uint32_t b = 0; b < size; ++b) {
        for (std::uint32_t c = 0; c < size; ++c) {
          require(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)), ErrorCode::kNotAssociative,
                  "group table is not associative");
        }
      }
    }
    return g;
  }

  GroupTable GroupTable::from_permutations(std::vector<std::vector<std::uint32_t>> const& gens) {
    require(!gens.empty(), ErrorCode::kSchema, "permutation group needs a generator");
    std::size_t degree = gens[0].size();
    for (auto const& g : gens) {
      require(g.size() == degree, ErrorCode::kSchema, "permutations of different degrees");
      std::vector<char> seen(degree, 0);
      for (auto x : g) {
        require(x < degree && !seen[x], ErrorCode::kSchema, "generator is not a permutation");
        seen[x] = 1;
      }
    }
    using Perm = std::vector<std::uint32_t>;
    // Product convention matches composition: (a b)(i) = a(b(i)).
    auto compose = [degree](Perm const& a, Perm const& b) {
      Perm c(degree);
      for (std::size_t i = 0; i < degree; ++i) {
        c[i] = a[b[i]];
      }
      return c;
    };
    Perm id(degree);
    for (std::size_t i = 0; i < degree; ++i) {
      id[i] = static_cast<std::uint32_t>(i);
    }
    std::vector<Perm> elems{id};
    std::map<Perm, std::uint32_t> index{{id, 0}};
    for (std::size_t k = 0; k < elems.size(); ++k) {
      for (auto const& g : gens) {
        Perm p = compose(elems[k], g);
        if (index.emplace(p, static_cast<std::uint32_t>(elems.size())).second) {
          elems.push_back(p);
        }
      }
    }
    std::size_t n = elems.size();
    std::vector<std::uint32_t> table(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        table[a * n + b] = index.at(compose(elems[a], elems[b]));
      }
    }
    return from_table(n, std::move(table));
  }

  GroupTable GroupTable::cyclic(std::size_t n) {
    std::vector<std::uint32_t> table(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        table[a * n + b] = static_cast<std::uint32_t>((a + b) % n);
      }
    }
    return from_table(n, std::move(table));
  }

  std::optional<std::uint32_t> GroupTable::index_of(Element m) const {
    for (std::uint32_t g = 0; g < _embedding.size(); ++g) {
      if (_embedding[g] == m) {
        return g;
      }
    }
    return std::nullopt;
  }

  std::vector<std::uint32_t> GroupTable::generators() const {
    std::vector<char> in(_size, 0);
    in[0] = 1;
    std::vector<std::uint32_t> members{0};
    std::vector<std::uint32_t> gens;
    for (std::uint32_t g = 1; g < _size; ++g) {
      if (in[g]) {
        continue;
      }
      gens.push_back(g);
      std::vector<std::uint32_t> queue = members;
      in[g] = 1;
      members.push_back(g);
      queue.push_back(g);
      for (std::size_t k = 0; k < queue.size(); ++k) {
        for (auto s : gens) {
          std::uint32_t y = mul(queue[k], s);
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

  std::size_t GroupTable::order_of(std::uint32_t g) const {
    std::size_t k = 1;
    std::uint32_t x = g;
    while (x != 0) {
      x = mul(x, g);
      ++k;
    }
    return k;
  }

  bool is_group_homomorphism(GroupTable const& a,
                             GroupTable const& b,
                             std::vector<std::uint32_t> const& map) {
    if (map.size() != a.size()) {
      return false;
    }
    for (std::uint32_t x = 0; x < a.size(); ++x) {
      for (std::uint32_t y = 0; y < a.size(); ++y) {
        if (map[a.mul(x, y)] != b.mul(map[x], map[y])) {
          return false;
        }
      }
    }
    return true;
  }

  namespace {
    // Extends an assignment of generator images to a map on all of a;
    // nullopt if the assignment is inconsistent or not injective.
    std::optional<std::vector<std::uint32_t>> extend(GroupTable const& a,
                                                     GroupTable const& b,
                                                     std::vector<std::uint32_t> const& gens,
                                                     std::vector<std::uint32_t> const& images) {
      constexpr std::uint32_t kUnset = UINT32_MAX;
      std::vector<std::uint32_t> map(a.size(), kUnset);
      map[0] = 0;
      std::vector<std::uint32_t> queue{0};
      for (std::size_t k = 0; k < queue.size(); ++k) {
        std::uint32_t x = queue[k];
        for (std::size_t i = 0; i < gens.size(); ++i) {
          std::uint32_t y = a.mul(x, gens[i]);
          std::uint32_t img = b.mul(map[x], images[i]);
          if (map[y] == kUnset) {
            map[y] = img;
            queue.push_back(y);
          } else if (map[y] != img) {
            return std::nullopt;
          }
        }
      }
      std::vector<char> hit(b.size(), 0);
      for (auto v : map) {
        if (v == kUnset || hit[v]) {
          return std::nullopt;
        }
        hit[v] = 1;
      }
      if (!is_group_homomorphism(a, b, map)) {
        return std::nullopt;
      }
      return map;
    }
  }  // namespace

  std::optional<std::vector<std::uint32_t>> find_isomorphism(GroupTable const& a,
                                                             GroupTable const& b) {
    if (a.size() != b.size()) {
      return std::nullopt;
    }
    auto gens = a.generators();
    std::vector<std::vector<std::uint32_t>> candidates(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
      std::size_t ord = a.order_of(gens[i]);
      for (std::uint32_t y = 0; y < b.size(); ++y) {
        if (b.order_of(y) == ord) {
          candidates[i].push_back(y);
        }
      }
    }
    std::vector<std::uint32_t> images(gens.size());
    std::optional<std::vector<std::uint32_t>> result;
    // Depth-first over generator images in increasing index order.
    auto search = [&](auto&& self, std::size_t depth) -> bool {
      if (depth == gens.size()) {
        result = extend(a, b, gens, images);
        return result.has_value();
      }
      for (auto y : candidates[depth]) {
        images[depth] = y;
        if (self(self, depth + 1)) {
          return true;
        }
      }
      return false;
    };
    search(search, 0);
    return result;
  }

}  // namespace monoext
