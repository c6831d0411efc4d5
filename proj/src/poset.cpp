#include "monoext/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "monoext/error.hpp"

namespace monoext {

  Poset Poset::make(std::vector<std::string> labels, std::vector<std::vector<char>> leq) {
    std::size_t n = leq.size();
    if (labels.empty()) {
      for (std::size_t i = 0; i < n; ++i) {
        labels.push_back(std::to_string(i));
      }
    }
    require(labels.size() == n, ErrorCode::kSchema, "poset labels have the wrong length");
    for (auto const& row : leq) {
      require(row.size() == n, ErrorCode::kSchema, "poset relation is not square");
    }
    for (std::size_t a = 0; a < n; ++a) {
      require(leq[a][a], ErrorCode::kInvalidArgument, "poset relation is not reflexive");
      for (std::size_t b = 0; b < n; ++b) {
        require(a == b || !(leq[a][b] && leq[b][a]), ErrorCode::kInvalidArgument,
                "poset relation is not antisymmetric");
        if (!leq[a][b]) {
          continue;
        }
        for (std::size_t c = 0; c < n; ++c) {
          require(!leq[b][c] || leq[a][c], ErrorCode::kInvalidArgument,
                  "poset relation is not transitive");
        }
      }
    }
    return Poset{std::move(labels), std::move(leq)};
  }

  OmegaPoset omega_poset(RightMSet const& x) {
    std::size_t n = x.size();
    std::vector<std::vector<std::uint32_t>> orbit(n);
    for (std::uint32_t p = 0; p < n; ++p) {
      std::vector<char> seen(n, 0);
      for (Element a = 0; a < x.monoid_size(); ++a) {
        seen[x.apply(p, a)] = 1;
      }
      for (std::uint32_t q = 0; q < n; ++q) {
        if (seen[q]) {
          orbit[p].push_back(q);
        }
      }
    }
    std::map<std::vector<std::uint32_t>, std::uint32_t> first;
    for (std::uint32_t p = 0; p < n; ++p) {
      first.emplace(orbit[p], p);
    }
    std::vector<std::uint32_t> gens;
    for (auto const& [set, g] : first) {
      gens.push_back(g);
    }
    std::sort(gens.begin(), gens.end(), [&orbit](std::uint32_t a, std::uint32_t b) {
      if (orbit[a].size() != orbit[b].size()) {
        return orbit[a].size() < orbit[b].size();
      }
      return a < b;
    });
    OmegaPoset out;
    out.generator = gens;
    std::size_t k = gens.size();
    std::map<std::vector<std::uint32_t>, std::uint32_t> index;
    for (std::uint32_t v = 0; v < k; ++v) {
      index[orbit[gens[v]]] = v;
      out.members.push_back(orbit[gens[v]]);
    }
    out.class_of.resize(n);
    for (std::uint32_t p = 0; p < n; ++p) {
      out.class_of[p] = index.at(orbit[p]);
    }
    std::vector<std::vector<char>> leq(k, std::vector<char>(k, 0));
    for (std::uint32_t a = 0; a < k; ++a) {
      auto const& sa = out.members[a];
      for (std::uint32_t b = 0; b < k; ++b) {
        auto const& sb = out.members[b];
        leq[a][b] = std::includes(sb.begin(), sb.end(), sa.begin(), sa.end()) ? 1 : 0;
      }
    }
    std::vector<std::string> labels;
    for (auto g : gens) {
      labels.push_back(x.labels()[g]);
    }
    out.poset = Poset::make(std::move(labels), std::move(leq));
    return out;
  }

  std::size_t path_components(Poset const& p) {
    std::size_t n = p.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](std::size_t a) {
      while (parent[a] != a) {
        parent[a] = parent[parent[a]];
        a = parent[a];
      }
      return a;
    };
    std::size_t components = n;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        if (p.comparable(a, b)) {
          auto ra = find(a), rb = find(b);
          if (ra != rb) {
            parent[rb] = ra;
            --components;
          }
        }
      }
    }
    return components;
  }

}  // namespace monoext
