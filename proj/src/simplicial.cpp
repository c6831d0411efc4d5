#include "monoext/simplicial.hpp"

#include <algorithm>
#include <set>

#include "monoext/error.hpp"

namespace monoext {

  std::optional<std::uint32_t> SimplicialComplex::find(Simplex const& s) const {
    if (s.empty() || s.size() > simplices.size()) {
      return std::nullopt;
    }
    auto const& list = simplices[s.size() - 1];
    auto it = std::lower_bound(list.begin(), list.end(), s);
    if (it == list.end() || *it != s) {
      return std::nullopt;
    }
    return static_cast<std::uint32_t>(it - list.begin());
  }

  SimplicialComplex SimplicialComplex::from_facets(std::size_t num_vertices,
                                                   std::vector<Simplex> const& facets) {
    std::vector<std::set<Simplex>> levels;
    for (Simplex f : facets) {
      std::sort(f.begin(), f.end());
      require(std::adjacent_find(f.begin(), f.end()) == f.end(), ErrorCode::kInvalidArgument,
              "simplex with repeated vertex");
      for (auto v : f) {
        require(v < num_vertices, ErrorCode::kInvalidArgument, "simplex vertex out of range");
      }
      // All nonempty subsets.
      std::size_t k = f.size();
      require(k > 0 && k < 31, ErrorCode::kInvalidArgument, "facet size out of range");
      if (levels.size() < k) {
        levels.resize(k);
      }
      for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
        Simplex face;
        for (std::size_t i = 0; i < k; ++i) {
          if (mask & (1u << i)) {
            face.push_back(f[i]);
          }
        }
        levels[face.size() - 1].insert(face);
      }
    }
    SimplicialComplex x;
    x.num_vertices = num_vertices;
    for (auto const& level : levels) {
      x.simplices.emplace_back(level.begin(), level.end());
    }
    return x;
  }

  SimplicialComplex order_complex(Poset const& p) {
    SimplicialComplex x;
    x.num_vertices = p.size();
    std::vector<std::set<Simplex>> levels;
    Simplex chain;
    // Extends chain by vertices of larger index comparable to all members.
    auto grow = [&](auto&& self, std::uint32_t start) -> void {
      if (levels.size() < chain.size()) {
        levels.resize(chain.size());
      }
      levels[chain.size() - 1].insert(chain);
      for (std::uint32_t w = start; w < p.size(); ++w) {
        bool ok = true;
        for (auto v : chain) {
          if (!p.comparable(v, w)) {
            ok = false;
            break;
          }
        }
        if (ok) {
          chain.push_back(w);
          self(self, w + 1);
          chain.pop_back();
        }
      }
    };
    for (std::uint32_t v = 0; v < p.size(); ++v) {
      chain = {v};
      grow(grow, v + 1);
    }
    for (auto const& level : levels) {
      x.simplices.emplace_back(level.begin(), level.end());
    }
    return x;
  }

  SimplicialComplex induced_subcomplex(SimplicialComplex const& x, std::vector<char> const& vertices) {
    SimplicialComplex sub;
    sub.num_vertices = x.num_vertices;
    for (auto const& level : x.simplices) {
      std::vector<Simplex> kept;
      for (auto const& s : level) {
        if (std::all_of(s.begin(), s.end(), [&vertices](std::uint32_t v) { return vertices[v] != 0; })) {
          kept.push_back(s);
        }
      }
      if (kept.empty()) {
        break;
      }
      sub.simplices.push_back(std::move(kept));
    }
    return sub;
  }

  bool is_subcomplex(SimplicialComplex const& sub, SimplicialComplex const& x) {
    for (auto const& level : sub.simplices) {
      for (auto const& s : level) {
        if (!x.find(s)) {
          return false;
        }
        if (s.size() > 1) {
          for (std::size_t i = 0; i < s.size(); ++i) {
            Simplex face = s;
            face.erase(face.begin() + static_cast<long>(i));
            if (!sub.find(face)) {
              return false;
            }
          }
        }
      }
    }
    return true;
  }

  long euler_characteristic(SimplicialComplex const& x) {
    long chi = 0;
    for (int d = 0; d <= x.dimension(); ++d) {
      long c = static_cast<long>(x.count(d));
      chi += (d % 2 == 0) ? c : -c;
    }
    return chi;
  }

}  // namespace monoext
