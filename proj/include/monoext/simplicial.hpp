// Finite simplicial complexes with simplices stored as sorted vertex lists.
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "monoext/poset.hpp"

namespace monoext {

  using Simplex = std::vector<std::uint32_t>;

  struct SimplicialComplex {
    std::size_t num_vertices = 0;
    // simplices[d] holds the d-simplices, each strictly increasing, and the
    // list is sorted lexicographically.
    std::vector<std::vector<Simplex>> simplices;

    // -1 for the empty complex.
    [[nodiscard]] int dimension() const noexcept {
      return static_cast<int>(simplices.size()) - 1;
    }
    [[nodiscard]] std::size_t count(int d) const noexcept {
      return d >= 0 && d <= dimension() ? simplices[d].size() : 0;
    }
    [[nodiscard]] std::optional<std::uint32_t> find(Simplex const& s) const;

    // Builds from arbitrary simplices: sorts vertices, adds all faces.
    static SimplicialComplex from_facets(std::size_t num_vertices,
                                         std::vector<Simplex> const& facets);
  };

  // Chains p_0 < ... < p_q of the poset, as sorted vertex lists.
  SimplicialComplex order_complex(Poset const& p);

  // Simplices all of whose vertices are marked.
  SimplicialComplex induced_subcomplex(SimplicialComplex const& x, std::vector<char> const& vertices);

  // True when every simplex of sub is a simplex of x and sub is closed
  // under faces.
  bool is_subcomplex(SimplicialComplex const& sub, SimplicialComplex const& x);

  // Euler characteristic (sum of (-1)^d times the number of d-simplices).
  long euler_characteristic(SimplicialComplex const& x);

}  // namespace monoext
