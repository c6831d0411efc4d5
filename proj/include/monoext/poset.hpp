// Finite posets and the posets of cyclic sub-M-sets.
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "monoext/mset.hpp"

namespace monoext {

  struct Poset {
    std::vector<std::string> labels;
    // leq[a][b] is true when a <= b.
    std::vector<std::vector<char>> leq;

    // Validates reflexivity, antisymmetry and transitivity.
    static Poset make(std::vector<std::string> labels, std::vector<std::vector<char>> leq);

    [[nodiscard]] std::size_t size() const noexcept {
      return leq.size();
    }
    [[nodiscard]] bool less(std::size_t a, std::size_t b) const {
      return a != b && leq[a][b];
    }
    [[nodiscard]] bool comparable(std::size_t a, std::size_t b) const {
      return leq[a][b] || leq[b][a];
    }
  };

  // Omega(X): the cyclic sub-M-sets xM ordered by inclusion.  Elements are
  // listed by increasing size of xM, then by smallest generator, so the
  // index order is a linear extension.  generator[v] is the smallest x with
  // xM equal to element v and class_of[x] is the element containing x.
  struct OmegaPoset {
    Poset poset;
    std::vector<std::uint32_t> generator;
    std::vector<std::uint32_t> class_of;
    // Members of each cyclic sub-M-set, sorted.
    std::vector<std::vector<std::uint32_t>> members;
  };

  OmegaPoset omega_poset(RightMSet const& x);

  // Connected components of the comparability graph.
  std::size_t path_components(Poset const& p);

}  // namespace monoext
