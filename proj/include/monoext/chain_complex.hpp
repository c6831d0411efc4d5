// Chain complexes with stored or streamed differentials, their homology,
// group actions on homology, and the nerve and two-sided bar complexes of
// M-sets.
#pragma once

#include <climits>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "monoext/mset.hpp"
#include "monoext/rank_engine.hpp"
#include "monoext/rep.hpp"
#include "monoext/simplicial.hpp"

namespace monoext {

  inline constexpr std::size_t kDefaultCellCap = 20'000'000;

  // C_d for min_degree <= d <= max_degree().  boundary(d) maps C_d to
  // C_{d-1} with one row per basis cell of C_d; it is null for d equal to
  // min_degree.  A truncated complex only carries its first few chain groups,
  // so homology is determined only through valid_through.
  struct ChainComplex {
    Field field;
    int min_degree = 0;
    std::vector<std::size_t> dims;
    std::vector<std::shared_ptr<RowSource const>> boundaries;
    bool truncated = false;
    int valid_through = INT_MAX;

    [[nodiscard]] int max_degree() const noexcept {
      return min_degree + static_cast<int>(dims.size()) - 1;
    }
    [[nodiscard]] std::size_t dim(int d) const noexcept {
      return d >= min_degree && d <= max_degree() ? dims[static_cast<std::size_t>(d - min_degree)] : 0;
    }
    // Null when d is out of range or d == min_degree.
    [[nodiscard]] RowSource const* boundary(int d) const noexcept {
      return d > min_degree && d <= max_degree() ? boundaries[static_cast<std::size_t>(d - min_degree)].get()
                                                 : nullptr;
    }
  };

  SparseMatrix materialize(RowSource const& src, Field const& field);

  // Checks that consecutive stored boundaries compose to zero, for all
  // differentials with at most max_rows rows.  Returns false on failure.
  bool boundaries_compose_to_zero(ChainComplex const& c, std::size_t max_rows = 200'000);

  struct HomologyDims {
    int lo = 0;
    std::vector<std::size_t> dims;
    // Method used for rank(boundary(d)), keyed by d - lo (size hi - lo + 2).
    std::vector<RankResult> ranks;

    [[nodiscard]] std::size_t at(int d) const {
      return dims.at(static_cast<std::size_t>(d - lo));
    }
  };

  // Dimensions of H_d for lo <= d <= hi.  Throws kTruncation when hi lies
  // beyond valid_through.
  HomologyDims homology(ChainComplex const& c, int lo, int hi);

  // Representatives of a basis of H_d together with a basis of B_d.
  struct HomologyBasis {
    std::vector<Vector> cycles;
    std::vector<Vector> boundaries;
  };

  HomologyBasis homology_basis(ChainComplex const& c, int d);

  // Image of a basis cell under a cellular map; sign 0 means the image is 0.
  struct SignedCell {
    std::uint32_t target = 0;
    int sign = 0;
  };

  // A group acting on a complex by signed permutations of cells.
  // cells(g, d) returns the image of every basis cell of C_d.
  struct ComplexAction {
    std::shared_ptr<GroupTable const> group;
    std::function<std::vector<SignedCell>(std::uint32_t, int)> cells;
  };

  // Checks that the cell map commutes with the boundaries in degrees
  // lo..hi, i.e. d(g c) = g(d c) for every basis cell c of C_d.
  bool is_chain_map(ChainComplex const& c,
                    std::function<std::vector<SignedCell>(int)> const& map,
                    int lo,
                    int hi);

  // The representation of the group on H_d, in the basis given by
  // homology_basis(c, d).  The action is checked to be by chain maps on the
  // generators, and the result is validated as a representation.
  GroupRep g_action_on_homology(ChainComplex const& c, ComplexAction const& action, int d);

  // Simplicial chains of X relative to a subcomplex, optionally augmented by
  // C_{-1} = K (only without a subcomplex).  basis[d] lists indices into
  // X.simplices[d]; position[d] maps back (UINT32_MAX for cells of sub).
  struct SimplicialChains {
    ChainComplex complex;
    SimplicialComplex space;
    std::vector<std::vector<std::uint32_t>> basis;
    std::vector<std::vector<std::uint32_t>> position;
  };

  SimplicialChains simplicial_chains(SimplicialComplex x,
                                     SimplicialComplex const* sub,
                                     Field const& field,
                                     bool augmented);

  // Image of the basis cells of C_d under the simplicial map induced by a
  // vertex map.  Degenerate images and images inside the subcomplex are 0.
  std::vector<SignedCell> simplicial_cell_map(SimplicialChains const& s,
                                              std::vector<std::uint32_t> const& vertex_map,
                                              int d);

  // vertex_maps[g][v] is the image of vertex v under g.
  ComplexAction simplicial_action(std::shared_ptr<SimplicialChains const> s,
                                  std::shared_ptr<GroupTable const> group,
                                  std::vector<std::vector<std::uint32_t>> vertex_maps);

  // Two-sided bar complex B(X, M, Y) of a right M-set X and a left M-set Y,
  // normalized (entries from M without the identity), relative to an
  // M-invariant subset of X.  B_q has basis (X \ sub) x (M \ 1)^q x Y and
  //
  //   d(x, m_q..m_1, y) = (x, m_q..m_2, m_1 y)
  //                     + sum_{i=1}^{q-1} (-1)^i (x, .., m_{i+1} m_i, .., y)
  //                     + (-1)^q (x m_q, m_{q-1}..m_1, y),
  //
  // where terms with an identity entry or with a first coordinate in sub
  // vanish.  Cells are indexed by ((x' B^q) + t) |Y| + y with B = |M| - 1,
  // x' the position of x in X \ sub and t = sum (m_k - 1) B^(k-1).
  struct BarSpec {
    std::shared_ptr<FiniteMonoid const> monoid;
    RightMSet x;
    LeftMSet y;
    std::vector<char> sub;  // empty means no subset
    bool augmented = false;
  };

  class BarLayout {
   public:
    explicit BarLayout(BarSpec spec);

    [[nodiscard]] BarSpec const& spec() const noexcept {
      return _spec;
    }
    [[nodiscard]] std::size_t cells(int q) const;
    [[nodiscard]] std::size_t base() const noexcept {
      return _base;
    }
    // Position of x in X \ sub, or UINT32_MAX.
    [[nodiscard]] std::uint32_t x_position(std::uint32_t x) const {
      return _xpos[x];
    }
    [[nodiscard]] std::uint32_t x_at(std::uint32_t pos) const {
      return _xs[pos];
    }
    [[nodiscard]] std::size_t x_count() const noexcept {
      return _xs.size();
    }

    // Calls emit(entries) for every cell of B_q in index order, entries
    // holding (column, +1 or -1) of the boundary (possibly repeated).
    void boundary_rows(int q, std::function<void(std::vector<std::pair<std::uint32_t, int>>&)> const& emit) const;

   private:
    BarSpec _spec;
    std::size_t _base = 0;
    std::vector<std::uint32_t> _xpos;
    std::vector<std::uint32_t> _xs;
  };

  // Builds B_0..B_{max_degree} with streamed boundaries.  Throws kCapExceeded
  // when a chain group would exceed cell_cap cells.  Homology is valid
  // through max_degree - 1.
  ChainComplex bar_chain_complex(std::shared_ptr<BarLayout const> layout,
                                 Field const& field,
                                 int max_degree,
                                 std::size_t cell_cap = kDefaultCellCap);

  // Nerve of the category of elements of a right M-set: B(X, M, pt).
  std::shared_ptr<BarLayout const> nerve_layout(std::shared_ptr<FiniteMonoid const> m,
                                                RightMSet x,
                                                std::vector<char> sub = {},
                                                bool augmented = false);

  // Action of automorphisms of X (commuting with M and preserving sub) on
  // the first coordinate.  x_maps[g][x] is the image of x.
  ComplexAction bar_x_action(std::shared_ptr<BarLayout const> layout,
                             std::shared_ptr<GroupTable const> group,
                             std::vector<std::vector<std::uint32_t>> x_maps);

}  // namespace monoext
