// Finite groups given by multiplication tables.
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "monoext/monoid.hpp"

namespace monoext {

  // The identity is always index 0.  When the group sits inside a monoid,
  // embedding[g] is the monoid element representing g.
  class GroupTable {
   public:
    GroupTable() = default;

    // Validates the group axioms; identity must be index 0.
    static GroupTable from_table(std::size_t size,
                                 std::vector<std::uint32_t> table,
                                 std::vector<Element> embedding = {});

    // Group generated by permutations of {0..degree-1} (images lists).
    // Elements are numbered identity first, then breadth-first order.
    static GroupTable from_permutations(std::vector<std::vector<std::uint32_t>> const& gens);

    // Cyclic group Z/n with 0 the identity and 1 the generator.
    static GroupTable cyclic(std::size_t n);

    [[nodiscard]] std::size_t size() const noexcept {
      return _size;
    }
    [[nodiscard]] std::uint32_t identity() const noexcept {
      return 0;
    }
    [[nodiscard]] std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
      return _table[static_cast<std::size_t>(a) * _size + b];
    }
    [[nodiscard]] std::uint32_t inv(std::uint32_t a) const noexcept {
      return _inverse[a];
    }
    [[nodiscard]] std::vector<std::uint32_t> const& table() const noexcept {
      return _table;
    }
    [[nodiscard]] std::vector<std::uint32_t> const& inverse() const noexcept {
      return _inverse;
    }
    [[nodiscard]] std::vector<Element> const& embedding() const noexcept {
      return _embedding;
    }
    [[nodiscard]] bool has_embedding() const noexcept {
      return !_embedding.empty();
    }
    // Index of the group element embedded as monoid element m, if any.
    [[nodiscard]] std::optional<std::uint32_t> index_of(Element m) const;

    // Greedy generating set (group closure, index order).
    [[nodiscard]] std::vector<std::uint32_t> generators() const;
    [[nodiscard]] std::size_t order_of(std::uint32_t g) const;

    // Same multiplication table (embeddings ignored).
    [[nodiscard]] bool same_table(GroupTable const& other) const {
      return _size == other._size && _table == other._table;
    }

    bool operator==(GroupTable const& other) const {
      return _size == other._size && _table == other._table && _embedding == other._embedding;
    }

   private:
    std::size_t _size = 0;
    std::vector<std::uint32_t> _table;
    std::vector<std::uint32_t> _inverse;
    std::vector<Element> _embedding;
  };

  // An isomorphism from a onto b (map[i] = image of element i), searched
  // by backtracking over images of a's generators.  Deterministic.
  std::optional<std::vector<std::uint32_t>> find_isomorphism(GroupTable const& a,
                                                             GroupTable const& b);

  bool is_group_homomorphism(GroupTable const& a,
                             GroupTable const& b,
                             std::vector<std::uint32_t> const& map);

}  // namespace monoext
