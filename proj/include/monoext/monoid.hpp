// Finite monoids given by a complete multiplication table.
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace monoext {

  using Element = std::uint32_t;

  struct MonoidOptions {
    // Largest monoid any builder or parser accepts.
    std::size_t size_cap = 5000;
    // Associativity is checked on all triples up to this size, and on
    // 10 * size^2 random triples above it.
    std::size_t exhaustive_associativity_limit = 256;
    std::uint64_t seed = 0x6d6f6e6fULL;
  };

  // Elements are 0..size()-1 and the identity is always element 0.
  class FiniteMonoid {
   public:
    FiniteMonoid() = default;

    // Validates the identity and associativity.  If identity != 0, the
    // labels of elements 0 and identity are swapped so that the identity
    // becomes element 0.
    static FiniteMonoid from_table(std::vector<std::vector<Element>> const& table,
                                   Element identity,
                                   std::vector<std::string> labels = {},
                                   MonoidOptions const& options = {});

    // For builders whose tables are associative by construction.  The
    // identity must already be element 0.
    static FiniteMonoid trusted(std::size_t size,
                                std::vector<Element> table,
                                std::vector<std::string> labels);

    [[nodiscard]] std::size_t size() const noexcept {
      return _size;
    }
    [[nodiscard]] Element identity() const noexcept {
      return 0;
    }
    [[nodiscard]] Element mul(Element a, Element b) const noexcept {
      return _table[static_cast<std::size_t>(a) * _size + b];
    }
    [[nodiscard]] std::string const& label(Element a) const {
      return _labels[a];
    }
    [[nodiscard]] std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }
    [[nodiscard]] std::vector<std::vector<Element>> table_rows() const;

    [[nodiscard]] bool is_idempotent(Element e) const noexcept {
      return mul(e, e) == e;
    }
    [[nodiscard]] std::vector<Element> idempotents() const;

    // Greedy generating set: scan elements in index order and keep those
    // not generated by the previously kept ones.
    [[nodiscard]] std::vector<Element> generators() const;

    // The opposite monoid: same elements, a *op b = b a.
    [[nodiscard]] FiniteMonoid opposite() const;

    // Sorted right ideal xM, left ideal Mx and two-sided ideal MxM.
    [[nodiscard]] std::vector<Element> right_ideal(Element x) const;
    [[nodiscard]] std::vector<Element> left_ideal(Element x) const;
    [[nodiscard]] std::vector<Element> two_sided_ideal(Element x) const;

    // Elements with a two-sided inverse.
    [[nodiscard]] std::vector<Element> units() const;
    [[nodiscard]] bool is_unit(Element a) const;

    bool operator==(FiniteMonoid const& other) const {
      return _size == other._size && _table == other._table;
    }

   private:
    std::size_t _size = 0;
    std::vector<Element> _table;
    std::vector<std::string> _labels;
  };

  // Checks that a map between monoids preserves products and the identity.
  bool is_homomorphism(FiniteMonoid const& from,
                       FiniteMonoid const& to,
                       std::vector<Element> const& map);

}  // namespace monoext
