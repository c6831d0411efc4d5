// Matrix representations of finite groups and monoids.
#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "monoext/group.hpp"
#include "monoext/matrix.hpp"
#include "monoext/monoid.hpp"

namespace monoext {

  // rho[g] is the matrix of group element g; validated on construction
  // (identity, invertibility via multiplicativity, correct sizes).
  class GroupRep {
   public:
    GroupRep() = default;

    static GroupRep make(std::shared_ptr<GroupTable const> group,
                         Field field,
                         std::size_t dim,
                         std::vector<Matrix> rho);

    static GroupRep trivial(std::shared_ptr<GroupTable const> group, Field field);

    // Permutation representation of a G-set: perm[g][x] = g x.
    static GroupRep permutation(std::shared_ptr<GroupTable const> group,
                                Field field,
                                std::vector<std::vector<std::uint32_t>> const& perm);

    [[nodiscard]] GroupTable const& group() const {
      return *_group;
    }
    [[nodiscard]] std::shared_ptr<GroupTable const> const& group_ptr() const {
      return _group;
    }
    [[nodiscard]] Field const& field() const noexcept {
      return _field;
    }
    [[nodiscard]] std::size_t dim() const noexcept {
      return _dim;
    }
    [[nodiscard]] Matrix const& rho(std::uint32_t g) const {
      return _rho[g];
    }
    [[nodiscard]] std::vector<Matrix> const& matrices() const noexcept {
      return _rho;
    }

   private:
    std::shared_ptr<GroupTable const> _group;
    Field _field;
    std::size_t _dim = 0;
    std::vector<Matrix> _rho;
  };

  // A left KM-module.  rho[m] is the matrix of monoid element m.
  class MonRep {
   public:
    MonRep() = default;

    // Checks rho(1) = I and rho(ab) = rho(a) rho(b): on all pairs when
    // |M| <= kExhaustiveCheckLimit, on all pairs (generator, element)
    // otherwise (which implies the full identity by induction on word length).
    static MonRep make(std::shared_ptr<FiniteMonoid const> monoid,
                       Field field,
                       std::size_t dim,
                       std::vector<Matrix> rho);

    static constexpr std::size_t kExhaustiveCheckLimit = 64;

    [[nodiscard]] FiniteMonoid const& monoid() const {
      return *_monoid;
    }
    [[nodiscard]] std::shared_ptr<FiniteMonoid const> const& monoid_ptr() const {
      return _monoid;
    }
    [[nodiscard]] Field const& field() const noexcept {
      return _field;
    }
    [[nodiscard]] std::size_t dim() const noexcept {
      return _dim;
    }
    [[nodiscard]] Matrix const& rho(Element m) const {
      return _rho[m];
    }
    [[nodiscard]] std::vector<Matrix> const& matrices() const noexcept {
      return _rho;
    }

    // True when every element acts invertibly, i.e. the module is
    // inflated from the group completion.
    [[nodiscard]] bool is_invertible() const;

   private:
    std::shared_ptr<FiniteMonoid const> _monoid;
    Field _field;
    std::size_t _dim = 0;
    std::vector<Matrix> _rho;
  };

}  // namespace monoext
