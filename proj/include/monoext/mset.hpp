// Finite right and left M-sets.
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "monoext/monoid.hpp"

namespace monoext {

  // A right M-set: apply(x, m) = x m.
  class RightMSet {
   public:
    RightMSet() = default;

    // act[x * |M| + m] = x m.  Validates x 1 = x and (x a) b = x (a b).
    static RightMSet make(FiniteMonoid const& m,
                          std::size_t size,
                          std::vector<std::uint32_t> act,
                          std::vector<std::string> labels = {});

    [[nodiscard]] std::size_t size() const noexcept {
      return _size;
    }
    [[nodiscard]] std::size_t monoid_size() const noexcept {
      return _msize;
    }
    [[nodiscard]] std::uint32_t apply(std::uint32_t x, Element m) const noexcept {
      return _act[static_cast<std::size_t>(x) * _msize + m];
    }
    [[nodiscard]] std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }

   private:
    std::size_t _size = 0;
    std::size_t _msize = 0;
    std::vector<std::uint32_t> _act;
    std::vector<std::string> _labels;
  };

  // A left M-set: apply(m, x) = m x.
  class LeftMSet {
   public:
    LeftMSet() = default;

    // act[x * |M| + m] = m x.  Validates 1 x = x and a (b x) = (a b) x.
    static LeftMSet make(FiniteMonoid const& m,
                         std::size_t size,
                         std::vector<std::uint32_t> act,
                         std::vector<std::string> labels = {});

    [[nodiscard]] std::size_t size() const noexcept {
      return _size;
    }
    [[nodiscard]] std::size_t monoid_size() const noexcept {
      return _msize;
    }
    [[nodiscard]] std::uint32_t apply(Element m, std::uint32_t x) const noexcept {
      return _act[static_cast<std::size_t>(x) * _msize + m];
    }
    [[nodiscard]] std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }

   private:
    std::size_t _size = 0;
    std::size_t _msize = 0;
    std::vector<std::uint32_t> _act;
    std::vector<std::string> _labels;
  };

  // The one-point M-sets.
  RightMSet right_point(FiniteMonoid const& m);
  LeftMSet left_point(FiniteMonoid const& m);

  // U(M) with right (resp. left) multiplication.
  RightMSet right_regular(FiniteMonoid const& m);
  LeftMSet left_regular(FiniteMonoid const& m);

  // A subset R of M closed under right multiplication, as a right M-set on
  // the positions of `elements` (which must be sorted).  Throws
  // Error(kNotInvariant) if R M is not inside R.
  RightMSet right_ideal_mset(FiniteMonoid const& m, std::vector<Element> const& elements);

  // N viewed as a right / left M-set through a homomorphism phi: M -> N.
  RightMSet right_via(FiniteMonoid const& m, FiniteMonoid const& n, std::vector<Element> const& phi);
  LeftMSet left_via(FiniteMonoid const& m, FiniteMonoid const& n, std::vector<Element> const& phi);

  // Orbit quotient X / ~ where the classes are preserved by the action.
  // class_of[x] is the class id (0-based, dense).  Throws kNotInvariant if
  // the action is not well defined on classes.
  RightMSet quotient_mset(FiniteMonoid const& m,
                          RightMSet const& x,
                          std::vector<std::uint32_t> const& class_of);

  // True when the subset (membership mask) is closed under the action.
  bool is_invariant(RightMSet const& x, std::vector<char> const& subset);
  bool is_invariant(LeftMSet const& x, std::vector<char> const& subset);

}  // namespace monoext
