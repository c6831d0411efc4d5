// Constructions of concrete monoids.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "monoext/monoid.hpp"

namespace monoext {

  // Arithmetic in GF(q), q = p^k.  Elements are 0..q-1 encoding polynomials
  // over F_p in base p; 0 and 1 are the field's zero and one.
  class GaloisField {
   public:
    explicit GaloisField(std::uint32_t q);

    [[nodiscard]] std::uint32_t order() const noexcept {
      return _q;
    }
    [[nodiscard]] std::uint32_t characteristic() const noexcept {
      return _p;
    }
    [[nodiscard]] std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
      return _add[a * _q + b];
    }
    [[nodiscard]] std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
      return _mul[a * _q + b];
    }
    // A generator of the multiplicative group.
    [[nodiscard]] std::uint32_t primitive_element() const noexcept {
      return _primitive;
    }

   private:
    std::uint32_t _q, _p, _k;
    std::uint32_t _primitive = 1;
    std::vector<std::uint32_t> _add, _mul;
  };

  // Monoid generated by transformations of {0..degree-1} under
  // composition: (f g)(i) = f(g(i)), so functions act on the left.
  FiniteMonoid transformation_monoid(std::size_t degree,
                                     std::vector<std::vector<std::uint32_t>> const& gens,
                                     MonoidOptions const& options = {});

  // Full transformation monoid T_n.
  FiniteMonoid full_transformation_monoid(std::size_t n, MonoidOptions const& options = {});

  // All n x n matrices over GF(q) under matrix multiplication.
  FiniteMonoid matrix_monoid(std::size_t n, std::uint32_t q, MonoidOptions const& options = {});

  // Affine maps x -> A x + b of GF(q)^n with A arbitrary.
  FiniteMonoid affine_monoid(std::size_t n, std::uint32_t q, MonoidOptions const& options = {});

  // The projection Aff(n,q) -> M_n(F_q), (A, b) -> A, as an index map
  // between affine_monoid(n,q) and matrix_monoid(n,q).
  std::vector<Element> affine_linear_part(std::size_t n, std::uint32_t q,
                                          MonoidOptions const& options = {});

  // Small named monoids used as test cases.
  // {1, 0} under multiplication.
  FiniteMonoid two_element_semilattice();
  // {1, x, 0} with x^2 = 0.
  FiniteMonoid nilpotent_monoid();
  // The 2 x 2 rectangular band {(i, j)} with (i,j)(k,l) = (i,l), with an
  // identity and a zero adjoined: a regular band of order 6.
  FiniteMonoid rectangular_band_monoid();
  // Z/n as a monoid (element k is the residue k).
  FiniteMonoid cyclic_group_monoid(std::size_t n);

  // A normalized crossed system: alpha[n] is an endomorphism of the base
  // (index map) and cocycle[n1 * |N| + n2] = c(n1, n2) in the base.
  struct CrossedSystem {
    FiniteMonoid base;
    FiniteMonoid acting;
    std::vector<std::vector<Element>> alpha;
    std::vector<Element> cocycle;

    // Trivial cocycle (semidirect product).
    static CrossedSystem semidirect(FiniteMonoid base,
                                    FiniteMonoid acting,
                                    std::vector<std::vector<Element>> alpha);
  };

  // Throws Error(kCrossedAxiom) naming the failed axiom and witness.
  void validate_crossed_system(CrossedSystem const& sys);

  // M x_{alpha,c} N on M x N with element (m, n) at index n |M| + m and
  // (m1,n1)(m2,n2) = (m1 alpha_{n1}(m2) c(n1,n2), n1 n2).
  FiniteMonoid crossed_product(CrossedSystem const& sys, MonoidOptions const& options = {});

  // Index map of the projection M x N -> N.
  std::vector<Element> crossed_projection(CrossedSystem const& sys);

}  // namespace monoext
