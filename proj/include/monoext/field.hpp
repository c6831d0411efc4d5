// Coefficient fields: the rationals and prime fields F_p.
#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace monoext {

  using Rational = mpq_class;

  // A field is either Q (characteristic 0) or F_p for a prime p < 2^31.
  // Scalars are always stored as Rational; over F_p they are kept in the
  // canonical range 0..p-1 with denominator 1.
  class Field {
   public:
    Field() = default;

    static Field rational() {
      return Field();
    }

    static Field prime(std::uint32_t p);

    // Parses "q" or "p:P".
    static Field parse(std::string const& text);

    [[nodiscard]] bool is_rational() const noexcept {
      return _p == 0;
    }

    [[nodiscard]] std::uint32_t characteristic() const noexcept {
      return _p;
    }

    // True when the characteristic does not divide n.
    [[nodiscard]] bool is_good_for(std::uint64_t n) const noexcept {
      return _p == 0 || n % _p != 0;
    }

    [[nodiscard]] std::string to_string() const;

    bool operator==(Field const& other) const noexcept {
      return _p == other._p;
    }

    bool operator!=(Field const& other) const noexcept {
      return _p != other._p;
    }

    // Maps an arbitrary rational into the field; throws if a denominator
    // vanishes modulo p.
    [[nodiscard]] Rational normalize(Rational const& x) const;
    [[nodiscard]] Rational from_int(long value) const;

    [[nodiscard]] Rational add(Rational const& a, Rational const& b) const;
    [[nodiscard]] Rational sub(Rational const& a, Rational const& b) const;
    [[nodiscard]] Rational mul(Rational const& a, Rational const& b) const;
    [[nodiscard]] Rational neg(Rational const& a) const;
    [[nodiscard]] Rational inv(Rational const& a) const;

    // Parses a scalar: "a/b" or an integer literal.
    [[nodiscard]] Rational parse_scalar(std::string const& text) const;
    // "a/b" (or "a") over Q, "0".."p-1" over F_p.
    [[nodiscard]] std::string scalar_to_string(Rational const& x) const;

   private:
    explicit Field(std::uint32_t p) : _p(p) {}
    std::uint32_t _p = 0;
  };

  bool is_prime(std::uint64_t n) noexcept;

  // Modular helpers used by the fast elimination kernels.
  std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p);
  // Reduces x modulo p; returns false if the denominator is divisible by p.
  bool reduce_mod(Rational const& x, std::uint32_t p, std::uint32_t& out);

}  // namespace monoext
