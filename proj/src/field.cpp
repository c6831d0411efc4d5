#include "monoext/field.hpp"

#include "monoext/error.hpp"

namespace monoext {

  char const* error_code_name(ErrorCode code) noexcept {
    switch (code) {
      case ErrorCode::kSchema:
        return "schema";
      case ErrorCode::kInvalidArgument:
        return "invalid_argument";
      case ErrorCode::kNotAssociative:
        return "not_associative";
      case ErrorCode::kNotIdentity:
        return "not_identity";
      case ErrorCode::kCrossedAxiom:
        return "crossed_axiom";
      case ErrorCode::kSizeCap:
        return "size_cap";
      case ErrorCode::kNotIdempotent:
        return "not_idempotent";
      case ErrorCode::kNotRegular:
        return "not_regular";
      case ErrorCode::kFieldMismatch:
        return "field_mismatch";
      case ErrorCode::kDimensionMismatch:
        return "dimension_mismatch";
      case ErrorCode::kGroupMismatch:
        return "group_mismatch";
      case ErrorCode::kNotHomomorphism:
        return "not_homomorphism";
      case ErrorCode::kNotInvariant:
        return "not_invariant";
      case ErrorCode::kNotSubcomplex:
        return "not_subcomplex";
      case ErrorCode::kNotChainMap:
        return "not_chain_map";
      case ErrorCode::kTruncation:
        return "truncation";
      case ErrorCode::kCapExceeded:
        return "cap_exceeded";
      case ErrorCode::kBadCharacteristic:
        return "bad_characteristic";
      case ErrorCode::kNotInvertible:
        return "not_invertible";
      case ErrorCode::kHypothesis:
        return "hypothesis";
      case ErrorCode::kMinimalIdeal:
        return "minimal_ideal";
    }
    return "unknown";
  }

  bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) {
      return false;
    }
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        return false;
      }
    }
    return true;
  }

  std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
    // Extended Euclid on signed 64-bit values.
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p, new_r = a % p;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      std::int64_t tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    if (r != 1) {
      throw Error(ErrorCode::kInvalidArgument, "element is not invertible modulo p");
    }
    if (t < 0) {
      t += p;
    }
    return static_cast<std::uint32_t>(t);
  }

  bool reduce_mod(Rational const& x, std::uint32_t p, std::uint32_t& out) {
    std::uint32_t den = static_cast<std::uint32_t>(mpz_fdiv_ui(x.get_den_mpz_t(), p));
    if (den == 0) {
      return false;
    }
    std::uint32_t num = static_cast<std::uint32_t>(mpz_fdiv_ui(x.get_num_mpz_t(), p));
    if (den == 1) {
      out = num;
    } else {
      out = static_cast<std::uint32_t>(
          (static_cast<std::uint64_t>(num) * mod_inverse(den, p)) % p);
    }
    return true;
  }

  Field Field::prime(std::uint32_t p) {
    require(p < (1u << 31) && is_prime(p),
            ErrorCode::kInvalidArgument,
            "field characteristic must be a prime below 2^31, got " + std::to_string(p));
    return Field(p);
  }

  Field Field::parse(std::string const& text) {
    if (text == "q" || text == "Q") {
      return rational();
    }
    if (text.size() > 2 && (text[0] == 'p' || text[0] == 'P') && text[1] == ':') {
      unsigned long value = 0;
      try {
        std::size_t used = 0;
        value = std::stoul(text.substr(2), &used);
        if (used != text.size() - 2) {
          throw std::invalid_argument("trailing characters");
        }
      } catch (std::exception const&) {
        throw Error(ErrorCode::kSchema, "cannot parse field \"" + text + "\"");
      }
      return prime(static_cast<std::uint32_t>(value));
    }
    throw Error(ErrorCode::kSchema, "field must be \"q\" or \"p:P\", got \"" + text + "\"");
  }

  std::string Field::to_string() const {
    return _p == 0 ? std::string("q") : "p:" + std::to_string(_p);
  }

  Rational Field::normalize(Rational const& x) const {
    if (_p == 0) {
      return x;
    }
    std::uint32_t out = 0;
    if (!reduce_mod(x, _p, out)) {
      throw Error(ErrorCode::kFieldMismatch,
                  "scalar " + x.get_str() + " has a denominator divisible by "
                      + std::to_string(_p));
    }
    return Rational(out);
  }

  Rational Field::from_int(long value) const {
    return normalize(Rational(value));
  }

  Rational Field::add(Rational const& a, Rational const& b) const {
    return _p == 0 ? Rational(a + b) : normalize(a + b);
  }

  Rational Field::sub(Rational const& a, Rational const& b) const {
    return _p == 0 ? Rational(a - b) : normalize(a - b);
  }

  Rational Field::mul(Rational const& a, Rational const& b) const {
    return _p == 0 ? Rational(a * b) : normalize(a * b);
  }

  Rational Field::neg(Rational const& a) const {
    return _p == 0 ? Rational(-a) : normalize(-a);
  }

  Rational Field::inv(Rational const& a) const {
    require(sgn(a) != 0, ErrorCode::kInvalidArgument, "division by zero");
    if (_p == 0) {
      return Rational(1) / a;
    }
    std::uint32_t v = static_cast<std::uint32_t>(a.get_num().get_ui());
    return Rational(mod_inverse(v, _p));
  }

  Rational Field::parse_scalar(std::string const& text) const {
    Rational x;
    if (text.empty() || x.set_str(text, 10) != 0) {
      throw Error(ErrorCode::kSchema, "cannot parse scalar \"" + text + "\"");
    }
    if (sgn(x.get_den()) == 0) {
      throw Error(ErrorCode::kSchema, "zero denominator in scalar \"" + text + "\"");
    }
    x.canonicalize();
    return normalize(x);
  }

  std::string Field::scalar_to_string(Rational const& x) const {
    return x.get_str();
  }

}  // namespace monoext
