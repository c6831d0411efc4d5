// Error type shared by all monoext modules.
#pragma once

#include <stdexcept>
#include <string>

namespace monoext {

  // Machine readable failure categories.  The CLI maps every code to a
  // stable string and an exit status.
  enum class ErrorCode {
    kSchema,
    kInvalidArgument,
    kNotAssociative,
    kNotIdentity,
    kCrossedAxiom,
    kSizeCap,
    kNotIdempotent,
    kNotRegular,
    kFieldMismatch,
    kDimensionMismatch,
    kGroupMismatch,
    kNotHomomorphism,
    kNotInvariant,
    kNotSubcomplex,
    kNotChainMap,
    kTruncation,
    kCapExceeded,
    kBadCharacteristic,
    kNotInvertible,
    kHypothesis,
    kMinimalIdeal
  };

  char const* error_code_name(ErrorCode code) noexcept;

  class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, std::string const& message)
        : std::runtime_error(message), _code(code) {}

    [[nodiscard]] ErrorCode code() const noexcept {
      return _code;
    }

    [[nodiscard]] char const* code_name() const noexcept {
      return error_code_name(_code);
    }

   private:
    ErrorCode _code;
  };

  // Throws Error(code, message) unless cond holds.
  inline void require(bool cond, ErrorCode code, std::string const& message) {
    if (!cond) {
      throw Error(code, message);
    }
  }

}  // namespace monoext
