// shiftcat - symbolic dynamics, block codes and Karoubi envelopes
//
// Error type shared by every module.

#ifndef SHIFTCAT_ERRORS_HPP_
#define SHIFTCAT_ERRORS_HPP_

#include <stdexcept>  // for runtime_error
#include <string>     // for string

namespace shiftcat {

  enum class ErrorKind {
    invalid_argument,
    parse,
    alphabet_mismatch,
    empty_shift,
    non_integral_coefficient,
    size_limit,
    unassigned_letter,
    too_short,
    not_idempotent,
    mismatch_bug,
    invalid_arrow,
    diamond_only,
    not_in_mirage2,
    not_idempotent_witness,
    classification_failure,
  };

  inline char const* to_string(ErrorKind kind) noexcept {
    switch (kind) {
      case ErrorKind::invalid_argument:
        return "InvalidArgument";
      case ErrorKind::parse:
        return "ParseError";
      case ErrorKind::alphabet_mismatch:
        return "AlphabetMismatch";
      case ErrorKind::empty_shift:
        return "EmptyShift";
      case ErrorKind::non_integral_coefficient:
        return "NonIntegralCoefficient";
      case ErrorKind::size_limit:
        return "SizeLimit";
      case ErrorKind::unassigned_letter:
        return "UnassignedLetter";
      case ErrorKind::too_short:
        return "TooShort";
      case ErrorKind::not_idempotent:
        return "NotIdempotent";
      case ErrorKind::mismatch_bug:
        return "MismatchBug";
      case ErrorKind::invalid_arrow:
        return "InvalidArrow";
      case ErrorKind::diamond_only:
        return "DiamondOnly";
      case ErrorKind::not_in_mirage2:
        return "NotInMirage2";
      case ErrorKind::not_idempotent_witness:
        return "NotIdempotentWitness";
      case ErrorKind::classification_failure:
        return "ClassificationFailure";
    }
    return "Unknown";
  }

  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what),
          _kind(kind),
          _message(what) {}

    [[nodiscard]] ErrorKind kind() const noexcept {
      return _kind;
    }
    // The message without the kind prefix.
    [[nodiscard]] std::string const& message() const noexcept {
      return _message;
    }

   private:
    ErrorKind   _kind;
    std::string _message;
  };

  namespace detail {
    [[noreturn]] inline void fail(ErrorKind kind, std::string const& what) {
      throw Error(kind, what);
    }

    inline void require(bool cond, ErrorKind kind, std::string const& what) {
      if (!cond) {
        throw Error(kind, what);
      }
    }
  }  // namespace detail

}  // namespace shiftcat

#endif  // SHIFTCAT_ERRORS_HPP_
