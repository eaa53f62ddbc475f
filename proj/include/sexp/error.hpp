#ifndef SEXP_ERROR_HPP_
#define SEXP_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace sexp {

  //! Failure categories raised by the library.
  enum class ErrorCode {
    NonSymmetric,
    IndexOutOfRange,
    SingularMatrix,
    NotAntisymmetric,
    UnknownName,
    NotSemigroup,
    NoZeroElement,
    MalformedPartition,
    ResonanceFailed,
    NotInvariantBase,
    InvalidCounts,
    IllDefinedAngle,
    UnconstrainedSource,
    PlanOutOfBounds,
    NoCertificate,
    ParseError
  };

  std::string_view to_string(ErrorCode code) noexcept;

  class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, std::string const& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what),
          _code(code) {}

    ErrorCode code() const noexcept {
      return _code;
    }

   private:
    ErrorCode _code;
  };

}  // namespace sexp

#endif  // SEXP_ERROR_HPP_
