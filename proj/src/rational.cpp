#include "sexp/rational.hpp"

#include <cctype>
#include <ostream>

#include "sexp/error.hpp"

namespace sexp {

  std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
      case ErrorCode::NonSymmetric: return "NonSymmetric";
      case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
      case ErrorCode::SingularMatrix: return "SingularMatrix";
      case ErrorCode::NotAntisymmetric: return "NotAntisymmetric";
      case ErrorCode::UnknownName: return "UnknownName";
      case ErrorCode::NotSemigroup: return "NotSemigroup";
      case ErrorCode::NoZeroElement: return "NoZeroElement";
      case ErrorCode::MalformedPartition: return "MalformedPartition";
      case ErrorCode::ResonanceFailed: return "ResonanceFailed";
      case ErrorCode::NotInvariantBase: return "NotInvariantBase";
      case ErrorCode::InvalidCounts: return "InvalidCounts";
      case ErrorCode::IllDefinedAngle: return "IllDefinedAngle";
      case ErrorCode::UnconstrainedSource: return "UnconstrainedSource";
      case ErrorCode::PlanOutOfBounds: return "PlanOutOfBounds";
      case ErrorCode::NoCertificate: return "NoCertificate";
      case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
  }

  namespace {
    bool is_integer_literal(std::string_view s) {
      if (s.empty()) {
        return false;
      }
      std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
      if (i == s.size()) {
        return false;
      }
      for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
          return false;
        }
      }
      return true;
    }

    mpz_class parse_integer(std::string_view s) {
      if (!is_integer_literal(s)) {
        throw Error(ErrorCode::ParseError,
                    "not an integer: '" + std::string(s) + "'");
      }
      if (s[0] == '+') {
        s.remove_prefix(1);
      }
      return mpz_class(std::string(s), 10);
    }
  }  // namespace

  Rational::Rational(long num, long den) {
    if (den == 0) {
      throw Error(ErrorCode::SingularMatrix, "zero denominator");
    }
    _value = mpq_class(num, 1);
    _value /= den;
    _value.canonicalize();
  }

  Rational Rational::from_strings(std::string_view num, std::string_view den) {
    mpz_class n = parse_integer(num);
    mpz_class d = parse_integer(den);
    if (d == 0) {
      throw Error(ErrorCode::ParseError, "zero denominator");
    }
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(std::move(q));
  }

  Rational Rational::parse(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
      text.remove_prefix(1);
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
      text.remove_suffix(1);
    }
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
      return Rational(mpq_class(parse_integer(text)));
    }
    return from_strings(text.substr(0, slash), text.substr(slash + 1));
  }

  bool Rational::fits_long() const noexcept {
    return _value.get_num().fits_slong_p() && _value.get_den().fits_slong_p();
  }

  std::string Rational::numerator_string() const {
    return _value.get_num().get_str();
  }

  std::string Rational::denominator_string() const {
    return _value.get_den().get_str();
  }

  std::string Rational::to_string() const {
    return _value.get_str();
  }

  long Rational::to_long() const {
    return _value.get_num().get_si();
  }

  Rational& Rational::operator/=(Rational const& o) {
    if (o.is_zero()) {
      throw Error(ErrorCode::SingularMatrix, "division by zero");
    }
    _value /= o._value;
    return *this;
  }

  std::ostream& operator<<(std::ostream& os, Rational const& r) {
    return os << r.to_string();
  }

}  // namespace sexp
