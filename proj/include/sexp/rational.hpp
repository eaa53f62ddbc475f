#ifndef SEXP_RATIONAL_HPP_
#define SEXP_RATIONAL_HPP_

#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace sexp {

  //! Arbitrary-precision rational number, always stored in lowest terms with
  //! a positive denominator.
  class Rational {
   public:
    Rational() = default;

    template <std::integral T>
    Rational(T n) : _value(static_cast<long>(n)) {}  // NOLINT(runtime/explicit)

    Rational(long num, long den);

    explicit Rational(mpq_class value) : _value(std::move(value)) {
      _value.canonicalize();
    }

    //! Parses "a", "-a" or "a/b"; throws Error(ParseError) on malformed input
    //! and on a zero denominator.
    static Rational parse(std::string_view text);

    //! Builds num/den from decimal strings.
    static Rational from_strings(std::string_view num, std::string_view den);

    int sign() const noexcept {
      return sgn(_value);
    }
    bool is_zero() const noexcept {
      return sgn(_value) == 0;
    }
    bool is_integer() const noexcept {
      return _value.get_den() == 1;
    }
    bool fits_long() const noexcept;

    std::string numerator_string() const;
    std::string denominator_string() const;
    std::string to_string() const;

    //! Numerator when the denominator is one; undefined otherwise.
    long to_long() const;

    mpq_class const& raw() const noexcept {
      return _value;
    }

    Rational operator-() const {
      return Rational(mpq_class(-_value));
    }
    Rational& operator+=(Rational const& o) {
      _value += o._value;
      return *this;
    }
    Rational& operator-=(Rational const& o) {
      _value -= o._value;
      return *this;
    }
    Rational& operator*=(Rational const& o) {
      _value *= o._value;
      return *this;
    }
    //! Throws Error(SingularMatrix) on division by zero.
    Rational& operator/=(Rational const& o);

    friend Rational operator+(Rational a, Rational const& b) {
      return a += b;
    }
    friend Rational operator-(Rational a, Rational const& b) {
      return a -= b;
    }
    friend Rational operator*(Rational a, Rational const& b) {
      return a *= b;
    }
    friend Rational operator/(Rational a, Rational const& b) {
      return a /= b;
    }

    friend bool operator==(Rational const& a, Rational const& b) {
      return a._value == b._value;
    }
    friend std::strong_ordering operator<=>(Rational const& a,
                                            Rational const& b) {
      int c = cmp(a._value, b._value);
      return c < 0 ? std::strong_ordering::less
                   : (c > 0 ? std::strong_ordering::greater
                            : std::strong_ordering::equal);
    }

   private:
    mpq_class _value;
  };

  std::ostream& operator<<(std::ostream& os, Rational const& r);

}  // namespace sexp

#endif  // SEXP_RATIONAL_HPP_
