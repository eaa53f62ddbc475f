#ifndef SEXP_RATLIN_HPP_
#define SEXP_RATLIN_HPP_

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <vector>

#include "sexp/rational.hpp"

namespace sexp {

  using RatVector = std::vector<Rational>;

  //! Dense row-major matrix of rationals.
  class RatMatrix {
   public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols)
        : _rows(rows), _cols(cols), _entries(rows * cols) {}
    RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static RatMatrix identity(std::size_t n);
    static RatMatrix from_rows(std::vector<RatVector> const& rows);
    static RatMatrix from_columns(std::vector<RatVector> const& columns,
                                  std::size_t rows);
    static RatMatrix diagonal(RatVector const& d);

    std::size_t rows() const noexcept {
      return _rows;
    }
    std::size_t cols() const noexcept {
      return _cols;
    }
    bool is_square() const noexcept {
      return _rows == _cols;
    }
    bool is_symmetric() const;
    bool is_zero() const;

    Rational& operator()(std::size_t r, std::size_t c) {
      return _entries[r * _cols + c];
    }
    Rational const& operator()(std::size_t r, std::size_t c) const {
      return _entries[r * _cols + c];
    }

    RatVector row(std::size_t r) const;
    RatVector column(std::size_t c) const;
    RatMatrix transpose() const;

    friend bool operator==(RatMatrix const&, RatMatrix const&) = default;
    friend RatMatrix operator+(RatMatrix const& a, RatMatrix const& b);
    friend RatMatrix operator-(RatMatrix const& a, RatMatrix const& b);
    friend RatMatrix operator*(RatMatrix const& a, RatMatrix const& b);
    friend RatMatrix operator*(Rational const& s, RatMatrix const& a);
    friend RatVector operator*(RatMatrix const& a, RatVector const& v);

   private:
    std::size_t _rows = 0;
    std::size_t _cols = 0;
    std::vector<Rational> _entries;
  };

  std::ostream& operator<<(std::ostream& os, RatMatrix const& m);

  //! Sylvester inertia (n+, n-, n0) of a symmetric matrix.
  struct InertiaSignature {
    std::size_t n_plus = 0;
    std::size_t n_minus = 0;
    std::size_t n_zero = 0;

    std::size_t dim() const noexcept {
      return n_plus + n_minus + n_zero;
    }
    std::size_t rank() const noexcept {
      return n_plus + n_minus;
    }
    long character() const noexcept {
      return static_cast<long>(n_plus) - static_cast<long>(n_minus);
    }

    friend bool operator==(InertiaSignature const&,
                           InertiaSignature const&) = default;
  };

  std::ostream& operator<<(std::ostream& os, InertiaSignature const& s);

  //! Inertia of a symmetric rational matrix by symmetric congruence
  //! elimination. Pivots on the first nonzero diagonal entry; if the remaining
  //! diagonal is zero, the congruence e_i <- e_i + e_j exposes 2 a_ij on the
  //! diagonal. Throws Error(NonSymmetric) if M != M^T.
  InertiaSignature exact_inertia(RatMatrix const& m);

  //! Reduced row echelon form; `pivots` receives the pivot column of each
  //! nonzero row.
  RatMatrix reduced_row_echelon(RatMatrix m, std::vector<std::size_t>& pivots);

  std::size_t rational_rank(RatMatrix const& m);

  //! Basis of the right null space, one vector per free column of the reduced
  //! echelon form, in increasing column order. Each vector is scaled so that
  //! its first nonzero entry is positive.
  std::vector<RatVector> kernel_basis(RatMatrix const& m);

  //! Throws Error(SingularMatrix) when m is not square or not invertible.
  RatMatrix inverse(RatMatrix const& m);

  Rational determinant(RatMatrix const& m);

  RatMatrix kronecker(RatMatrix const& a, RatMatrix const& b);

  struct IntegerEigenspace {
    long eigenvalue;
    std::vector<RatVector> basis;
  };

  //! Integer eigenvalues t in [-bound, bound] with their eigenspaces, sorted
  //! by t. Only meaningful for integral square matrices.
  std::vector<IntegerEigenspace> integer_eigen_spectrum(RatMatrix const& m,
                                                        long bound);

  Rational dot(RatVector const& a, RatVector const& b);

}  // namespace sexp

#endif  // SEXP_RATLIN_HPP_
