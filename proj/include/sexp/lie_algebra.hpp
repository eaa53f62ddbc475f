#ifndef SEXP_LIE_ALGEBRA_HPP_
#define SEXP_LIE_ALGEBRA_HPP_

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sexp/ratlin.hpp"

namespace sexp {

  struct Term {
    std::size_t index;
    Rational coeff;

    friend bool operator==(Term const&, Term const&) = default;
  };

  //! Sparse coordinate vector: terms sorted by index, no zero coefficients.
  using SparseVector = std::vector<Term>;

  SparseVector sparse_from_dense(RatVector const& v);
  RatVector dense_from_sparse(SparseVector const& v, std::size_t dim);
  //! acc += s * v
  void axpy(SparseVector& acc, Rational const& s, SparseVector const& v);

  //! Finite-dimensional Lie algebra given by exact structure constants
  //! [X_i, X_j] = C_ij^k X_k. Only brackets with i < j are stored; the rest
  //! follow from antisymmetry.
  class LieAlgebra {
   public:
    LieAlgebra() = default;
    explicit LieAlgebra(std::size_t dim, std::string name = {});
    LieAlgebra(std::string name, std::vector<std::string> generator_names);

    std::size_t dim() const noexcept {
      return _dim;
    }
    std::string const& name() const noexcept {
      return _name;
    }
    void set_name(std::string name) {
      _name = std::move(name);
    }
    std::vector<std::string> const& generator_names() const noexcept {
      return _generator_names;
    }

    //! Sets [X_i, X_j]. For i > j the negated terms are stored under (j, i).
    //! Throws Error(IndexOutOfRange) on indices outside [0, dim) or on i == j
    //! with a nonzero right-hand side.
    void set_bracket(std::size_t i, std::size_t j, SparseVector terms);
    void add_constant(std::size_t i, std::size_t j, std::size_t k,
                      Rational const& value);

    //! [X_i, X_j] as a sparse vector.
    SparseVector bracket(std::size_t i, std::size_t j) const;
    //! Bracket of two general elements in generator coordinates.
    SparseVector bracket(SparseVector const& x, SparseVector const& y) const;
    //! C_ij^k
    Rational constant(std::size_t i, std::size_t j, std::size_t k) const;

    //! Stored (i < j) bracket, no copy.
    SparseVector const& stored_bracket(std::size_t i, std::size_t j) const {
      return _brackets[pair_index(i, j)];
    }

    bool is_abelian() const;
    std::size_t stored_entry_count() const;

    //! Equality of dimension and structure constants; names are ignored.
    bool same_constants(LieAlgebra const& other) const;

   private:
    std::size_t pair_index(std::size_t i, std::size_t j) const noexcept {
      // i < j
      return i * _dim - i * (i + 1) / 2 + (j - i - 1);
    }
    void check_index(std::size_t i) const;

    std::size_t _dim = 0;
    std::string _name;
    std::vector<std::string> _generator_names;
    std::vector<SparseVector> _brackets;
  };

  //! Full (i, j, k) -> value tensor as supplied by an external source, before
  //! antisymmetry has been established.
  struct StructureTensor {
    std::size_t dim = 0;
    std::map<std::array<std::size_t, 3>, Rational> entries;
  };

  struct ValidationReport {
    bool ok = true;
    std::string message;
    //! First (i, j, k, r) whose Jacobi sum is nonzero.
    std::optional<std::array<std::size_t, 4>> jacobi_witness;
    //! First (i, j, k) with C_ij^k != -C_ji^k.
    std::optional<std::array<std::size_t, 3>> antisymmetry_witness;
  };

  //! Jacobi identity over all generator triples.
  ValidationReport validate_algebra(LieAlgebra const& algebra);
  //! Antisymmetry, then Jacobi. Throws Error(IndexOutOfRange) for indices
  //! outside [0, dim).
  ValidationReport validate_tensor(StructureTensor const& tensor);
  //! Throws Error(NotAntisymmetric) if the tensor is not antisymmetric.
  LieAlgebra algebra_from_tensor(StructureTensor const& tensor,
                                 std::string name = {});
  //! Throws Error(NotAntisymmetric) carrying the report message when the
  //! Jacobi identity fails.
  void require_valid(LieAlgebra const& algebra);

  //! so(n) on the basis T_ab (a < b), ordered lexicographically.
  LieAlgebra special_orthogonal(std::size_t n);
  //! so(p, q) with metric diag(+1 x p, -1 x q); so(n, 0) is so(n).
  LieAlgebra indefinite_orthogonal(std::size_t p, std::size_t q);
  //! sl(2) on (h, e, f).
  LieAlgebra sl2();
  //! Heisenberg algebra on (x, y, z) with [x, y] = z.
  LieAlgebra heisenberg3();
  LieAlgebra abelian(std::size_t n);

  //! Resolves "so(n)" / "soN" (3 <= n <= 16), "so(p,q)", "sl2", "heisenberg3",
  //! "abelian(n)" / "abelianN", and "+"-separated direct sums of these.
  //! Throws Error(UnknownName).
  LieAlgebra standard_algebra(std::string const& name);

  struct AdjointMatrix {
    std::size_t generator;
    //! Entry (j, k) = C_ij^k.
    RatMatrix matrix;
  };

  AdjointMatrix adjoint(LieAlgebra const& algebra, std::size_t i);

  //! g_ij = sum_{k,l} C_ik^l C_jl^k.
  RatMatrix killing_form(LieAlgebra const& algebra);

  //! New generators Y_a = sum_i A(i, a) X_i (columns of A). Throws
  //! Error(SingularMatrix) unless A is square and invertible.
  LieAlgebra change_of_basis(LieAlgebra const& algebra, RatMatrix const& a);

  LieAlgebra direct_sum(LieAlgebra const& first, LieAlgebra const& second);

}  // namespace sexp

#endif  // SEXP_LIE_ALGEBRA_HPP_
