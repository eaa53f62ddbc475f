#ifndef SEXP_EXPANSION_HPP_
#define SEXP_EXPANSION_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sexp/lie_algebra.hpp"
#include "sexp/semigroup.hpp"

namespace sexp {

  //! S x g with generators (A, alpha) flattened generator-major:
  //! flat = A * P + alpha.
  class ExpandedAlgebra {
   public:
    ExpandedAlgebra(LieAlgebra base, Semigroup semigroup, LieAlgebra algebra)
        : _base(std::move(base)),
          _semigroup(std::move(semigroup)),
          _algebra(std::move(algebra)) {}

    LieAlgebra const& base() const noexcept {
      return _base;
    }
    Semigroup const& semigroup() const noexcept {
      return _semigroup;
    }
    LieAlgebra const& algebra() const noexcept {
      return _algebra;
    }

    std::size_t flat_index(std::size_t generator, std::size_t element) const noexcept {
      return generator * _semigroup.order() + element;
    }
    //! (generator, element)
    std::pair<std::size_t, std::size_t> unflatten(std::size_t flat) const noexcept {
      return {flat / _semigroup.order(), flat % _semigroup.order()};
    }

   private:
    LieAlgebra _base;
    Semigroup _semigroup;
    LieAlgebra _algebra;
  };

  //! C_{(A,a)(B,b)}^{(C,c)} = K_ab^c C_AB^C. Generators are named
  //! "l<alpha+1>*<base name>".
  ExpandedAlgebra s_expand(Semigroup const& s, LieAlgebra const& base);

  RatMatrix expanded_killing(ExpandedAlgebra const& e);

  //! Deletes the generators (A, 0_S) and every bracket component landing on
  //! them. Throws Error(NoZeroElement).
  LieAlgebra zero_reduce(ExpandedAlgebra const& e);
  //! Flat indices of the surviving generators, in order.
  std::vector<std::size_t> zero_reduce_survivors(ExpandedAlgebra const& e);

  struct ResonantDecomposition {
    //! Disjoint subsets V_p of generator indices covering [0, N).
    std::vector<std::vector<std::size_t>> g_partition;
    //! Subsets S_p of element indices; may overlap.
    std::vector<std::vector<std::size_t>> s_partition;
    //! (p, q) -> i(p, q). A pair may be given in either order; a missing
    //! pair means the empty set.
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> bracket_targets;
  };

  struct ResonanceReport {
    bool ok = true;
    std::string message;
  };

  //! Checks [V_p, V_q] within the sum of V_r and S_p S_q within the union of
  //! S_r, r in i(p, q). Throws Error(MalformedPartition).
  ResonanceReport check_resonance(Semigroup const& s, LieAlgebra const& g,
                                  ResonantDecomposition const& d);

  struct ResonantSubalgebra {
    LieAlgebra algebra;
    //! Flat index in s_expand(S, g) of each subalgebra generator.
    std::vector<std::size_t> embedding;
  };

  //! Subalgebra on the union of S_p x V_p. Throws Error(ResonanceFailed) if
  //! the decomposition is not resonant or the span does not close.
  ResonantSubalgebra resonant_subalgebra(Semigroup const& s, LieAlgebra const& g,
                                         ResonantDecomposition const& d);

  //! Index of the product of the listed elements.
  std::size_t n_selector(Semigroup const& s, std::span<const std::size_t> elements);

  //! Dense rank-n tensor over a dim-dimensional space, row-major.
  class Tensor {
   public:
    Tensor() = default;
    Tensor(std::size_t rank, std::size_t dim);
    static Tensor from_matrix(RatMatrix const& m);

    std::size_t rank() const noexcept {
      return _rank;
    }
    std::size_t dim() const noexcept {
      return _dim;
    }
    Rational& at(std::span<const std::size_t> idx);
    Rational const& at(std::span<const std::size_t> idx) const;
    std::vector<Rational> const& data() const noexcept {
      return _data;
    }
    std::vector<Rational>& data() noexcept {
      return _data;
    }
    bool is_zero() const;
    RatMatrix to_matrix() const;

    friend bool operator==(Tensor const&, Tensor const&) = default;

   private:
    std::size_t offset(std::span<const std::size_t> idx) const;
    std::size_t _rank = 0;
    std::size_t _dim = 0;
    std::vector<Rational> _data;
  };

  //! sum over slots of <.., [X_i, X_slot], ..> vanishes for every generator
  //! X_i and index tuple.
  bool is_ad_invariant(LieAlgebra const& g, Tensor const& t);

  //! Invariant tensor on the 0_S-reduced expansion:
  //! <T_(A1,i1) .. T_(An,in)> = alpha_j <T_A1 .. T_An> with j = i1 .. in,
  //! dropping j = 0_S. `alphas` lists alpha_j for the nonzero elements in
  //! increasing index order. Throws Error(NoZeroElement),
  //! Error(NotInvariantBase), Error(InvalidCounts) on a wrong alpha count.
  Tensor expand_invariant_tensor(Semigroup const& s, LieAlgebra const& base,
                                 Tensor const& base_tensor,
                                 std::vector<Rational> const& alphas);

  struct AxiomReport {
    std::size_t samples = 0;
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::string first_failure;
    bool ok() const noexcept {
      return failures == 0;
    }
  };

  constexpr std::uint64_t kDefaultSeed = 20240607;

  //! Bilinearity and symmetry of the expanded Killing product on random
  //! rational coordinate vectors.
  AxiomReport verify_inner_product_axioms(ExpandedAlgebra const& e, std::size_t samples,
                                          std::uint64_t seed = kDefaultSeed);
  AxiomReport verify_inner_product_axioms(RatMatrix const& killing, std::size_t samples,
                                          std::uint64_t seed = kDefaultSeed);

  struct AdInvarianceReport {
    bool selector_identity = true;
    bool killing_invariance = true;
    std::size_t triples_checked = 0;
    std::string first_failure;
    bool ok() const noexcept {
      return selector_identity && killing_invariance;
    }
  };

  //! sum K_ab^d K_de^f K_cf^e == sum K_bc^d K_ae^f K_df^e for all (a, b, c).
  bool selector_identity_holds(Semigroup const& s,
                               std::array<std::size_t, 3>* witness = nullptr);

  //! ([X,Y],Z) = (X,[Y,Z]) on all basis triples plus the selector identity.
  AdInvarianceReport verify_ad_invariance(ExpandedAlgebra const& e);
  AdInvarianceReport verify_ad_invariance(ExpandedAlgebra const& e,
                                          RatMatrix const& killing);

}  // namespace sexp

#endif  // SEXP_EXPANSION_HPP_
