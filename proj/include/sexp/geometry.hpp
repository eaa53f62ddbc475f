#ifndef SEXP_GEOMETRY_HPP_
#define SEXP_GEOMETRY_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "sexp/lie_algebra.hpp"
#include "sexp/semigroup.hpp"

namespace sexp {

  struct SignatureProfile {
    std::size_t dim = 0;
    InertiaSignature inertia;

    long chi() const noexcept {
      return inertia.character();
    }
    std::size_t killing_rank() const noexcept {
      return inertia.rank();
    }
    friend bool operator==(SignatureProfile const&, SignatureProfile const&) = default;
  };

  //! Inertia (s+, s-, s0) of M_K; Q = s-, H = s0.
  struct SemigroupProfile {
    std::size_t order = 0;
    InertiaSignature inertia;

    std::size_t Q() const noexcept {
      return inertia.n_minus;
    }
    std::size_t H() const noexcept {
      return inertia.n_zero;
    }
    long chi() const noexcept {
      return inertia.character();
    }
  };

  SignatureProfile signature_profile(LieAlgebra const& algebra);
  //! Closed form for so(n): (0, n(n-1)/2, 0).
  SignatureProfile so_profile(std::size_t n);
  SemigroupProfile semigroup_profile(Semigroup const& s);

  struct SignaturePrediction {
    InertiaSignature inertia;  //!< N0 = nP - N+ - N-
    //! The n*s0 + P*n0 count; differs from inertia.n_zero iff n0*s0 != 0.
    std::size_t summed_n_zero = 0;
    std::size_t rank = 0;
    long chi = 0;

    bool summed_form_agrees() const noexcept {
      return summed_n_zero == inertia.n_zero;
    }
  };

  //! N+ = n+ s+ + n- s-, N- = n- s+ + n+ s-.
  SignaturePrediction predict_expanded_signature(SignatureProfile const& n,
                                                 SemigroupProfile const& s);

  //! chi (P - H - 2Q). Throws Error(InvalidCounts) if H + Q > P.
  long predict_character(long chi, std::size_t p, std::size_t h, std::size_t q);

  enum class KillingClass { I, II, III };
  std::string to_string(KillingClass c);

  //! I: even rank, n+ = n-. II: even rank, n+ != n-. III: odd rank.
  KillingClass classify(LieAlgebra const& algebra);
  KillingClass classify(InertiaSignature const& inertia);

  struct ClassReport {
    KillingClass before;
    KillingClass after;
    long chi_before = 0;
    long chi_after = 0;
    //! Only meaningful when before == I.
    bool class_one_preserved = true;
  };

  ClassReport classification_preserved_under_expansion(LieAlgebra const& algebra,
                                                       Semigroup const& s);

  //! M_K[a][a]; the norm of X_(a,A) is sqrt of this times that of X_A.
  long magnitude_factor(Semigroup const& s, std::size_t a);

  //! Delta = numerator / sqrt(radicand).
  struct AngleFactor {
    long numerator = 0;
    long radicand = 1;
    friend bool operator==(AngleFactor const&, AngleFactor const&) = default;
  };

  //! (M_K[i][j], M_K[i][i] M_K[j][j]). Throws Error(IllDefinedAngle) if
  //! either diagonal entry vanishes.
  AngleFactor angle_factor(Semigroup const& s, std::size_t i, std::size_t j);

  //! Off-diagonal (i < j) with M_K[i][j] != 0.
  std::vector<std::pair<std::size_t, std::size_t>> diagonality_test(Semigroup const& s);

}  // namespace sexp

#endif  // SEXP_GEOMETRY_HPP_
