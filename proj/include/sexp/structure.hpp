#ifndef SEXP_STRUCTURE_HPP_
#define SEXP_STRUCTURE_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "sexp/expansion.hpp"

namespace sexp {

  //! (M_a)_{dc} = K_ac^d.
  struct RegularRepresentation {
    std::vector<RatMatrix> operators;
    //! a -> M_a injective
    bool faithful = true;
  };

  RegularRepresentation regular_representation(Semigroup const& s);

  struct MfRankReport {
    std::size_t order = 0;
    //! Table read as an integer matrix of 1-based labels.
    std::size_t table_rank = 0;
    //! All operators M_a stacked into a (P*P) x P matrix.
    std::size_t stacked_rank = 0;
    bool full_rank_claim_holds() const noexcept {
      return table_rank == order;
    }
  };

  MfRankReport mf_rank_analysis(Semigroup const& s);

  struct BracketCheck {
    std::size_t generator;  //!< flat index in the expansion
    std::size_t basis;      //!< index into the certificate basis
    bool inside = false;
  };

  struct IdealCertificate {
    std::string construction;
    //! Coordinates in the expansion's generators.
    std::vector<RatVector> basis;
    std::vector<BracketCheck> transcript;
    bool verified = false;
    std::size_t ambient_dim = 0;
  };

  //! Checks [X_i, w] in span(basis) for every generator and basis vector.
  //! Fills transcript and verified.
  void verify_ideal(LieAlgebra const& algebra, IdealCertificate& cert);

  //! Proper nonzero ideal of s_expand(s, l). For P >= 2 this is the zero-sum
  //! hyperplane tensored with l; for P = 1 the center or derived algebra of
  //! l. Throws Error(NoCertificate) when P = 1 and neither is proper.
  IdealCertificate ideal_certificate(Semigroup const& s, LieAlgebra const& l);

  struct SplitPart {
    RatVector element;  //!< vector in Q^P
    std::vector<long> character;  //!< eigenvalue of each M_a
    Rational scale;  //!< sum_c element_c character_c
    bool copy_of_base = false;  //!< scale != 0
    bool closes_on_base = false;  //!< brackets reproduce the base constants
    InertiaSignature inertia;  //!< Killing inertia of the ideal on its own
  };

  struct SplitResult {
    bool full_split = false;
    //! Direct sum of the parts matched the expansion by a basis change.
    bool isomorphism_verified = false;
    bool parts_commute = true;
    std::vector<SplitPart> parts;
    //! Columns: basis of each part in order, normalized so that each part
    //! carries the base constants. Only set for a full split.
    RatMatrix basis_change;
    std::string message;
  };

  //! Joint integer eigenvectors of the regular representation, each giving
  //! an ideal v (x) l. A full split needs P one-dimensional joint eigenspaces
  //! with nonzero scale.
  SplitResult split_direct_sum(Semigroup const& s, LieAlgebra const& l);

}  // namespace sexp

#endif  // SEXP_STRUCTURE_HPP_
