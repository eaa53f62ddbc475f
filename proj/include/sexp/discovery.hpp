#ifndef SEXP_DISCOVERY_HPP_
#define SEXP_DISCOVERY_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sexp/geometry.hpp"
#include "sexp/lie_algebra.hpp"
#include "sexp/semigroup.hpp"

namespace sexp {

  struct ExpansionPlan {
    std::size_t P = 1;
    std::size_t H = 0;
    std::size_t Q = 0;
    //! Inertia of the expansion predicted from the source and (P - H - Q, Q, H).
    SignaturePrediction predicted;

    InertiaSignature mk_inertia() const noexcept {
      return {P - H - Q, Q, H};
    }
  };

  //! All (P, H, Q) with P <= p_max and H + Q <= P matching the target's N+,
  //! N- and Killing rank (and chi). Sorted by (P, H, Q). Throws
  //! Error(UnconstrainedSource) when the source has Killing rank 0.
  std::vector<ExpansionPlan> solve_phq(SignatureProfile const& source,
                                       SignatureProfile const& target, std::size_t p_max);

  struct DiscoveryOptions {
    bool up_to_iso = true;
    //! Keep only semigroups whose M_K diagonal has no zeros.
    bool well_defined_only = false;
    std::size_t max_order = 4;
  };

  struct CatalogWitness {
    std::string name;  //!< e.g. "Z2"
    Permutation permutation;  //!< catalog element a -> candidate element perm[a]
  };

  struct Candidate {
    Semigroup semigroup;
    InertiaSignature mk_inertia;
    InertiaSignature expanded_inertia;
    bool verified = false;
    std::optional<CatalogWitness> witness;
  };

  struct DiscoveryResult {
    ExpansionPlan plan;
    //! Semigroups with the plan's M_K inertia whose expansion matched.
    std::vector<Candidate> verified;
    //! Semigroups with the plan's M_K inertia whose expansion did not.
    std::vector<Candidate> rejected;
    std::size_t enumerated = 0;
  };

  //! Throws Error(PlanOutOfBounds) when plan.P > opts.max_order.
  DiscoveryResult find_semigroups(ExpansionPlan const& plan, LieAlgebra const& source,
                                  SignatureProfile const& target,
                                  DiscoveryOptions const& opts = {});

  //! change_of_basis(first, a) has exactly the constants of second. Throws
  //! Error(SingularMatrix).
  bool verify_isomorphism(LieAlgebra const& first, LieAlgebra const& second,
                          RatMatrix const& a);

  struct TableOneRow {
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t P = 0;
    std::size_t H = 0;
    std::size_t Q = 0;
    friend bool operator==(TableOneRow const&, TableOneRow const&) = default;
  };

  //! Targets so(m) with source < m <= max_target.
  struct TableOneWindow {
    std::size_t source = 3;
    std::size_t max_target = 4;
  };

  std::vector<TableOneWindow> default_table_one_windows();
  constexpr std::size_t kTableOnePMax = 22;

  //! Minimal plan per (so(n), so(m)) pair, kept when it has H = Q = 0 and
  //! P <= p_max.
  std::vector<TableOneRow> generate_table_one(std::vector<TableOneWindow> const& windows,
                                              std::size_t p_max);
  std::vector<TableOneRow> generate_table_one();

}  // namespace sexp

#endif  // SEXP_DISCOVERY_HPP_
