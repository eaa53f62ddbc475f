#include "sexp/discovery.hpp"

#include <algorithm>

#include "sexp/error.hpp"
#include "sexp/expansion.hpp"

namespace sexp {

  std::vector<ExpansionPlan> solve_phq(SignatureProfile const& source,
                                       SignatureProfile const& target, std::size_t p_max) {
    if (source.killing_rank() == 0) {
      throw Error(ErrorCode::UnconstrainedSource,
                  "source Killing form vanishes; the rank equations do not constrain P, H, Q");
    }
    std::vector<ExpansionPlan> plans;
    for (std::size_t p = 1; p <= p_max; ++p) {
      for (std::size_t h = 0; h <= p; ++h) {
        for (std::size_t q = 0; h + q <= p; ++q) {
          SemigroupProfile const s{p, {p - h - q, q, h}};
          auto pred = predict_expanded_signature(source, s);
          if (pred.inertia.n_plus != target.inertia.n_plus
              || pred.inertia.n_minus != target.inertia.n_minus
              || pred.rank != target.killing_rank() || pred.chi != target.chi()) {
            continue;
          }
          plans.push_back({p, h, q, pred});
        }
      }
    }
    return plans;
  }

  namespace {
    std::vector<Semigroup> catalog(std::size_t order) {
      std::vector<Semigroup> out;
      if (order == 1) {
        out.push_back(trivial_semigroup());
        return out;
      }
      out.push_back(cyclic_group(order));
      out.push_back(null_semigroup(order));
      out.push_back(chain_semilattice(order));
      return out;
    }
  }  // namespace

  DiscoveryResult find_semigroups(ExpansionPlan const& plan, LieAlgebra const& source,
                                  SignatureProfile const& target,
                                  DiscoveryOptions const& opts) {
    if (plan.P == 0 || plan.P > opts.max_order) {
      throw Error(ErrorCode::PlanOutOfBounds,
                  "order " + std::to_string(plan.P) + " exceeds the enumeration bound "
                      + std::to_string(opts.max_order));
    }
    DiscoveryResult result;
    result.plan = plan;
    auto const wanted = plan.mk_inertia();
    auto const known = catalog(plan.P);
    for_each_semigroup(plan.P, opts.up_to_iso, [&](Semigroup const& s) {
      ++result.enumerated;
      auto const mk = mk_matrix(s);
      if (opts.well_defined_only) {
        for (std::size_t a = 0; a < s.order(); ++a) {
          if (mk(a, a) == 0) {
            return true;
          }
        }
      }
      auto const mk_inertia = exact_inertia(mk.to_rational());
      if (mk_inertia != wanted) {
        return true;
      }
      Candidate c;
      c.semigroup = s;
      c.mk_inertia = mk_inertia;
      c.expanded_inertia = exact_inertia(expanded_killing(s_expand(s, source)));
      c.verified = c.expanded_inertia == target.inertia;
      for (auto const& k : known) {
        if (auto perm = is_isomorphic(k, s)) {
          c.witness = CatalogWitness{k.name(), *perm};
          c.semigroup.set_name(k.name());
          break;
        }
      }
      (c.verified ? result.verified : result.rejected).push_back(std::move(c));
      return true;
    });
    return result;
  }

  bool verify_isomorphism(LieAlgebra const& first, LieAlgebra const& second,
                          RatMatrix const& a) {
    if (first.dim() != second.dim()) {
      return false;
    }
    return change_of_basis(first, a).same_constants(second);
  }

  std::vector<TableOneWindow> default_table_one_windows() {
    return {{3, 12}, {4, 16}, {5, 21}, {6, 16}};
  }

  std::vector<TableOneRow> generate_table_one(std::vector<TableOneWindow> const& windows,
                                              std::size_t p_max) {
    std::vector<TableOneRow> rows;
    for (auto const& w : windows) {
      auto const source = so_profile(w.source);
      for (std::size_t m = w.source + 1; m <= w.max_target; ++m) {
        auto const plans = solve_phq(source, so_profile(m), p_max);
        if (plans.empty()) {
          continue;
        }
        auto const& best = plans.front();
        if (best.H == 0 && best.Q == 0) {
          rows.push_back({w.source, m, best.P, best.H, best.Q});
        }
      }
    }
    return rows;
  }

  std::vector<TableOneRow> generate_table_one() {
    return generate_table_one(default_table_one_windows(), kTableOnePMax);
  }

}  // namespace sexp
