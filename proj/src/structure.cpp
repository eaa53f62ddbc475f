#include "sexp/structure.hpp"

#include <algorithm>

#include "sexp/discovery.hpp"
#include "sexp/error.hpp"

namespace sexp {

  RegularRepresentation regular_representation(Semigroup const& s) {
    std::size_t const p = s.order();
    RegularRepresentation rep;
    for (std::size_t a = 0; a < p; ++a) {
      RatMatrix m(p, p);
      for (std::size_t c = 0; c < p; ++c) {
        m(s.product(a, c), c) = Rational(1);
      }
      rep.operators.push_back(std::move(m));
    }
    for (std::size_t a = 0; a < p && rep.faithful; ++a) {
      for (std::size_t b = a + 1; b < p; ++b) {
        if (rep.operators[a] == rep.operators[b]) {
          rep.faithful = false;
          break;
        }
      }
    }
    return rep;
  }

  MfRankReport mf_rank_analysis(Semigroup const& s) {
    std::size_t const p = s.order();
    MfRankReport r;
    r.order = p;
    RatMatrix table(p, p);
    for (std::size_t a = 0; a < p; ++a) {
      for (std::size_t b = 0; b < p; ++b) {
        table(a, b) = Rational(static_cast<long>(s.product(a, b) + 1));
      }
    }
    r.table_rank = rational_rank(table);
    auto const rep = regular_representation(s);
    RatMatrix stacked(p * p, p);
    for (std::size_t a = 0; a < p; ++a) {
      for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t j = 0; j < p; ++j) {
          stacked(a * p + i, j) = rep.operators[a](i, j);
        }
      }
    }
    r.stacked_rank = rational_rank(stacked);
    return r;
  }

  namespace {
    SparseVector bracket_dense(LieAlgebra const& g, std::size_t i, RatVector const& w) {
      SparseVector acc;
      for (std::size_t k = 0; k < w.size(); ++k) {
        if (!w[k].is_zero()) {
          axpy(acc, w[k], g.bracket(i, k));
        }
      }
      return acc;
    }

    SparseVector bracket_dense(LieAlgebra const& g, RatVector const& x, RatVector const& y) {
      return g.bracket(sparse_from_dense(x), sparse_from_dense(y));
    }

    bool in_kernel_of(std::vector<RatVector> const& functionals, SparseVector const& v) {
      for (auto const& f : functionals) {
        Rational s;
        for (auto const& t : v) {
          if (!f[t.index].is_zero()) {
            s += f[t.index] * t.coeff;
          }
        }
        if (!s.is_zero()) {
          return false;
        }
      }
      return true;
    }

    // Functionals vanishing on span(basis).
    std::vector<RatVector> annihilator(std::vector<RatVector> const& basis, std::size_t dim) {
      if (basis.empty()) {
        std::vector<RatVector> all;
        for (std::size_t i = 0; i < dim; ++i) {
          RatVector e(dim);
          e[i] = Rational(1);
          all.push_back(std::move(e));
        }
        return all;
      }
      return kernel_basis(RatMatrix::from_rows(basis));
    }

    std::vector<RatVector> independent_subset(std::vector<RatVector> const& vectors) {
      std::vector<RatVector> out;
      for (auto const& v : vectors) {
        auto trial = out;
        trial.push_back(v);
        if (rational_rank(RatMatrix::from_rows(trial)) == trial.size()) {
          out = std::move(trial);
        }
      }
      return out;
    }

    // Smallest ideal containing `seed`, grown by bracketing with every
    // generator until the span stops changing.
    std::vector<RatVector> generated_ideal(LieAlgebra const& g, RatVector const& seed) {
      std::vector<RatVector> basis{seed};
      for (std::size_t next = 0; next < basis.size() && basis.size() < g.dim(); ++next) {
        for (std::size_t i = 0; i < g.dim() && basis.size() < g.dim(); ++i) {
          auto trial = basis;
          trial.push_back(dense_from_sparse(bracket_dense(g, i, basis[next]), g.dim()));
          if (rational_rank(RatMatrix::from_rows(trial)) == trial.size()) {
            basis = std::move(trial);
          }
        }
      }
      return basis;
    }
  }  // namespace

  void verify_ideal(LieAlgebra const& algebra, IdealCertificate& cert) {
    cert.ambient_dim = algebra.dim();
    cert.transcript.clear();
    auto const ann = annihilator(cert.basis, algebra.dim());
    bool ok = !cert.basis.empty() && cert.basis.size() < algebra.dim()
              && rational_rank(RatMatrix::from_rows(cert.basis)) == cert.basis.size();
    for (std::size_t i = 0; i < algebra.dim(); ++i) {
      for (std::size_t b = 0; b < cert.basis.size(); ++b) {
        bool const inside = in_kernel_of(ann, bracket_dense(algebra, i, cert.basis[b]));
        cert.transcript.push_back({i, b, inside});
        ok = ok && inside;
      }
    }
    cert.verified = ok;
  }

  IdealCertificate ideal_certificate(Semigroup const& s, LieAlgebra const& l) {
    ExpandedAlgebra const e = s_expand(s, l);
    std::size_t const p = s.order();
    std::size_t const n = e.algebra().dim();
    IdealCertificate cert;
    if (p >= 2) {
      cert.construction = "zero-sum hyperplane (x) base";
      for (std::size_t a = 0; a < l.dim(); ++a) {
        for (std::size_t alpha = 1; alpha < p; ++alpha) {
          RatVector v(n);
          v[e.flat_index(a, 0)] = Rational(1);
          v[e.flat_index(a, alpha)] = Rational(-1);
          cert.basis.push_back(std::move(v));
        }
      }
    } else if (l.is_abelian() && n >= 2) {
      cert.construction = "line in an abelian algebra";
      RatVector v(n);
      v[0] = Rational(1);
      cert.basis.push_back(std::move(v));
    } else {
      // center: z with [X_i, z] = 0 for all i
      RatMatrix ad_rows(n * n, n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
          for (auto const& t : e.algebra().bracket(i, k)) {
            ad_rows(i * n + t.index, k) = t.coeff;
          }
        }
      }
      auto center = kernel_basis(ad_rows);
      if (!center.empty() && center.size() < n) {
        cert.construction = "center";
        cert.basis = std::move(center);
      } else {
        std::vector<RatVector> brackets;
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = i + 1; j < n; ++j) {
            auto const& b = e.algebra().stored_bracket(i, j);
            if (!b.empty()) {
              brackets.push_back(dense_from_sparse(b, n));
            }
          }
        }
        auto derived = independent_subset(brackets);
        if (!derived.empty() && derived.size() < n) {
          cert.construction = "derived algebra";
          cert.basis = std::move(derived);
        } else {
          // semisimple: look for a generator spanning a proper ideal
          for (std::size_t i = 0; i < n && cert.basis.empty(); ++i) {
            RatVector seed(n);
            seed[i] = Rational(1);
            auto ideal = generated_ideal(e.algebra(), seed);
            if (ideal.size() < n) {
              cert.construction = "ideal generated by " + e.algebra().generator_names()[i];
              cert.basis = std::move(ideal);
            }
          }
          if (cert.basis.empty()) {
            throw Error(ErrorCode::NoCertificate,
                        "order-1 expansion of '" + l.name()
                            + "': no proper ideal among the center, the derived algebra and "
                              "the ideals generated by single generators");
          }
        }
      }
    }
    verify_ideal(e.algebra(), cert);
    return cert;
  }

  namespace {
    struct JointSpace {
      std::vector<long> character;
      std::vector<RatVector> basis;
    };

    std::vector<JointSpace> joint_eigenspaces(RegularRepresentation const& rep, std::size_t p) {
      std::vector<JointSpace> spaces;
      {
        JointSpace all;
        for (std::size_t i = 0; i < p; ++i) {
          RatVector e(p);
          e[i] = Rational(1);
          all.basis.push_back(std::move(e));
        }
        spaces.push_back(std::move(all));
      }
      long const bound = static_cast<long>(p);
      for (auto const& m : rep.operators) {
        std::vector<JointSpace> next;
        for (auto const& sp : spaces) {
          RatMatrix const b = RatMatrix::from_columns(sp.basis, p);
          RatMatrix const mb = m * b;
          for (long t = -bound; t <= bound; ++t) {
            RatMatrix shifted = mb - Rational(t) * b;
            auto coeffs = kernel_basis(shifted);
            if (coeffs.empty()) {
              continue;
            }
            JointSpace js;
            js.character = sp.character;
            js.character.push_back(t);
            for (auto const& c : coeffs) {
              js.basis.push_back(b * c);
            }
            next.push_back(std::move(js));
          }
        }
        spaces = std::move(next);
      }
      return spaces;
    }

    // u (x) X_A in expansion coordinates
    RatVector lift(ExpandedAlgebra const& e, RatVector const& u, std::size_t a) {
      RatVector v(e.algebra().dim());
      for (std::size_t c = 0; c < u.size(); ++c) {
        v[e.flat_index(a, c)] = u[c];
      }
      return v;
    }
  }  // namespace

  SplitResult split_direct_sum(Semigroup const& s, LieAlgebra const& l) {
    std::size_t const p = s.order();
    ExpandedAlgebra const e = s_expand(s, l);
    auto const rep = regular_representation(s);
    auto const spaces = joint_eigenspaces(rep, p);
    std::size_t const nl = l.dim();
    SplitResult result;
    bool all_lines = spaces.size() == p;
    for (auto const& sp : spaces) {
      if (sp.basis.size() != 1) {
        all_lines = false;
        continue;
      }
      SplitPart part;
      part.character = sp.character;
      RatVector const& v = sp.basis.front();
      for (std::size_t c = 0; c < p; ++c) {
        part.scale += v[c] * Rational(sp.character[c]);
      }
      part.copy_of_base = !part.scale.is_zero();
      part.element = v;
      if (part.copy_of_base) {
        for (auto& x : part.element) {
          x = x / part.scale;
        }
      }
      // constants of the ideal in the basis u (x) X_A
      std::vector<RatVector> basis;
      for (std::size_t a = 0; a < nl; ++a) {
        basis.push_back(lift(e, part.element, a));
      }
      // u has a nonzero entry at `lead`; coordinates along u (x) X_C are read there
      std::size_t lead = 0;
      while (part.element[lead].is_zero()) {
        ++lead;
      }
      LieAlgebra ideal(nl, "part");
      bool closes = true;
      for (std::size_t a = 0; a < nl; ++a) {
        for (std::size_t b = a + 1; b < nl; ++b) {
          auto const got = bracket_dense(e.algebra(), basis[a], basis[b]);
          SparseVector want;
          for (auto const& t : l.stored_bracket(a, b)) {
            axpy(want, t.coeff, sparse_from_dense(basis[t.index]));
          }
          if (got != want) {
            closes = false;
          }
          RatVector const dense = dense_from_sparse(got, e.algebra().dim());
          SparseVector coords;
          for (std::size_t c = 0; c < nl; ++c) {
            Rational const value = dense[e.flat_index(c, lead)];
            if (!value.is_zero()) {
              coords.push_back({c, value / part.element[lead]});
            }
          }
          ideal.set_bracket(a, b, std::move(coords));
        }
      }
      part.closes_on_base = part.copy_of_base && closes;
      part.inertia = exact_inertia(killing_form(ideal));
      result.parts.push_back(std::move(part));
    }
    // pairwise commutation of distinct parts
    for (std::size_t i = 0; i < result.parts.size(); ++i) {
      for (std::size_t j = i + 1; j < result.parts.size(); ++j) {
        for (std::size_t a = 0; a < nl && result.parts_commute; ++a) {
          for (std::size_t b = 0; b < nl; ++b) {
            auto const x = lift(e, result.parts[i].element, a);
            auto const y = lift(e, result.parts[j].element, b);
            if (!bracket_dense(e.algebra(), x, y).empty()) {
              result.parts_commute = false;
              break;
            }
          }
        }
      }
    }
    bool const copies = std::all_of(result.parts.begin(), result.parts.end(),
                                    [](SplitPart const& sp) { return sp.closes_on_base; });
    if (!(all_lines && copies && result.parts_commute)) {
      std::size_t ncopies = 0;
      for (auto const& sp : result.parts) {
        ncopies += sp.copy_of_base ? 1 : 0;
      }
      result.message = "no full split: " + std::to_string(spaces.size())
                       + " joint eigenspaces, " + std::to_string(result.parts.size())
                       + " of them lines, copies of " + l.name() + ": "
                       + std::to_string(ncopies);
      return result;
    }
    std::vector<RatVector> columns;
    for (auto const& part : result.parts) {
      for (std::size_t a = 0; a < nl; ++a) {
        columns.push_back(lift(e, part.element, a));
      }
    }
    result.basis_change = RatMatrix::from_columns(columns, e.algebra().dim());
    LieAlgebra sum = l;
    for (std::size_t k = 1; k < p; ++k) {
      sum = direct_sum(sum, l);
    }
    result.isomorphism_verified = verify_isomorphism(e.algebra(), sum, result.basis_change);
    result.full_split = result.isomorphism_verified;
    result.message = result.full_split ? "full split into " + std::to_string(p) + " copies of "
                                             + l.name()
                                       : "parts found but basis change does not match";
    return result;
  }

}  // namespace sexp
