#include "sexp/report.hpp"

#include <sstream>

#include "sexp/error.hpp"
#include "sexp/expansion.hpp"

namespace sexp {

  Format parse_format(std::string const& text) {
    if (text == "md" || text == "markdown") {
      return Format::Markdown;
    }
    if (text == "csv") {
      return Format::Csv;
    }
    throw Error(ErrorCode::ParseError, "unknown format '" + text + "'");
  }

  std::string compact_table(Semigroup const& s) {
    std::ostringstream os;
    for (std::size_t a = 0; a < s.order(); ++a) {
      if (a > 0) {
        os << ';';
      }
      for (std::size_t b = 0; b < s.order(); ++b) {
        os << (b > 0 ? " " : "") << s.product(a, b) + 1;
      }
    }
    return os.str();
  }

  namespace {
    std::string triple(InertiaSignature const& s) {
      std::ostringstream os;
      os << "(" << s.n_plus << "," << s.n_minus << "," << s.n_zero << ")";
      return os.str();
    }

    // one row of a markdown or CSV table
    std::string row(std::vector<std::string> const& cells, Format f) {
      std::ostringstream os;
      if (f == Format::Markdown) {
        os << "|";
        for (auto const& c : cells) {
          os << " " << c << " |";
        }
      } else {
        for (std::size_t i = 0; i < cells.size(); ++i) {
          bool const quote = cells[i].find_first_of(",\"") != std::string::npos;
          os << (i > 0 ? "," : "") << (quote ? "\"" + cells[i] + "\"" : cells[i]);
        }
      }
      return os.str() + "\n";
    }

    std::string header(std::vector<std::string> const& cells, Format f) {
      std::string out = row(cells, f);
      if (f == Format::Markdown) {
        out += "|";
        for (std::size_t i = 0; i < cells.size(); ++i) {
          out += "---|";
        }
        out += "\n";
      }
      return out;
    }

    std::string matrix_block(RatMatrix const& m) {
      std::ostringstream os;
      os << "```\n";
      for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
          std::string const cell = m(i, j).to_string();
          os << std::string(cell.size() < 4 ? 4 - cell.size() : 1, ' ') << cell;
        }
        os << "\n";
      }
      os << "```\n";
      return os.str();
    }
  }  // namespace

  std::string render_table_one(std::vector<TableOneRow> const& rows, Format f) {
    std::string out = header({"so(n)", "so(n+l)", "P", "H", "Q"}, f);
    for (auto const& r : rows) {
      out += row({std::to_string(r.n), std::to_string(r.m), std::to_string(r.P),
                  std::to_string(r.H), std::to_string(r.Q)},
                 f);
    }
    return out;
  }

  std::vector<LieAlgebra> signature_suite_algebras() {
    return {special_orthogonal(3), special_orthogonal(4),       sl2(),
            heisenberg3(),         abelian(2), standard_algebra("sl2+so(3)")};
  }

  SignatureCase signature_case(LieAlgebra const& algebra, Semigroup const& s) {
    SignatureCase c;
    c.algebra = algebra.name();
    c.semigroup = compact_table(s);
    RatMatrix const g = killing_form(algebra);
    c.source = {algebra.dim(), exact_inertia(g)};
    RatMatrix const mk = mk_matrix(s).to_rational();
    c.factor = {s.order(), exact_inertia(mk)};
    c.predicted = predict_expanded_signature(c.source, c.factor);
    RatMatrix const expanded = expanded_killing(s_expand(s, algebra));
    c.observed = exact_inertia(expanded);
    c.match = c.observed == c.predicted.inertia;
    c.summed_form_applies = c.source.inertia.n_zero * c.factor.inertia.n_zero == 0;
    c.summed_form_match = c.predicted.summed_n_zero == c.observed.n_zero;
    c.killing_identity = expanded == kronecker(g, mk);
    return c;
  }

  std::vector<SignatureCase> signature_matrix(std::vector<LieAlgebra> const& algebras,
                                              std::size_t max_order, bool up_to_iso) {
    std::vector<SignatureCase> rows;
    for (auto const& l : algebras) {
      for (std::size_t p = 1; p <= max_order; ++p) {
        for_each_semigroup(p, up_to_iso, [&](Semigroup const& s) {
          rows.push_back(signature_case(l, s));
          return true;
        });
      }
    }
    return rows;
  }

  std::string render_signature_matrix(std::vector<SignatureCase> const& rows, Format f) {
    std::string out = header({"algebra", "semigroup", "n", "s", "predicted", "observed",
                              "chi_L", "chi_exp", "summed_N0", "status"},
                             f);
    for (auto const& r : rows) {
      std::string status = r.match && r.killing_identity ? "match" : "MISMATCH";
      if (!r.summed_form_match) {
        // n0*s0 != 0 makes ns0 + Pn0 count the shared null directions twice
        status += r.summed_form_applies ? " (summed N0 differs)" : " (summed N0 counts n0*s0 twice)";
      }
      out += row({r.algebra, r.semigroup, triple(r.source.inertia), triple(r.factor.inertia),
                  triple(r.predicted.inertia), triple(r.observed), std::to_string(r.source.chi()),
                  std::to_string(r.observed.character()), std::to_string(r.predicted.summed_n_zero),
                  status},
                 f);
    }
    return out;
  }

  std::string case_study(Format f) {
    std::ostringstream os;
    bool const md = f == Format::Markdown;
    LieAlgebra const so3 = special_orthogonal(3);
    LieAlgebra const so4 = special_orthogonal(4);
    auto const source = signature_profile(so3);
    auto const target = signature_profile(so4);

    if (md) {
      os << "# so(3) -> so(4)\n\n";
      os << "Source inertia " << triple(source.inertia) << ", chi = " << source.chi()
         << "; target inertia " << triple(target.inertia) << ", chi = " << target.chi()
         << ".\n\n## Plans (P <= 4)\n\n";
    }
    auto const plans = solve_phq(source, target, 4);
    os << header({"P", "H", "Q", "predicted"}, f);
    for (auto const& p : plans) {
      os << row({std::to_string(p.P), std::to_string(p.H), std::to_string(p.Q),
                 triple(p.predicted.inertia)},
                f);
    }

    struct Named {
      char const* label;
      RawTable table;
    };
    std::vector<Named> const tables = {{"A", {{0, 1}, {1, 0}}},
                                       {"B", {{1, 0}, {0, 0}}},
                                       {"C", {{0, 0}, {0, 1}}},
                                       {"D", {{1, 1}, {1, 0}}},
                                       {"B'", {{0, 1}, {1, 1}}}};
    os << (md ? "\n## Order-2 tables\n\n" : "\n");
    os << header({"table", "entries", "associative", "M_K", "M_K inertia"}, f);
    for (auto const& t : tables) {
      auto const report = validate_semigroup(t.table, t.label);
      auto const mk = mk_matrix_of_table(t.table);
      std::ostringstream entries, mks;
      for (std::size_t a = 0; a < 2; ++a) {
        entries << (a ? ";" : "") << t.table[a][0] + 1 << " " << t.table[a][1] + 1;
        mks << (a ? ";" : "") << mk(a, 0) << " " << mk(a, 1);
      }
      std::string inertia = "-";
      if (report.ok) {
        inertia = triple(exact_inertia(mk.to_rational()));
      }
      os << row({t.label, entries.str(), report.ok ? "yes" : "no: " + report.message,
                 mks.str(), inertia},
                f);
    }

    DiscoveryResult const found = find_semigroups(plans.front(), so3, target);
    os << (md ? "\n## Candidates for plan (2,0,0)\n\n" : "\n");
    os << header({"semigroup", "catalog", "M_K inertia", "expanded inertia", "verified"}, f);
    for (auto const* list : {&found.verified, &found.rejected}) {
      for (auto const& c : *list) {
        os << row({compact_table(c.semigroup), c.witness ? c.witness->name : "-",
                   triple(c.mk_inertia), triple(c.expanded_inertia), c.verified ? "yes" : "no"},
                  f);
      }
    }

    if (md) {
      Semigroup const b_prime = Semigroup::from_table({{0, 1}, {1, 1}}, "B'");
      RatMatrix const g = expanded_killing(s_expand(b_prime, so3));
      os << "\n## Expanded metric for B'\n\n"
         << "Killing form of so(3) is " << killing_form(so3)(0, 0)
         << " times the identity, so the metric is that factor times I3 (x) M_K:\n\n"
         << matrix_block(g);

      os << "\n## Isomorphism witnesses\n\n";
      LieAlgebra const pair = direct_sum(so3, so3);
      // Z2: T+_i = (l1 X_i + l2 X_i)/2, T-_i = (l1 X_i - l2 X_i)/2
      RatMatrix a(6, 6), b(6, 6);
      Rational const half(1, 2);
      for (std::size_t i = 0; i < 3; ++i) {
        a(2 * i, i) = half;
        a(2 * i + 1, i) = half;
        a(2 * i, 3 + i) = half;
        a(2 * i + 1, 3 + i) = -half;
        // chain2 (l1 absorbing): U_i = l2 X_i - l1 X_i, V_i = l1 X_i
        b(2 * i + 1, i) = Rational(1);
        b(2 * i, i) = Rational(-1);
        b(2 * i, 3 + i) = Rational(1);
      }
      bool const z2 = verify_isomorphism(s_expand(cyclic_group(2), so3).algebra(), pair, a);
      bool const ch = verify_isomorphism(s_expand(chain_semilattice(2), so3).algebra(), pair, b);
      os << "- Z2 (x) so(3) = so(3)+so(3) via T+-: " << (z2 ? "verified" : "FAILED") << "\n"
         << "- chain2 (x) so(3) = so(3)+so(3) via U, V: " << (ch ? "verified" : "FAILED")
         << "\n";
    }
    return os.str();
  }

}  // namespace sexp
