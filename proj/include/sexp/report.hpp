#ifndef SEXP_REPORT_HPP_
#define SEXP_REPORT_HPP_

#include <string>
#include <vector>

#include "sexp/discovery.hpp"
#include "sexp/geometry.hpp"

namespace sexp {

  enum class Format { Markdown, Csv };

  //! Format from "md" / "markdown" / "csv". Throws Error(ParseError).
  Format parse_format(std::string const& text);

  //! Compact 1-based rendering "1 2;2 1".
  std::string compact_table(Semigroup const& s);

  std::string render_table_one(std::vector<TableOneRow> const& rows, Format f);

  //! so(3), so(4), sl2, heisenberg3, abelian(2), sl2+so(3)
  std::vector<LieAlgebra> signature_suite_algebras();

  struct SignatureCase {
    std::string algebra;
    std::string semigroup;
    SignatureProfile source;
    SemigroupProfile factor;
    SignaturePrediction predicted;
    InertiaSignature observed;
    //! observed inertia equals the corrected prediction
    bool match = false;
    //! n0 s0 == 0, so the summed zero count is expected to agree
    bool summed_form_applies = false;
    bool summed_form_match = false;
    //! expanded Killing form equals g (x) M_K entrywise
    bool killing_identity = false;
  };

  SignatureCase signature_case(LieAlgebra const& algebra, Semigroup const& s);

  //! Every algebra against every semigroup of order 1..max_order.
  std::vector<SignatureCase> signature_matrix(std::vector<LieAlgebra> const& algebras,
                                              std::size_t max_order, bool up_to_iso);

  std::string render_signature_matrix(std::vector<SignatureCase> const& rows, Format f);

  //! so(3) -> so(4) walkthrough: order-2 tables, M_K matrices, plans,
  //! candidates, the expanded metric and isomorphism witnesses.
  std::string case_study(Format f);

}  // namespace sexp

#endif  // SEXP_REPORT_HPP_
