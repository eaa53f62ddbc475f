#ifndef SEXP_JSON_IO_HPP_
#define SEXP_JSON_IO_HPP_

#include <optional>
#include <string>

#include "json.hpp"
#include "sexp/expansion.hpp"

namespace sexp::io {

  using json = nlohmann::json;

  struct ExpansionNote {
    std::string semigroup;
    std::string base;
    bool reduced = false;
  };

  //! {"name", "dim", "generators", "brackets": [{"i", "j", "terms": [{"k", "num",
  //! "den"}]}]}, indices 0-based with i < j. Integers that do not fit in a
  //! long are written as decimal strings.
  json algebra_to_json(LieAlgebra const& algebra,
                       std::optional<ExpansionNote> const& note = std::nullopt);
  //! Throws Error(ParseError) on schema violations.
  LieAlgebra algebra_from_json(json const& doc);

  struct SemigroupDoc {
    std::string name;
    RawTable table;  //!< 0-based
  };

  //! {"name", "order", "table"} with 1-based entries.
  json semigroup_to_json(Semigroup const& s);
  json table_to_json(RawTable const& table, std::string const& name);
  SemigroupDoc semigroup_from_json(json const& doc);

  json rational_to_json(Rational const& r);
  json matrix_to_json(RatMatrix const& m);

  //! Throws Error(ParseError) for unreadable or malformed files.
  json read_file(std::string const& path);
  //! Canonical text: sorted keys, two-space indent, trailing newline.
  std::string dump(json const& doc);

  enum class DocumentKind { Algebra, Semigroup };
  //! Throws Error(ParseError) when neither schema matches.
  DocumentKind detect_kind(json const& doc);

}  // namespace sexp::io

#endif  // SEXP_JSON_IO_HPP_
