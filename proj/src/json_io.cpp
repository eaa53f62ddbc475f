#include "sexp/json_io.hpp"

#include <fstream>
#include <sstream>

#include "sexp/error.hpp"

namespace sexp::io {

  namespace {
    [[noreturn]] void fail(std::string const& what) {
      throw Error(ErrorCode::ParseError, what);
    }

    json integer_to_json(Rational const& r, bool numerator) {
      if (r.fits_long()) {
        // fits_long refers to both parts of a reduced fraction
        mpz_class const part = numerator ? r.raw().get_num() : r.raw().get_den();
        return json(part.get_si());
      }
      return json(numerator ? r.numerator_string() : r.denominator_string());
    }

    std::string integer_text(json const& v, char const* field) {
      if (v.is_number_integer()) {
        return std::to_string(v.get<long long>());
      }
      if (v.is_string()) {
        return v.get<std::string>();
      }
      fail(std::string("field '") + field + "' must be an integer or a decimal string");
    }

    Rational rational_from(json const& term) {
      if (!term.is_object() || !term.contains("num")) {
        fail("term needs a 'num' field");
      }
      std::string const num = integer_text(term.at("num"), "num");
      std::string const den = term.contains("den") ? integer_text(term.at("den"), "den") : "1";
      try {
        return Rational::from_strings(num, den);
      } catch (Error const& e) {
        fail(std::string("bad rational: ") + e.what());
      } catch (std::exception const&) {
        fail("bad rational " + num + "/" + den);
      }
    }

    std::size_t index_from(json const& v, char const* field) {
      if (!v.is_number_integer() || v.get<long long>() < 0) {
        fail(std::string("field '") + field + "' must be a non-negative integer");
      }
      return v.get<std::size_t>();
    }
  }  // namespace

  json rational_to_json(Rational const& r) {
    if (r.is_integer() && r.fits_long()) {
      return json(r.to_long());
    }
    return json(r.to_string());
  }

  json matrix_to_json(RatMatrix const& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < m.cols(); ++j) {
        row.push_back(rational_to_json(m(i, j)));
      }
      rows.push_back(std::move(row));
    }
    return rows;
  }

  json algebra_to_json(LieAlgebra const& algebra, std::optional<ExpansionNote> const& note) {
    json doc;
    doc["name"] = algebra.name();
    doc["dim"] = algebra.dim();
    doc["generators"] = algebra.generator_names();
    json brackets = json::array();
    for (std::size_t i = 0; i < algebra.dim(); ++i) {
      for (std::size_t j = i + 1; j < algebra.dim(); ++j) {
        auto const& b = algebra.stored_bracket(i, j);
        if (b.empty()) {
          continue;
        }
        json terms = json::array();
        for (auto const& t : b) {
          terms.push_back({{"k", t.index},
                           {"num", integer_to_json(t.coeff, true)},
                           {"den", integer_to_json(t.coeff, false)}});
        }
        brackets.push_back({{"i", i}, {"j", j}, {"terms", std::move(terms)}});
      }
    }
    doc["brackets"] = std::move(brackets);
    if (note) {
      doc["expansion"] = {{"semigroup", note->semigroup},
                          {"base", note->base},
                          {"index_map", "A*P+alpha"},
                          {"zero_reduced", note->reduced}};
    }
    return doc;
  }

  LieAlgebra algebra_from_json(json const& doc) {
    if (!doc.is_object() || !doc.contains("dim") || !doc.contains("brackets")) {
      fail("algebra document needs 'dim' and 'brackets'");
    }
    std::size_t const dim = index_from(doc.at("dim"), "dim");
    std::string const name = doc.value("name", std::string{});
    LieAlgebra out(dim, name);
    if (doc.contains("generators")) {
      auto const& gens = doc.at("generators");
      if (!gens.is_array() || gens.size() != dim) {
        fail("'generators' must list dim names");
      }
      std::vector<std::string> names;
      for (auto const& g : gens) {
        if (!g.is_string()) {
          fail("generator names must be strings");
        }
        names.push_back(g.get<std::string>());
      }
      out = LieAlgebra(name, std::move(names));
    }
    auto const& brackets = doc.at("brackets");
    if (!brackets.is_array()) {
      fail("'brackets' must be an array");
    }
    std::vector<bool> seen(dim * dim, false);
    for (auto const& b : brackets) {
      if (!b.is_object() || !b.contains("i") || !b.contains("j") || !b.contains("terms")) {
        fail("bracket entries need 'i', 'j' and 'terms'");
      }
      std::size_t const i = index_from(b.at("i"), "i");
      std::size_t const j = index_from(b.at("j"), "j");
      if (i >= j || j >= dim) {
        fail("bracket indices must satisfy i < j < dim");
      }
      if (seen[i * dim + j]) {
        fail("bracket (" + std::to_string(i) + ", " + std::to_string(j) + ") listed twice");
      }
      seen[i * dim + j] = true;
      if (!b.at("terms").is_array()) {
        fail("'terms' must be an array");
      }
      SparseVector terms;
      for (auto const& t : b.at("terms")) {
        if (!t.is_object() || !t.contains("k")) {
          fail("term needs a 'k' field");
        }
        std::size_t const k = index_from(t.at("k"), "k");
        if (k >= dim) {
          fail("term index k out of range");
        }
        axpy(terms, rational_from(t), SparseVector{{k, Rational(1)}});
      }
      out.set_bracket(i, j, std::move(terms));
    }
    return out;
  }

  json table_to_json(RawTable const& table, std::string const& name) {
    json rows = json::array();
    for (auto const& row : table) {
      json r = json::array();
      for (auto v : row) {
        r.push_back(v + 1);
      }
      rows.push_back(std::move(r));
    }
    return {{"name", name}, {"order", table.size()}, {"table", std::move(rows)}};
  }

  json semigroup_to_json(Semigroup const& s) {
    return table_to_json(s.table(), s.name());
  }

  SemigroupDoc semigroup_from_json(json const& doc) {
    if (!doc.is_object() || !doc.contains("table")) {
      fail("semigroup document needs 'table'");
    }
    auto const& t = doc.at("table");
    if (!t.is_array()) {
      fail("'table' must be an array of rows");
    }
    SemigroupDoc out;
    out.name = doc.value("name", std::string{});
    std::size_t const order = t.size();
    if (doc.contains("order") && index_from(doc.at("order"), "order") != order) {
      fail("'order' does not match the number of table rows");
    }
    for (auto const& row : t) {
      if (!row.is_array() || row.size() != order) {
        fail("table rows must have 'order' entries");
      }
      std::vector<std::size_t> r;
      for (auto const& v : row) {
        std::size_t const label = index_from(v, "table");
        if (label < 1 || label > order) {
          fail("table entries are 1-based labels in [1, order]");
        }
        r.push_back(label - 1);
      }
      out.table.push_back(std::move(r));
    }
    if (order == 0) {
      fail("empty table");
    }
    return out;
  }

  json read_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      fail("cannot open '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      return json::parse(buf.str());
    } catch (json::parse_error const& e) {
      fail("'" + path + "': " + e.what());
    }
  }

  std::string dump(json const& doc) {
    return doc.dump(2) + "\n";
  }

  DocumentKind detect_kind(json const& doc) {
    if (doc.is_object() && doc.contains("table")) {
      return DocumentKind::Semigroup;
    }
    if (doc.is_object() && doc.contains("brackets")) {
      return DocumentKind::Algebra;
    }
    fail("document is neither an algebra ('brackets') nor a semigroup ('table')");
  }

}  // namespace sexp::io
