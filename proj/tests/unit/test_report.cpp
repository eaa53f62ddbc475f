#include "doctest.h"
#include "sexp/error.hpp"
#include "sexp/report.hpp"

using namespace sexp;

namespace {

  std::size_t count_lines(std::string const& s) {
    std::size_t n = 0;
    for (char c : s) {
      n += c == '\n';
    }
    return n;
  }

}  // namespace

TEST_CASE("formats") {
  CHECK(parse_format("md") == Format::Markdown);
  CHECK(parse_format("csv") == Format::Csv);
  CHECK_THROWS_AS(parse_format("xml"), Error);
  CHECK(compact_table(cyclic_group(2)) == "1 2;2 1");
}

TEST_CASE("so(n) table renders sixteen rows") {
  auto const rows = generate_table_one();
  auto const md = render_table_one(rows, Format::Markdown);
  CHECK(count_lines(md) == 18);
  CHECK(md.find("| 3 | 4 | 2 | 0 | 0 |") != std::string::npos);
  auto const csv = render_table_one(rows, Format::Csv);
  CHECK(count_lines(csv) == 17);
  CHECK(csv.rfind("so(n),so(n+l),P,H,Q\n", 0) == 0);
  CHECK(csv.find("6,16,8,0,0") != std::string::npos);
}

TEST_CASE("signature matrix rows all match") {
  auto const rows = signature_matrix(signature_suite_algebras(), 3, true);
  CHECK(rows.size() == 6 * (1 + 3 + 12));
  std::size_t flagged = 0;
  for (auto const& r : rows) {
    CHECK(r.match);
    CHECK(r.killing_identity);
    if (r.summed_form_applies) {
      CHECK(r.summed_form_match);
    } else {
      ++flagged;
    }
  }
  CHECK(flagged > 0);
  auto const text = render_signature_matrix(rows, Format::Csv);
  CHECK(text.find("MISMATCH") == std::string::npos);
  CHECK(text.find("counts n0*s0 twice") != std::string::npos);
  CHECK(render_signature_matrix(rows, Format::Csv) == text);
}

TEST_CASE("case study") {
  auto const md = case_study(Format::Markdown);
  CHECK(md.find("not associative") != std::string::npos);
  CHECK(md.find("verified") != std::string::npos);
  CHECK(md.find("FAILED") == std::string::npos);
  CHECK(md.find("2 1;1 1") != std::string::npos);
  CHECK(case_study(Format::Markdown) == md);
  auto const csv = case_study(Format::Csv);
  CHECK(csv.find("P,H,Q,predicted") != std::string::npos);
}
