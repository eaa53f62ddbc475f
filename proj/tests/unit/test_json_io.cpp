#include <optional>
#include <string>

#include "doctest.h"
#include "oracles.hpp"
#include "sexp/error.hpp"
#include "sexp/json_io.hpp"

using namespace sexp;
using sexp::io::json;

namespace {

  std::string data(std::string const& name) {
    return std::string(SEXP_TEST_DATA) + "/" + name;
  }

  std::optional<ErrorCode> code_of(auto&& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.code();
    }
    return std::nullopt;
  }

}  // namespace

TEST_CASE("algebra files load") {
  auto const g = io::algebra_from_json(io::read_file(data("so3.json")));
  CHECK(g.same_constants(oracle::so3_epsilon()));
  CHECK(g.generator_names() == std::vector<std::string>{"X1", "X2", "X3"});
  CHECK(io::detect_kind(io::read_file(data("so3.json"))) == io::DocumentKind::Algebra);
  auto const broken = io::algebra_from_json(io::read_file(data("not_jacobi.json")));
  CHECK_FALSE(validate_algebra(broken).ok);
}

TEST_CASE("semigroup files load with 1-based entries") {
  auto const z2 = io::semigroup_from_json(io::read_file(data("z2.json")));
  CHECK(z2.table == RawTable{{0, 1}, {1, 0}});
  CHECK(z2.name == "Z2");
  auto const b = io::semigroup_from_json(io::read_file(data("table_b.json")));
  CHECK_FALSE(validate_semigroup(b.table).ok);
  CHECK(io::detect_kind(io::read_file(data("z2.json"))) == io::DocumentKind::Semigroup);
}

TEST_CASE("malformed documents are parse errors") {
  CHECK(code_of([] { io::read_file(data("truncated.json")); }) == ErrorCode::ParseError);
  CHECK(code_of([] { io::read_file(data("missing.json")); }) == ErrorCode::ParseError);
  CHECK(code_of([] { io::detect_kind(json::array()); }) == ErrorCode::ParseError);
  CHECK(code_of([] {
          io::algebra_from_json(json::parse(R"({"dim": 2, "brackets": [{"i": 1, "j": 0, "terms": []}]})"));
        })
        == ErrorCode::ParseError);
  CHECK(code_of([] {
          io::algebra_from_json(json::parse(
              R"({"dim": 2, "brackets": [{"i": 0, "j": 1, "terms": [{"k": 1, "num": 1, "den": 0}]}]})"));
        })
        == ErrorCode::ParseError);
  CHECK(code_of([] { io::semigroup_from_json(json::parse(R"({"table": [[1, 3], [3, 1]]})")); })
        == ErrorCode::ParseError);
  CHECK(code_of([] { io::semigroup_from_json(json::parse(R"({"order": 3, "table": [[1]]})")); })
        == ErrorCode::ParseError);
}

TEST_CASE("expanded algebras round-trip byte for byte") {
  for (std::size_t p = 1; p <= 3; ++p) {
    for (auto const& s : enumerate_semigroups(p, true)) {
      for (auto const& g : {special_orthogonal(3), sl2(), heisenberg3()}) {
        auto const e = s_expand(s, g);
        auto const doc = io::algebra_to_json(e.algebra(), io::ExpansionNote{s.name(), g.name(), false});
        auto const text = io::dump(doc);
        auto const back = io::algebra_from_json(json::parse(text));
        REQUIRE(back.same_constants(e.algebra()));
        REQUIRE(back.generator_names() == e.algebra().generator_names());
        REQUIRE(validate_algebra(back).ok);
        REQUIRE(io::dump(io::algebra_to_json(back, io::ExpansionNote{s.name(), g.name(), false}))
                == text);
      }
    }
  }
}

TEST_CASE("rationals serialize reduced and large integers as strings") {
  CHECK(io::rational_to_json(Rational(6, -4)) == "-3/2");
  LieAlgebra g(2, "big");
  auto const huge = Rational::from_strings("123456789012345678901234567890", "7");
  g.set_bracket(0, 1, {{1, huge}});
  auto const back = io::algebra_from_json(json::parse(io::dump(io::algebra_to_json(g))));
  CHECK(back.constant(0, 1, 1) == huge);
}

TEST_CASE("semigroup documents round-trip") {
  for (auto const& s : enumerate_semigroups(3, false)) {
    auto const doc = io::semigroup_from_json(io::semigroup_to_json(s));
    REQUIRE(doc.table == s.table());
  }
  auto const doc = io::semigroup_to_json(cyclic_group(2));
  CHECK(doc.at("table") == json::parse("[[1, 2], [2, 1]]"));
}
