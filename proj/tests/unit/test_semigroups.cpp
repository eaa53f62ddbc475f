#include <numeric>

#include "doctest.h"
#include "oracles.hpp"
#include "sexp/error.hpp"
#include "sexp/semigroup.hpp"

using namespace sexp;

namespace {

  Permutation compose(Permutation const& outer, Permutation const& inner) {
    Permutation out(inner.size());
    for (std::size_t i = 0; i < inner.size(); ++i) {
      out[i] = outer[inner[i]];
    }
    return out;
  }

  bool is_hom(Semigroup const& a, Semigroup const& b, Permutation const& p) {
    for (std::size_t x = 0; x < a.order(); ++x) {
      for (std::size_t y = 0; y < a.order(); ++y) {
        if (p[a.product(x, y)] != b.product(p[x], p[y])) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace

TEST_CASE("validation of order-2 tables") {
  CHECK(validate_semigroup({{0, 1}, {1, 0}}).ok);
  auto b = validate_semigroup({{1, 0}, {0, 0}});
  CHECK_FALSE(b.ok);
  CHECK(b.associativity_witness.has_value());
  CHECK(b.message.find("associative") != std::string::npos);
  auto d = validate_semigroup({{1, 1}, {1, 0}});
  CHECK_FALSE(d.ok);
  CHECK(d.associativity_witness.has_value());
  auto nc = validate_semigroup({{0, 0}, {1, 1}});
  CHECK_FALSE(nc.ok);
  CHECK(nc.commutativity_witness.has_value());
  CHECK_THROWS_AS(validate_semigroup({{0, 2}, {2, 0}}), Error);
  CHECK_THROWS_AS(validate_semigroup({{0, 1}, {1}}), Error);
  CHECK_THROWS_AS(Semigroup::from_table({{1, 0}, {0, 0}}), Error);
}

TEST_CASE("selectors") {
  SelectorTensor k(cyclic_group(2));
  CHECK(k(0, 0, 0) == 1);
  CHECK(k(0, 1, 1) == 1);
  CHECK(k(1, 0, 1) == 1);
  CHECK(k(1, 1, 0) == 1);
  CHECK(k(1, 1, 1) == 0);
  CHECK(k(0, 1, 0) == 0);
  CHECK(SelectorTensor(trivial_semigroup())(0, 0, 0) == 1);
  SelectorTensor c(chain_semilattice(2));
  CHECK(c(0, 0, 0) == 1);
  CHECK(c(0, 1, 0) == 1);
  CHECK(c(1, 1, 1) == 1);
  CHECK(c(1, 1, 0) == 0);
}

TEST_CASE("M_K matrices of named semigroups") {
  CHECK(mk_matrix(cyclic_group(2)).rows() == std::vector<std::vector<long>>{{2, 0}, {0, 2}});
  CHECK(mk_matrix(chain_semilattice(2)).rows() == std::vector<std::vector<long>>{{1, 1}, {1, 2}});
  CHECK(mk_matrix(Semigroup::from_table({{0, 1}, {1, 1}})).rows()
        == std::vector<std::vector<long>>{{2, 1}, {1, 1}});
  CHECK(mk_matrix(null_semigroup(2)).rows() == std::vector<std::vector<long>>{{1, 1}, {1, 1}});
  CHECK(mk_matrix(trivial_semigroup()).rows() == std::vector<std::vector<long>>{{1}});
  // non-associative tables from the case study
  CHECK(mk_matrix_of_table({{1, 0}, {0, 0}}).rows() == std::vector<std::vector<long>>{{2, 1}, {1, 1}});
  CHECK(mk_matrix_of_table({{1, 1}, {1, 0}}).rows() == std::vector<std::vector<long>>{{1, 1}, {1, 2}});
}

TEST_CASE("zero and identity elements") {
  CHECK_FALSE(zero_element(cyclic_group(2)).has_value());
  CHECK(zero_element(chain_semilattice(2)) == std::optional<std::size_t>(0));
  CHECK(zero_element(null_semigroup(2)) == std::optional<std::size_t>(0));
  CHECK(identity_element(cyclic_group(3)) == std::optional<std::size_t>(0));
  CHECK(identity_element(chain_semilattice(3)) == std::optional<std::size_t>(2));
  CHECK_FALSE(identity_element(null_semigroup(2)).has_value());
  CHECK(idempotent_count(chain_semilattice(4)) == 4);
  CHECK(idempotent_count(cyclic_group(4)) == 1);
}

TEST_CASE("enumeration counts agree with the all-tables oracle") {
  for (std::size_t p = 1; p <= 3; ++p) {
    CAPTURE(p);
    auto const brute = oracle::all_commutative_semigroups(p);
    auto const labeled = enumerate_semigroups(p, false);
    REQUIRE(labeled.size() == brute.size());
    for (std::size_t i = 0; i < brute.size(); ++i) {
      CHECK(labeled[i].table() == brute[i]);
    }
    CHECK(enumerate_semigroups(p, true).size() == oracle::iso_class_count(brute));
  }
  CHECK(enumerate_semigroups(2, false).size() == 6);
  CHECK(enumerate_semigroups(2, true).size() == 3);
  CHECK(enumerate_semigroups(3, false).size() == 63);
  CHECK(enumerate_semigroups(3, true).size() == 12);
  CHECK(enumerate_semigroups(4, false).size() == 1140);
  CHECK(enumerate_semigroups(4, true).size() == 58);
}

TEST_CASE("iso representatives are lexicographically minimal and pairwise non-isomorphic") {
  for (std::size_t p = 1; p <= 4; ++p) {
    auto const reps = enumerate_semigroups(p, true);
    for (std::size_t i = 0; i < reps.size(); ++i) {
      CHECK(canonical_form(reps[i]) == reps[i]);
      for (std::size_t j = i + 1; j < reps.size(); ++j) {
        CHECK_FALSE(is_isomorphic(reps[i], reps[j]).has_value());
      }
    }
  }
}

TEST_CASE("isomorphism testing") {
  auto const z2a = cyclic_group(2);
  auto const z2b = Semigroup::from_table({{1, 0}, {0, 1}});
  auto const perm = is_isomorphic(z2a, z2b);
  REQUIRE(perm.has_value());
  CHECK(*perm == Permutation{1, 0});
  CHECK_FALSE(is_isomorphic(z2a, null_semigroup(2)).has_value());
  auto const self = is_isomorphic(chain_semilattice(3), chain_semilattice(3));
  REQUIRE(self.has_value());
  CHECK(*self == Permutation{0, 1, 2});
}

TEST_CASE("isomorphism is an equivalence on the labeled sets") {
  for (std::size_t p = 2; p <= 3; ++p) {
    auto const all = enumerate_semigroups(p, false);
    for (std::size_t i = 0; i < all.size(); ++i) {
      auto const refl = is_isomorphic(all[i], all[i]);
      REQUIRE(refl.has_value());
      for (std::size_t j = 0; j < all.size(); ++j) {
        auto const ij = is_isomorphic(all[i], all[j]);
        auto const ji = is_isomorphic(all[j], all[i]);
        CHECK(ij.has_value() == ji.has_value());
        if (!ij) {
          continue;
        }
        CHECK(is_hom(all[i], all[j], *ij));
        // transitivity through the canonical representative
        auto const to_canon = is_isomorphic(all[j], canonical_form(all[j]));
        REQUIRE(to_canon.has_value());
        CHECK(is_hom(all[i], canonical_form(all[j]), compose(*to_canon, *ij)));
      }
    }
  }
}

TEST_CASE("relabel produces an isomorphic copy") {
  auto const s = chain_semilattice(3);
  Permutation const p{2, 0, 1};
  auto const r = relabel(s, p);
  CHECK(is_hom(s, r, p));
}

TEST_CASE("M_K and selector properties over all small semigroups") {
  for (std::size_t p = 1; p <= 4; ++p) {
    for (auto const& s : enumerate_semigroups(p, false)) {
      auto const mk = mk_matrix(s);
      auto const want = oracle::mk_by_selectors(s.table());
      SelectorTensor const k(s);
      for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t j = 0; j < p; ++j) {
          REQUIRE(mk(i, j) == want[i][j]);
          REQUIRE(mk(i, j) == mk(j, i));
          REQUIRE(mk(i, j) >= 0);
          REQUIRE(mk(i, j) <= static_cast<long>(p));
          int sum = 0;
          for (std::size_t c = 0; c < p; ++c) {
            sum += k(i, j, c);
            REQUIRE(k(i, j, c) == k(j, i, c));
          }
          REQUIRE(sum == 1);
        }
      }
    }
  }
}

TEST_CASE("triangular selector pair count") {
  CHECK(selector_pair_count(trivial_semigroup()) == 1);
  CHECK(selector_pair_count(cyclic_group(3)) == 6);
  CHECK(selector_pair_count(chain_semilattice(4)) == 10);
  for (auto const& s : enumerate_semigroups(4, true)) {
    std::size_t pairs = 0;
    for (std::size_t a = 0; a < 4; ++a) {
      for (std::size_t b = a; b < 4; ++b) {
        ++pairs;
      }
    }
    CHECK(selector_pair_count(s) == pairs);
  }
}

TEST_CASE("named semigroups") {
  CHECK(named_semigroup("z2") == cyclic_group(2));
  CHECK(named_semigroup("Z3") == cyclic_group(3));
  CHECK(named_semigroup("null2") == null_semigroup(2));
  CHECK(named_semigroup("semilattice2") == chain_semilattice(2));
  CHECK(named_semigroup("chain3") == chain_semilattice(3));
  CHECK(named_semigroup("trivial") == trivial_semigroup());
  CHECK_THROWS_AS(named_semigroup("monster"), Error);
  CHECK(render_table(cyclic_group(2)).find("l2") != std::string::npos);
}
