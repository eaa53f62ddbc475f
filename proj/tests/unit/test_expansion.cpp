#include <array>

#include "doctest.h"
#include "oracles.hpp"
#include "sexp/error.hpp"
#include "sexp/expansion.hpp"

using namespace sexp;

namespace {

  std::vector<LieAlgebra> bases() {
    return {special_orthogonal(3), sl2(), heisenberg3(), abelian(2), oracle::so3_epsilon()};
  }

  std::vector<std::size_t> idx(std::initializer_list<std::size_t> l) {
    return std::vector<std::size_t>(l);
  }

  // ([X_i, X_a], X_b) + (X_a, [X_i, X_b]) over all basis triples for a
  // rank-2 tensor.
  bool rank2_invariant_brute(LieAlgebra const& g, RatMatrix const& t) {
    std::size_t const n = g.dim();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          Rational s;
          for (auto const& term : g.bracket(i, a)) {
            s += term.coeff * t(term.index, b);
          }
          for (auto const& term : g.bracket(i, b)) {
            s += term.coeff * t(a, term.index);
          }
          if (!s.is_zero()) {
            return false;
          }
        }
      }
    }
    return true;
  }

}  // namespace

TEST_CASE("expanded constants match the defining formula") {
  for (std::size_t p = 1; p <= 3; ++p) {
    for (auto const& s : enumerate_semigroups(p, false)) {
      for (auto const& l : bases()) {
        auto const e = s_expand(s, l);
        REQUIRE(e.algebra().dim() == l.dim() * p);
        auto const want = oracle::expanded_constants(oracle::dense_constants(l), s.table());
        REQUIRE(oracle::dense_constants(e.algebra()) == want);
        REQUIRE(validate_algebra(e.algebra()).ok);
      }
    }
  }
}

TEST_CASE("index map") {
  auto const e = s_expand(cyclic_group(3), sl2());
  CHECK(e.flat_index(2, 1) == 7);
  CHECK(e.unflatten(7) == std::pair<std::size_t, std::size_t>{2, 1});
  CHECK(e.algebra().generator_names()[7] == "l2*f");
}

TEST_CASE("expanded Killing forms") {
  auto const so3 = special_orthogonal(3);
  auto const z2 = s_expand(cyclic_group(2), so3);
  CHECK(expanded_killing(z2) == Rational(-4) * RatMatrix::identity(6));
  CHECK(exact_inertia(expanded_killing(z2)).character() == -6);

  auto const trivial = s_expand(trivial_semigroup(), so3);
  CHECK(trivial.algebra().same_constants(so3));

  auto const null = s_expand(null_semigroup(2), so3);
  RatMatrix const want = kronecker(Rational(-2) * RatMatrix::identity(3), RatMatrix{{1, 1}, {1, 1}});
  CHECK(expanded_killing(null) == want);
  CHECK(exact_inertia(want) == InertiaSignature{0, 3, 3});
  auto const kron = oracle::charpoly_inertia(want);
  CHECK(kron == std::array<std::size_t, 3>{0, 3, 3});

  CHECK(expanded_killing(s_expand(chain_semilattice(3), abelian(2))).is_zero());

  // semilattice with the identity first reproduces the [[2,1],[1,1]] blocks
  auto const sl = s_expand(Semigroup::from_table({{0, 1}, {1, 1}}), so3);
  CHECK(expanded_killing(sl)
        == kronecker(Rational(-2) * RatMatrix::identity(3), RatMatrix{{2, 1}, {1, 1}}));
}

TEST_CASE("Killing form of the expansion factors as g (x) M_K") {
  for (std::size_t p = 1; p <= 3; ++p) {
    for (auto const& s : enumerate_semigroups(p, false)) {
      for (auto const& l : bases()) {
        auto const e = s_expand(s, l);
        auto const g = expanded_killing(e);
        REQUIRE(g == kronecker(killing_form(l), mk_matrix(s).to_rational()));
        REQUIRE(g == oracle::killing_by_trace(oracle::dense_constants(e.algebra())));
      }
    }
  }
}

TEST_CASE("zero reduction") {
  auto const so3 = special_orthogonal(3);
  auto const chain = zero_reduce(s_expand(chain_semilattice(2), so3));
  CHECK(chain.dim() == 3);
  CHECK(chain.same_constants(so3));

  auto const null = zero_reduce(s_expand(null_semigroup(2), so3));
  CHECK(null.dim() == 3);
  CHECK(null.is_abelian());

  CHECK(zero_reduce(s_expand(trivial_semigroup(), so3)).dim() == 0);

  CHECK_THROWS_AS(zero_reduce(s_expand(cyclic_group(2), so3)), Error);
  try {
    zero_reduce(s_expand(cyclic_group(2), so3));
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::NoZeroElement);
  }

  for (std::size_t p = 1; p <= 4; ++p) {
    for (auto const& s : enumerate_semigroups(p, true)) {
      if (!zero_element(s)) {
        continue;
      }
      for (auto const& l : bases()) {
        auto const r = zero_reduce(s_expand(s, l));
        REQUIRE(r.dim() == l.dim() * (p - 1));
        REQUIRE(validate_algebra(r).ok);
      }
    }
  }
}

TEST_CASE("resonance conditions") {
  auto const so3 = oracle::so3_epsilon();
  auto const z2 = cyclic_group(2);
  ResonantDecomposition d;
  d.g_partition = {{2}, {0, 1}};
  d.s_partition = {{0}, {1}};
  d.bracket_targets = {{{0, 0}, {0}}, {{0, 1}, {1}}, {{1, 1}, {0}}};
  CHECK(check_resonance(z2, so3, d).ok);

  auto coarse = d;
  coarse.s_partition = {{0, 1}, {0, 1}};
  CHECK(check_resonance(z2, so3, coarse).ok);

  // V0 = {X1}, V1 = {X2, X3} with [V0, V1] declared to land in V0 only
  ResonantDecomposition bad;
  bad.g_partition = {{0}, {1, 2}};
  bad.s_partition = {{0}, {1}};
  bad.bracket_targets = {{{0, 0}, {0}}, {{0, 1}, {0}}, {{1, 1}, {0}}};
  auto const r = check_resonance(z2, so3, bad);
  CHECK_FALSE(r.ok);
  CHECK(r.message.find("(0, 1)") != std::string::npos);
  CHECK_THROWS_AS(resonant_subalgebra(z2, so3, bad), Error);

  // the algebra condition holds but S0 = S1 = {g} fails: g g = e is in no S_r
  auto semigroup_fail = d;
  semigroup_fail.s_partition = {{1}, {1}};
  auto const r2 = check_resonance(z2, so3, semigroup_fail);
  CHECK_FALSE(r2.ok);
  CHECK(r2.message.find("semigroup condition") != std::string::npos);

  ResonantDecomposition malformed = d;
  malformed.g_partition = {{2}, {0, 2}};
  CHECK_THROWS_AS(check_resonance(z2, so3, malformed), Error);
  malformed.g_partition = {{2}, {0}};
  CHECK_THROWS_AS(check_resonance(z2, so3, malformed), Error);
  malformed = d;
  malformed.s_partition = {{0}};
  CHECK_THROWS_AS(check_resonance(z2, so3, malformed), Error);
}

TEST_CASE("resonant subalgebras") {
  auto const so3 = oracle::so3_epsilon();
  auto const z2 = cyclic_group(2);
  ResonantDecomposition d;
  d.g_partition = {{2}, {0, 1}};
  d.s_partition = {{0}, {1}};
  d.bracket_targets = {{{0, 0}, {0}}, {{0, 1}, {1}}, {{1, 1}, {0}}};
  auto const sub = resonant_subalgebra(z2, so3, d);
  CHECK(sub.embedding == idx({1, 3, 4}));
  CHECK(sub.algebra.generator_names()
        == std::vector<std::string>{"l2*X1", "l2*X2", "l1*X3"});
  CHECK(sub.algebra.same_constants(so3));
  CHECK(validate_algebra(sub.algebra).ok);

  ResonantDecomposition whole;
  whole.g_partition = {{0, 1, 2}};
  whole.s_partition = {{0, 1}};
  whole.bracket_targets = {{{0, 0}, {0}}};
  auto const all = resonant_subalgebra(z2, so3, whole);
  CHECK(all.algebra.same_constants(s_expand(z2, so3).algebra()));

  auto const one = resonant_subalgebra(trivial_semigroup(), so3, [] {
    ResonantDecomposition t;
    t.g_partition = {{2}, {0, 1}};
    t.s_partition = {{0}, {0}};
    t.bracket_targets = {{{0, 0}, {0}}, {{0, 1}, {1}}, {{1, 1}, {0}}};
    return t;
  }());
  CHECK(one.algebra.same_constants(so3));
}

TEST_CASE("resonant subalgebra closure over sl2 and small semigroups") {
  // sl2 = h (+) {e, f}: [h, e/f] in {e, f}, [e, f] in h
  auto const g = sl2();
  for (std::size_t p = 1; p <= 3; ++p) {
    for (auto const& s : enumerate_semigroups(p, true)) {
      // S0 = squares of S1 plus S1 times... use the full semigroup for V0 and
      // its subsemigroup generated closure for V1
      ResonantDecomposition d;
      d.g_partition = {{0}, {1, 2}};
      std::vector<std::size_t> all(p);
      for (std::size_t a = 0; a < p; ++a) {
        all[a] = a;
      }
      d.s_partition = {all, all};
      d.bracket_targets = {{{0, 1}, {1}}, {{1, 1}, {0}}};
      REQUIRE(check_resonance(s, g, d).ok);
      auto const sub = resonant_subalgebra(s, g, d);
      REQUIRE(validate_algebra(sub.algebra).ok);
      REQUIRE(sub.algebra.dim() == 3 * p);
    }
  }
}

TEST_CASE("n-selectors") {
  auto const z2 = cyclic_group(2);
  CHECK(n_selector(z2, idx({1, 1, 1})) == 1);
  CHECK(n_selector(chain_semilattice(2), idx({1, 1, 0})) == 0);
  for (std::size_t a = 0; a < 3; ++a) {
    CHECK(n_selector(cyclic_group(3), idx({a})) == a);
  }
  CHECK_THROWS_AS(n_selector(z2, idx({})), Error);
  CHECK_THROWS_AS(n_selector(z2, idx({2})), Error);
}

TEST_CASE("tensors") {
  Tensor t(3, 2);
  CHECK(t.data().size() == 8);
  t.at(idx({1, 0, 1})) = Rational(5);
  CHECK(t.data()[5] == Rational(5));
  CHECK_FALSE(t.is_zero());
  CHECK_THROWS_AS(t.at(idx({0, 0})), Error);
  auto const m = RatMatrix{{1, 2}, {3, 4}};
  CHECK(Tensor::from_matrix(m).to_matrix() == m);
}

TEST_CASE("ad-invariance of base tensors") {
  auto const so3 = special_orthogonal(3);
  CHECK(is_ad_invariant(so3, Tensor::from_matrix(killing_form(so3))));
  CHECK_FALSE(is_ad_invariant(so3, Tensor::from_matrix(RatMatrix::diagonal({1, 2, 3}))));
  // rank 3: the structure constants lowered by the Killing form, f_abc = ([a,b], c)
  auto const g = sl2();
  auto const k = killing_form(g);
  Tensor f(3, 3);
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = 0; b < 3; ++b) {
      for (std::size_t c = 0; c < 3; ++c) {
        Rational v;
        for (auto const& t : g.bracket(a, b)) {
          v += t.coeff * k(t.index, c);
        }
        f.at(idx({a, b, c})) = v;
      }
    }
  }
  CHECK(is_ad_invariant(g, f));
  CHECK(rank2_invariant_brute(so3, killing_form(so3)));
}

TEST_CASE("expanded invariant tensors") {
  auto const so3 = special_orthogonal(3);
  auto const chain = chain_semilattice(2);
  auto const base = Tensor::from_matrix(killing_form(so3));
  auto const t = expand_invariant_tensor(chain, so3, base, {Rational(1)});
  auto const reduced = zero_reduce(s_expand(chain, so3));
  CHECK(t.to_matrix() == killing_form(reduced));
  CHECK(is_ad_invariant(reduced, t));

  auto const zero = expand_invariant_tensor(null_semigroup(3), sl2(),
                                            Tensor::from_matrix(killing_form(sl2())),
                                            {Rational(0), Rational(0)});
  CHECK(zero.is_zero());

  auto const null3 = null_semigroup(3);
  auto const r3 = zero_reduce(s_expand(null3, sl2()));
  auto const tn = expand_invariant_tensor(null3, sl2(), Tensor::from_matrix(killing_form(sl2())),
                                          {Rational(3, 2), Rational(-7)});
  CHECK(is_ad_invariant(r3, tn));
  CHECK(rank2_invariant_brute(r3, tn.to_matrix()));

  CHECK_THROWS_AS(expand_invariant_tensor(cyclic_group(2), so3, base, {Rational(1)}), Error);
  CHECK_THROWS_AS(expand_invariant_tensor(chain, so3,
                                          Tensor::from_matrix(RatMatrix::diagonal({1, 2, 3})),
                                          {Rational(1)}),
                  Error);
  CHECK_THROWS_AS(expand_invariant_tensor(chain, so3, base, {}), Error);
}

TEST_CASE("expanded invariant tensors stay invariant across small semigroups") {
  auto const g = sl2();
  auto const k = killing_form(g);
  Tensor f3(3, 3);
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = 0; b < 3; ++b) {
      for (std::size_t c = 0; c < 3; ++c) {
        Rational v;
        for (auto const& t : g.bracket(a, b)) {
          v += t.coeff * k(t.index, c);
        }
        f3.at(idx({a, b, c})) = v;
      }
    }
  }
  for (std::size_t p = 2; p <= 4; ++p) {
    for (auto const& s : enumerate_semigroups(p, true)) {
      if (!zero_element(s)) {
        continue;
      }
      auto const reduced = zero_reduce(s_expand(s, g));
      std::vector<Rational> alphas;
      for (std::size_t j = 1; j < p; ++j) {
        alphas.emplace_back(static_cast<long>(j * j + 1), 3L);
      }
      auto const t2 = expand_invariant_tensor(s, g, Tensor::from_matrix(k), alphas);
      REQUIRE(is_ad_invariant(reduced, t2));
      auto const t3 = expand_invariant_tensor(s, g, f3, alphas);
      REQUIRE(is_ad_invariant(reduced, t3));
    }
  }
}

TEST_CASE("inner-product axioms on random vectors") {
  auto const so3 = special_orthogonal(3);
  auto const z = verify_inner_product_axioms(s_expand(cyclic_group(2), so3), 50);
  CHECK(z.ok());
  CHECK(z.checks == 200);
  CHECK(verify_inner_product_axioms(s_expand(null_semigroup(2), so3), 50).ok());
  auto const a = verify_inner_product_axioms(s_expand(chain_semilattice(3), sl2()), 20, 99);
  auto const b = verify_inner_product_axioms(s_expand(chain_semilattice(3), sl2()), 20, 99);
  CHECK(a.checks == b.checks);
  // an asymmetric "form" must be caught
  auto const bad = verify_inner_product_axioms(RatMatrix{{0, 1}, {0, 0}}, 10);
  CHECK_FALSE(bad.ok());
  CHECK(bad.first_failure.find("symmetry") != std::string::npos);
}

TEST_CASE("selector identity and ad-invariance") {
  for (std::size_t p = 1; p <= 4; ++p) {
    for (auto const& s : enumerate_semigroups(p, false)) {
      REQUIRE(selector_identity_holds(s));
    }
  }
  CHECK(verify_ad_invariance(s_expand(cyclic_group(2), special_orthogonal(3))).ok());
  CHECK(verify_ad_invariance(s_expand(chain_semilattice(2), sl2())).ok());
  CHECK(verify_ad_invariance(s_expand(trivial_semigroup(), special_orthogonal(3))).ok());
  // a non-invariant form is detected
  auto const e = s_expand(cyclic_group(2), special_orthogonal(3));
  auto const bad = verify_ad_invariance(e, RatMatrix::diagonal({1, 2, 3, 4, 5, 6}));
  CHECK_FALSE(bad.killing_invariance);
  CHECK(bad.selector_identity);
}
