#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "sexp/error.hpp"
#include "sexp/ratlin.hpp"

using namespace sexp;

namespace {

  InertiaSignature sig(std::size_t p, std::size_t m, std::size_t z) {
    return {p, m, z};
  }

  RatMatrix random_matrix(std::mt19937_64& rng, std::size_t n, long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) = Rational(d(rng));
      }
    }
    return m;
  }

  RatMatrix random_symmetric(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<long> d(-3, 3);
    std::uniform_int_distribution<long> den(1, 3);
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        m(i, j) = m(j, i) = Rational(d(rng), den(rng));
      }
    }
    return m;
  }

}  // namespace

TEST_CASE("rational arithmetic stays reduced") {
  Rational a(6, -4);
  CHECK(a.numerator_string() == "-3");
  CHECK(a.denominator_string() == "2");
  CHECK(Rational(0, 5) == Rational(0));
  CHECK(Rational(0, 5).denominator_string() == "1");
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(2, 3) * Rational(3, 2) == Rational(1));
  CHECK(Rational(-1, 2) < Rational(1, 3));
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
  auto big = Rational::from_strings("123456789012345678901234567890", "1");
  CHECK_FALSE(big.fits_long());
  CHECK((big * big / big) == big);
}

TEST_CASE("exact_inertia small cases") {
  CHECK(exact_inertia(RatMatrix{{2, 0}, {0, 2}}) == sig(2, 0, 0));
  CHECK(exact_inertia(RatMatrix{{1, 1}, {1, 2}}) == sig(2, 0, 0));
  CHECK(exact_inertia(RatMatrix{{1, 1}, {1, 1}}) == sig(1, 0, 1));
  CHECK(exact_inertia(RatMatrix{{0, 1}, {1, 0}}) == sig(1, 1, 0));
  CHECK(exact_inertia(RatMatrix(3, 3)) == sig(0, 0, 3));
  CHECK_THROWS_AS(exact_inertia(RatMatrix{{0, 1}, {2, 0}}), Error);
  try {
    exact_inertia(RatMatrix{{0, 1}, {2, 0}});
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::NonSymmetric);
  }
}

TEST_CASE("inertia of rational diagonals counts signs") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(-4, 4), den(1, 7);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t const n = 1 + trial % 6;
    RatVector diag;
    InertiaSignature want;
    for (std::size_t i = 0; i < n; ++i) {
      Rational x(d(rng), den(rng));
      diag.push_back(x);
      (x.sign() > 0 ? want.n_plus : x.sign() < 0 ? want.n_minus : want.n_zero) += 1;
    }
    CHECK(exact_inertia(RatMatrix::diagonal(diag)) == want);
  }
}

TEST_CASE("inertia matches the characteristic-polynomial oracle on all small integer matrices") {
  // every symmetric matrix of dim <= 3 with entries in {-2..2}
  for (std::size_t n = 1; n <= 3; ++n) {
    std::size_t const free = n * (n + 1) / 2;
    std::vector<long> e(free, -2);
    std::size_t count = 0;
    bool done = false;
    while (!done) {
      RatMatrix m(n, n);
      std::size_t k = 0;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
          m(i, j) = m(j, i) = Rational(e[k++]);
        }
      }
      auto const got = exact_inertia(m);
      auto const want = oracle::charpoly_inertia(m);
      REQUIRE(got.n_plus == want[0]);
      REQUIRE(got.n_minus == want[1]);
      REQUIRE(got.n_zero == want[2]);
      ++count;
      std::size_t pos = 0;
      while (pos < free && ++e[pos] > 2) {
        e[pos++] = -2;
      }
      done = pos == free;
    }
    long expected = 1;
    for (std::size_t i = 0; i < free; ++i) {
      expected *= 5;
    }
    CHECK(count == static_cast<std::size_t>(expected));
  }
}

TEST_CASE("inertia is invariant under random congruence") {
  std::mt19937_64 rng(11);
  int tested = 0;
  while (tested < 120) {
    std::size_t const n = 1 + tested % 6;
    RatMatrix const m = random_symmetric(rng, n);
    RatMatrix const a = random_matrix(rng, n, -3, 3);
    if (determinant(a).is_zero()) {
      continue;
    }
    CHECK(exact_inertia(a.transpose() * m * a) == exact_inertia(m));
    ++tested;
  }
}

TEST_CASE("rank and kernel") {
  CHECK(rational_rank(RatMatrix::identity(3)) == 3);
  CHECK(rational_rank(RatMatrix{{1, 1}, {1, 1}}) == 1);
  CHECK(kernel_basis(RatMatrix::identity(2)).empty());
  auto k = kernel_basis(RatMatrix{{1, 1}, {1, 1}});
  REQUIRE(k.size() == 1);
  CHECK(k[0] == RatVector{1, -1});
  auto k3 = kernel_basis(RatMatrix{{1, 1}, {1, 1}, {0, 0}});
  REQUIRE(k3.size() == 1);
  CHECK(k3[0] == RatVector{1, -1});

  std::mt19937_64 rng(3);
  for (int t = 0; t < 60; ++t) {
    std::size_t const n = 1 + t % 5;
    RatMatrix m = random_matrix(rng, n, -1, 1);
    auto const ker = kernel_basis(m);
    CHECK(rational_rank(m) + ker.size() == n);
    for (auto const& v : ker) {
      auto const mv = m * v;
      for (auto const& x : mv) {
        CHECK(x.is_zero());
      }
    }
  }
}

TEST_CASE("inverse, determinant and kronecker") {
  RatMatrix a{{2, 1}, {1, 1}};
  CHECK(a * inverse(a) == RatMatrix::identity(2));
  CHECK(determinant(a) == Rational(1));
  CHECK_THROWS_AS(inverse(RatMatrix{{1, 1}, {1, 1}}), Error);
  RatMatrix k = kronecker(RatMatrix{{1, 2}, {3, 4}}, RatMatrix::identity(2));
  CHECK(k.rows() == 4);
  CHECK(k(2, 0) == Rational(3));
  CHECK(k(2, 1) == Rational(0));
  CHECK(k(3, 1) == Rational(3));
}

TEST_CASE("integer eigen spectrum") {
  auto s = integer_eigen_spectrum(RatMatrix{{2, 0}, {0, 2}}, 2);
  REQUIRE(s.size() == 1);
  CHECK(s[0].eigenvalue == 2);
  CHECK(s[0].basis.size() == 2);

  auto swap = integer_eigen_spectrum(RatMatrix{{0, 1}, {1, 0}}, 2);
  REQUIRE(swap.size() == 2);
  CHECK(swap[0].eigenvalue == -1);
  CHECK(swap[0].basis[0] == RatVector{1, -1});
  CHECK(swap[1].eigenvalue == 1);
  CHECK(swap[1].basis[0] == RatVector{1, 1});
}
