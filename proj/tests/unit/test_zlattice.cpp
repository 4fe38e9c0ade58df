#include <doctest.h>

#include <limits>
#include <random>

#include "bergfan/error.hpp"
#include "bergfan/zlattice.hpp"
#include "oracles/oracles.hpp"

using namespace bergfan;
using namespace bergfan::zlattice;

TEST_CASE("gcd and Bezout coefficients") {
  CHECK(zlattice::gcd(12, -18) == 6);
  CHECK(zlattice::gcd(0, 0) == 0);
  for (Int a = -20; a <= 20; ++a) {
    for (Int b = -20; b <= 20; ++b) {
      const auto e = extended_gcd(a, b);
      CHECK(e.g == std::gcd(a, b));
      CHECK(e.s * a + e.t * b == e.g);
    }
  }
  CHECK(floor_div(-7, 2) == -4);
  CHECK(floor_div(7, 2) == 3);
}

TEST_CASE("checked arithmetic reports overflow") {
  const Int big = std::numeric_limits<Int>::max();
  CHECK_THROWS_AS(checked_add(big, 1), OverflowError);
  CHECK_THROWS_AS(checked_mul(big, 2), OverflowError);
  CHECK(checked_mul(-3, 4) == -12);
}

TEST_CASE("content and primitive vectors") {
  CHECK(content({4, -6, 0}) == 2);
  CHECK(primitive({4, -6, 0}) == Vector{2, -3, 0});
  CHECK(primitive({0, 0}) == Vector{0, 0});
}

TEST_CASE("integer kernel") {
  const Rows k = integer_kernel({{1, 1, 1}}, 3);
  REQUIRE(k.size() == 2);
  for (const auto& v : k) CHECK(dot(v, {1, 1, 1}) == 0);
  // The kernel basis is saturated: its maximal minors are coprime.
  CHECK(oracle::maximal_minor_gcd(k) == 1);
  const Rows k2 = integer_kernel({{2, 4, 6}, {1, 0, 1}}, 3);
  REQUIRE(k2.size() == 1);
  CHECK(dot(k2[0], {2, 4, 6}) == 0);
  CHECK(dot(k2[0], {1, 0, 1}) == 0);
  CHECK(content(k2[0]) == 1);
}

TEST_CASE("saturation has index one over its span") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<Int> entry(-4, 4);
  for (int trial = 0; trial < 200; ++trial) {
    Rows vs(2, Vector(4));
    for (auto& v : vs) {
      for (auto& x : v) x = entry(rng);
    }
    if (zlattice::rank(vs, 4) < 2) continue;
    const Rows sat = saturation(vs, 4);
    REQUIRE(sat.size() == 2);
    CHECK(oracle::maximal_minor_gcd(sat) == 1);
    for (const auto& v : vs) CHECK(in_rational_span(v, sat, 4));
    // Index of the original lattice in its saturation.
    const auto index = oracle::maximal_minor_gcd(vs);
    CHECK(index % oracle::maximal_minor_gcd(sat) == 0);
  }
}

TEST_CASE("Hermite normal form") {
  const Rows basis{{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}};
  const Rows h = hermite_normal_form(basis, 3);
  REQUIRE(h.size() == 3);
  for (std::size_t i = 0; i < h.size(); ++i) {
    CHECK(h[i][i] > 0);
    for (std::size_t j = 0; j < i; ++j) CHECK(h[i][j] == 0);
    for (std::size_t r = 0; r < i; ++r) {
      CHECK(h[r][i] >= 0);
      CHECK(h[r][i] < h[i][i]);
    }
  }
  CHECK(std::abs(oracle::determinant(h)) == std::abs(oracle::determinant(basis)));
  CHECK(hermite_normal_form({{0, 0}}, 2).empty());
}

TEST_CASE("reduction modulo a lattice gives a unique representative") {
  const Rows basis{{2, 1, 0}, {0, 3, 1}};
  const Rows h = hermite_normal_form(basis, 3);
  const Vector v{5, 7, 2};
  const Vector r = reduce_modulo(v, h);
  for (Int a = -3; a <= 3; ++a) {
    for (Int b = -3; b <= 3; ++b) {
      const Vector w = add(v, add(scale(basis[0], a), scale(basis[1], b)));
      CHECK(reduce_modulo(w, h) == r);
    }
  }
}

TEST_CASE("rank and rational span") {
  CHECK(zlattice::rank({{1, 2}, {2, 4}}, 2) == 1);
  CHECK(zlattice::rank({}, 3) == 0);
  CHECK(in_rational_span({3, 6}, {{1, 2}}, 2));
  CHECK_FALSE(in_rational_span({3, 5}, {{1, 2}}, 2));
  CHECK(in_rational_span({0, 0}, {}, 2));
}
