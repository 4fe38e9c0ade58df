#include <doctest.h>

#include <random>

#include "bergfan/catalog.hpp"
#include "bergfan/moduli.hpp"
#include "bergfan/qn.hpp"
#include "bergfan/radial.hpp"
#include "oracles/metrics.hpp"

using namespace bergfan;

TEST_CASE("aligned metrics land in the interior of their chain cone") {
  std::mt19937 rng(2024);
  for (int n = 4; n <= 6; ++n) {
    for (const auto& t : enumerate_types(n)) {
      for (const auto& r : radial_alignments(t)) {
        const auto rays = oracle::chain_rays(r);
        for (int sample = 0; sample < 10; ++sample) {
          const auto image = psi_linear(dist_vector(oracle::radial_metric(r, rng)));
          CHECK(oracle::in_relative_interior(image.coords(), rays));
        }
      }
    }
  }
}

TEST_CASE("a metric that is not radially aligned leaves the cone of every alignment") {
  // Two cherries at different radii are aligned as two levels, not one.
  const auto t = TropicalType::from_splits(5, {split_from_elements({2, 3}), split_from_elements({4, 5})});
  const MetricType m{t, {Rational(1), Rational(2)}};
  const auto image = psi_linear(dist_vector(m));
  std::size_t hits = 0;
  for (const auto& r : radial_alignments(t)) {
    if (oracle::in_relative_interior(image.coords(), oracle::chain_rays(r))) ++hits;
  }
  CHECK(hits == 1);
  const RadialType one_level{t, {0, 1, 1}};
  CHECK_FALSE(oracle::in_relative_interior(image.coords(), oracle::chain_rays(one_level)));
}

TEST_CASE("level count equals chain length, both directions, n = 7") {
  const int n = 7;
  std::size_t radial = 0;
  for (const auto& t : enumerate_types(n)) {
    for (const auto& r : radial_alignments(t)) {
      CHECK(psi_radial_to_cof(r).length() == r.level_count());
      ++radial;
    }
  }
  CHECK(radial == enumerate_all_chains(ambient_complete(n)).size());
}

TEST_CASE("radial complex of a graph covers exactly the stable radial types") {
  for (const char* name : {"k4-minus-e35-e45", "k2-2", "k4-minus-e25"}) {
    const Graph gamma = named_graph(name);
    const auto m = moduli_fan_rad(5, gamma);
    std::size_t expected = 0;
    for (const auto& t : enumerate_types(5)) {
      if (!is_gamma_stable(t, gamma).stable) continue;
      expected += radial_alignments(t).size();
    }
    CHECK(m.radial_types.size() == expected);
    CHECK(m.complex.cones().size() == expected);
  }
}

TEST_CASE("image fans of complete multipartite graphs on five vertices are balanced") {
  for (const auto& g : graphs_on(5)) {
    if (!is_connected(g) || !is_complete_multipartite(g).multipartite) continue;
    const auto m = moduli_fan_rad(6, g);
    CHECK(m.identified());
    CHECK(is_balanced(m.image).balanced);
  }
}
