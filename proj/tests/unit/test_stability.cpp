#include <doctest.h>

#include <map>
#include <set>

#include "bergfan/catalog.hpp"
#include "bergfan/error.hpp"
#include "bergfan/radial.hpp"
#include "bergfan/stability.hpp"
#include "oracles/oracles.hpp"

using namespace bergfan;

namespace {

SplitMask S(std::initializer_list<int> ends) { return split_from_elements(ends); }

std::vector<Graph> connected_on(int m) {
  std::vector<Graph> out;
  for (auto& g : graphs_on(m)) {
    if (is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

/// Every stable type reachable by contracting unstable-adjacent edges in any order.
std::set<TropicalType> all_reductions(const TropicalType& c, const Graph& gamma,
                                      std::map<TropicalType, std::set<TropicalType>>& memo) {
  if (auto it = memo.find(c); it != memo.end()) return it->second;
  std::set<TropicalType> out;
  const auto edges = unstable_edges(c, gamma);
  if (edges.empty()) {
    out.insert(c);
  } else {
    for (auto s : edges) {
      const auto sub = all_reductions(c.contract(s), gamma, memo);
      out.insert(sub.begin(), sub.end());
    }
  }
  memo[c] = out;
  return out;
}

bool subgraph_of(const Graph& a, const Graph& b) {
  for (const auto& e : a.edges()) {
    if (!b.has_edge(e.u, e.v)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("stability examples on K4 minus edges") {
  const Graph star_gamma = named_graph("k4-minus-e34-e35-e45");
  const auto t345 = TropicalType::from_splits(5, {S({3, 4, 5})});
  const auto report = is_gamma_stable(t345, star_gamma);
  CHECK_FALSE(report.stable);
  CHECK(report.unstable_vertex == 1U);
  CHECK(t345.is_plain_stable());
  CHECK(reduce(t345, star_gamma) == TropicalType::star(5));

  const Graph gamma = named_graph("k4-minus-e35-e45");
  CHECK(is_gamma_stable(TropicalType::from_splits(5, {S({3, 4})}), gamma).stable);
  CHECK_FALSE(is_gamma_stable(TropicalType::from_splits(5, {S({3, 5})}), gamma).stable);
  CHECK(is_gamma_stable(t345, gamma).stable);
}

TEST_CASE("every type is stable for the complete graph") {
  for (int n = 4; n <= 7; ++n) {
    const Graph k = ambient_complete(n);
    for (const auto& t : enumerate_types(n)) {
      CHECK(is_gamma_stable(t, k).stable);
      CHECK(reduce(t, k) == t);
    }
  }
}

TEST_CASE("stability agrees with the definition on an explicit tree") {
  for (int n = 4; n <= 6; ++n) {
    const auto types = enumerate_types(n);
    for (const auto& gamma : connected_on(n - 1)) {
      for (const auto& t : types) {
        const bool expected = oracle::gamma_stable(n, t.splits(), gamma);
        CHECK(is_gamma_stable(t, gamma).stable == expected);
        CHECK(unstable_edges(t, gamma).empty() == expected);
      }
    }
  }
}

TEST_CASE("strict root mode agrees with the literal reading on every type") {
  // A root with one bounded edge would need a split of n-1 ends, which types
  // never have, so the root always keeps another end or a second edge.
  for (int n = 4; n <= 6; ++n) {
    const auto types = enumerate_types(n);
    for (const auto& gamma : connected_on(n - 1)) {
      for (const auto& t : types) {
        CHECK(is_gamma_stable(t, gamma, RootStability::Strict).stable ==
              is_gamma_stable(t, gamma, RootStability::Literal).stable);
      }
    }
  }
}

TEST_CASE("reduction contracts one edge of a caterpillar") {
  // Caterpillar {2,3} < {2,3,4} < {2,3,4,5} on 6 ends with e23 missing: the
  // leaf vertex carrying 2 and 3 is unstable and its edge is contracted.
  const Graph gamma = parse_graph("2-4\n3-4\n4-5\n5-6\n2-6\n");
  const auto cat = TropicalType::from_splits(6, {S({2, 3}), S({2, 3, 4}), S({2, 3, 4, 5})});
  CHECK_FALSE(is_gamma_stable(cat, gamma).stable);
  const auto reduced = reduce(cat, gamma);
  CHECK(reduced.splits() == std::vector<SplitMask>{S({2, 3, 4}), S({2, 3, 4, 5})});
  CHECK(reduced.ends_at(*reduced.vertex_of(S({2, 3, 4}))) == S({2, 3, 4}));
  CHECK(oracle::gamma_stable(6, reduced.splits(), gamma));
}

TEST_CASE("reduction is confluent") {
  for (int n = 4; n <= 6; ++n) {
    const auto types = enumerate_types(n);
    for (const auto& gamma : connected_on(n - 1)) {
      std::map<TropicalType, std::set<TropicalType>> memo;
      for (const auto& t : types) {
        const auto results = all_reductions(t, gamma, memo);
        REQUIRE(results.size() == 1);
        CHECK(*results.begin() == reduce(t, gamma));
        CHECK(is_gamma_stable(*results.begin(), gamma).stable);
      }
    }
  }
}

TEST_CASE("stability is monotone in the graph") {
  const auto graphs = connected_on(4);
  const auto types = enumerate_types(5);
  for (const auto& small : graphs) {
    for (const auto& big : graphs) {
      if (!subgraph_of(small, big)) continue;
      for (const auto& t : types) {
        if (is_gamma_stable(t, small).stable) CHECK(is_gamma_stable(t, big).stable);
      }
    }
  }
}

TEST_CASE("stability of flats matches the clique criterion") {
  for (int n = 4; n <= 6; ++n) {
    const Graph k = ambient_complete(n);
    const auto flats = enumerate_flats(k);
    for (const auto& gamma : connected_on(n - 1)) {
      for (const auto& f : flats) {
        if (f.base.empty() || f.base == k.all_edges()) continue;
        bool some_block_empty = false;
        for (const auto& b : f.blocks) {
          bool has_edge = false;
          for (auto x : b) {
            for (auto y : b) has_edge = has_edge || (x < y && gamma.has_edge(x, y));
          }
          some_block_empty = some_block_empty || !has_edge;
        }
        CHECK(flat_gamma_stable(f, gamma) == !some_block_empty);
      }
    }
  }
  const Graph k4 = named_graph("k4");
  CHECK(flat_gamma_stable(flat_from_blocks(k4, {{3, 4, 5}}), named_graph("k4-minus-e35-e45")));
  CHECK_FALSE(flat_gamma_stable(flat_from_blocks(k4, {{3, 4}}), named_graph("k2-2")));
}

TEST_CASE("caterpillar chains keep their rank on the graph") {
  for (int m = 3; m <= 5; ++m) {
    const int n = m + 1;
    for (const auto& gamma : connected_on(m)) {
      const auto chain = caterpillar_cof(gamma);
      REQUIRE(chain.length() == static_cast<std::size_t>(n - 3));
      const Graph k = ambient_complete(n);
      for (std::size_t i = 0; i < chain.length(); ++i) {
        const auto& f = chain.flats()[i];
        REQUIRE(f.blocks.size() == 1);
        CHECK(f.rank() == i + 1);
        const EdgeSet on_gamma = gamma.edges_matching(k, f.base);
        CHECK(oracle::rank(gamma, on_gamma.bits()) == static_cast<int>(i + 1));
      }
      // The radial type is a caterpillar: one vertex per level, each with at most one child.
      const auto r = psi_cof_to_radial(n, chain);
      for (const auto& level : r.levels()) CHECK(level.size() == 1);
      for (std::size_t v = 0; v < r.type.vertex_count(); ++v) CHECK(r.type.children(v).size() <= 1);
    }
  }
  CHECK_THROWS_AS(caterpillar_cof(parse_graph("2-3\n4-5\n")), PreconditionError);
}

TEST_CASE("injectivity criteria") {
  const auto obstruction = verify_injectivity(named_graph("k4-minus-e35-e45"));
  CHECK_FALSE(obstruction.injective);
  CHECK_FALSE(obstruction.rank_preserving);
  CHECK_FALSE(obstruction.multipartite);
  REQUIRE(obstruction.rank_witness.has_value());
  CHECK(obstruction.rank_before == 2);
  CHECK(obstruction.rank_after == 1);
  CHECK(obstruction.rank_witness->blocks == std::vector<std::vector<Label>>{{3, 4, 5}});
  CHECK(obstruction.collision.has_value());
  CHECK(obstruction.triple.has_value());

  for (const char* name : {"k4", "k2-2"}) {
    const auto r = verify_injectivity(named_graph(name));
    CHECK(r.injective);
    CHECK(r.rank_preserving);
    CHECK(r.multipartite);
  }
  for (int m = 2; m <= 5; ++m) {
    for (const auto& gamma : connected_on(m)) {
      const auto r = verify_injectivity(gamma);
      CHECK(r.consistent());
      CHECK(r.multipartite == oracle::multipartite_by_partition(gamma));
    }
  }
  CHECK_THROWS_AS(verify_injectivity(Graph::complete_range(2, 8)), SizeLimitError);
}

TEST_CASE("graph preconditions") {
  const auto t = TropicalType::from_splits(5, {S({2, 3})});
  CHECK_THROWS_AS(is_gamma_stable(t, parse_graph("2-3\n3-4\n")), PreconditionError);
  CHECK_THROWS_AS(is_gamma_stable(t, parse_graph("2-3\n4-5\n")), PreconditionError);
  CHECK_THROWS_AS(is_gamma_stable(t, parse_graph("3-4\n4-5\n5-6\n")), PreconditionError);
}
