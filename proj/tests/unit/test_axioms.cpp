#include <doctest.h>

#include <bit>

#include "bergfan/axioms.hpp"
#include "bergfan/catalog.hpp"
#include "bergfan/error.hpp"

using namespace bergfan;

namespace {

constexpr AxiomFamily kAll[] = {AxiomFamily::Independence, AxiomFamily::Bases,   AxiomFamily::Rank,
                                AxiomFamily::RankSubmodular, AxiomFamily::Closure, AxiomFamily::Circuits};

SetSystem present(const Graph& g, AxiomFamily f) {
  switch (f) {
    case AxiomFamily::Independence: return cycle_matroid_independent_sets(g);
    case AxiomFamily::Bases: return cycle_matroid_bases(g);
    case AxiomFamily::Rank:
    case AxiomFamily::RankSubmodular: return cycle_matroid_rank_table(g);
    case AxiomFamily::Closure: return cycle_matroid_closure_table(g);
    case AxiomFamily::Circuits: return cycle_matroid_circuits(g);
  }
  return {};
}

}  // namespace

TEST_CASE("cycle matroids on at most 4 vertices satisfy every axiom system") {
  for (int m = 1; m <= 4; ++m) {
    for (const auto& g : graphs_on(m)) {
      for (auto f : kAll) {
        const auto report = verify_matroid_axioms(present(g, f), f);
        CHECK_MESSAGE(report.holds, to_string(f));
      }
    }
  }
}

TEST_CASE("K4 presentations") {
  const Graph k4 = named_graph("k4");
  CHECK(cycle_matroid_independent_sets(k4).members.size() == 1 + 6 + 15 + 16);
  CHECK(cycle_matroid_bases(k4).members.size() == 16);
  // Circuits of K4: four triangles and three 4-cycles.
  CHECK(cycle_matroid_circuits(k4).members.size() == 7);
  CHECK(cycle_matroid_rank_table(k4).rank_table.size() == 64);
  CHECK(cycle_matroid_rank_table(k4).ground.front() == "2-3");
}

TEST_CASE("deleting a non-maximal independent set breaks the hereditary axiom") {
  const Graph k4 = named_graph("k4");
  const auto base = cycle_matroid_independent_sets(k4);
  std::size_t detected = 0;
  std::size_t mutants = 0;
  for (std::size_t i = 0; i < base.members.size(); ++i) {
    if (std::popcount(base.members[i]) == 3) continue;  // bases: deleting them keeps (I1)-(I3)
    SetSystem mutant = base;
    mutant.members.erase(mutant.members.begin() + static_cast<std::ptrdiff_t>(i));
    ++mutants;
    const auto report = verify_matroid_axioms(mutant, AxiomFamily::Independence);
    if (!report.holds && report.counterexample) ++detected;
  }
  CHECK(mutants == 22);
  CHECK(detected == mutants);
}

TEST_CASE("counterexamples name the violated axiom") {
  SetSystem sys;
  sys.ground = {"a", "b"};
  sys.members = {0b00, 0b01, 0b10, 0b11};
  CHECK(verify_matroid_axioms(sys, AxiomFamily::Independence).holds);

  sys.members = {0b01};  // empty set missing
  auto r = verify_matroid_axioms(sys, AxiomFamily::Independence);
  REQUIRE_FALSE(r.holds);
  CHECK(r.counterexample->axiom == "I1");

  sys.members = {0b00, 0b11};  // not closed under subsets
  r = verify_matroid_axioms(sys, AxiomFamily::Independence);
  REQUIRE_FALSE(r.holds);
  CHECK(r.counterexample->axiom == "I2");
  CHECK_FALSE(r.counterexample->describe(sys.ground).empty());

  sys.members = {0b01, 0b11};
  r = verify_matroid_axioms(sys, AxiomFamily::Bases);
  CHECK_FALSE(r.holds);

  // Rank table that is not submodular: r(a)=r(b)=0 but r(ab)=1.
  sys.rank_table = {0, 0, 0, 1};
  CHECK_FALSE(verify_matroid_axioms(sys, AxiomFamily::Rank).holds);
  CHECK_FALSE(verify_matroid_axioms(sys, AxiomFamily::RankSubmodular).holds);

  // Closure that is not extensive.
  sys.closure_table = {0b00, 0b00, 0b10, 0b11};
  CHECK_FALSE(verify_matroid_axioms(sys, AxiomFamily::Closure).holds);

  // Two nested circuits.
  sys.members = {0b01, 0b11};
  CHECK_FALSE(verify_matroid_axioms(sys, AxiomFamily::Circuits).holds);

  CHECK(format_subset(0b11, sys.ground) == "{a,b}");
}

TEST_CASE("size limits and malformed tables") {
  SetSystem big;
  for (std::size_t i = 0; i <= kMaxAxiomGround; ++i) big.ground.push_back(std::to_string(i));
  CHECK_THROWS_AS(verify_matroid_axioms(big, AxiomFamily::Independence), PreconditionError);
  SetSystem partial;
  partial.ground = {"a", "b"};
  partial.rank_table = {0, 1};
  CHECK_THROWS_AS(verify_matroid_axioms(partial, AxiomFamily::Rank), PreconditionError);
}
