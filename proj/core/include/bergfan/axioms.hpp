#pragma once

// Exhaustive verifiers for the five cryptomorphic axiom systems of a matroid,
// run on explicitly presented data: a family of subsets, a rank table or a
// closure table over the powerset of a small ground set. Subsets are bitmasks
// over the ground list; "first counterexample" means first in the order the
// quantifiers are enumerated, which is increasing bitmask order throughout.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bergfan/graph.hpp"

namespace bergfan {

using Subset = std::uint32_t;

/// Ground sets are capped so that pair quantifiers (4^|E| instances for the
/// submodular rank axiom) stay exhaustive.
inline constexpr std::size_t kMaxAxiomGround = 10;

enum class AxiomFamily {
  Independence,    // (I1)-(I3) on members
  Bases,           // (B1) on members
  Rank,            // (R1)-(R3) on rank_table
  RankSubmodular,  // (R1')-(R3') on rank_table
  Closure,         // (S1)-(S4) on closure_table
  Circuits,        // (C1)-(C2) on members
};

std::string to_string(AxiomFamily family);

struct SetSystem {
  std::vector<std::string> ground;
  /// Independent sets, bases or circuits, depending on the family checked.
  std::vector<Subset> members;
  /// rank_table[X] for every X in the powerset, when a rank family is checked.
  std::vector<int> rank_table;
  /// closure_table[X] for every X, when the closure family is checked.
  std::vector<Subset> closure_table;
};

struct Counterexample {
  std::string axiom;  // e.g. "I2", "R3'"
  std::vector<Subset> sets;
  std::vector<std::size_t> elements;  // ground indices

  /// Human-readable form, e.g. "I2: X={a,b} Y={a}".
  [[nodiscard]] std::string describe(const std::vector<std::string>& ground) const;
};

struct AxiomReport {
  bool holds = true;
  std::optional<Counterexample> counterexample;
};

/// Throws PreconditionError when the ground set exceeds kMaxAxiomGround or a
/// required table is not total on the powerset.
AxiomReport verify_matroid_axioms(const SetSystem& sys, AxiomFamily family);

std::string format_subset(Subset s, const std::vector<std::string>& ground);

// Presentations of the cycle matroid of a graph, ground = edge labels in
// canonical order.
SetSystem cycle_matroid_independent_sets(const Graph& g);
SetSystem cycle_matroid_bases(const Graph& g);
SetSystem cycle_matroid_rank_table(const Graph& g);
SetSystem cycle_matroid_closure_table(const Graph& g);
SetSystem cycle_matroid_circuits(const Graph& g);

}  // namespace bergfan
