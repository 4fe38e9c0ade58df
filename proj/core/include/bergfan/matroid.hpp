#pragma once

// Cycle matroid M(G) of a graph: independent sets are forests, the rank of an
// edge set is the size of a spanning forest, and the closure of an edge set is
// obtained by completing every connected component inside the ambient complete
// graph and intersecting with G.

#include <cstddef>
#include <utility>
#include <vector>

#include "bergfan/graph.hpp"

namespace bergfan {

/// A closed edge set of M(G) together with the vertex blocks of its
/// components. In a complete graph a flat is the cluster graph on its blocks.
struct Flat {
  EdgeSet base;
  std::vector<std::vector<Label>> blocks;

  /// #vertices covered by blocks minus #blocks.
  [[nodiscard]] std::size_t rank() const;

  friend bool operator==(const Flat& a, const Flat& b) { return a.base == b.base; }
};

/// Strictly increasing chain F_1 < ... < F_r of proper nonempty flats of one
/// graph's cycle matroid.
class ChainOfFlats {
 public:
  ChainOfFlats() = default;

  /// Validates: every flat proper, nonempty and closed in g; strict
  /// containment and strictly increasing rank. Throws PreconditionError.
  ChainOfFlats(const Graph& g, std::vector<Flat> flats);

  [[nodiscard]] const std::vector<Flat>& flats() const { return flats_; }
  [[nodiscard]] std::size_t length() const { return flats_.size(); }

  friend bool operator==(const ChainOfFlats&, const ChainOfFlats&) = default;

 private:
  std::vector<Flat> flats_;
};

/// Acyclic?
bool is_independent(const Graph& g, EdgeSet s);

/// Smallest flat containing s.
Flat closure(const Graph& g, EdgeSet s);

/// Flat from its edge set; throws PreconditionError if s is not closed.
Flat make_flat(const Graph& g, EdgeSet s);

/// The flat of g whose components are the given vertex blocks, i.e. the
/// closure of the cluster graph on the blocks intersected with g.
Flat flat_from_blocks(const Graph& g, const std::vector<std::vector<Label>>& blocks);

std::size_t rank(const Graph& g, EdgeSet s);

bool is_flat(const Graph& g, EdgeSet s);

/// Largest vertex count accepted by the flat enumerations.
inline constexpr std::size_t kMaxFlatVertices = 10;

/// Every flat of M(g), including the empty flat and E(g), sorted by rank and
/// then canonical edge order. Enumerates set partitions of the label set.
std::vector<Flat> enumerate_flats(const Graph& g);

struct FlatLattice {
  std::vector<Flat> flats;  // as enumerate_flats
  /// Covering pairs (lower, upper) as indices into flats, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> covers;
};

FlatLattice flats_lattice(const Graph& g);

/// All chains of proper nonempty flats with exactly r members, in
/// lexicographic order of flat indices.
std::vector<ChainOfFlats> enumerate_chains(const Graph& g, std::size_t r);

/// Chains of every length 0..rank(g)-1; the empty chain comes first.
std::vector<ChainOfFlats> enumerate_all_chains(const Graph& g);

}  // namespace bergfan
