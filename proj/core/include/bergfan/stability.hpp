#pragma once

// Stability of combinatorial types relative to a graph Gamma on labels 2..n,
// the reduction that contracts edges at unstable vertices, and the rank and
// injectivity criteria for projecting onto the edges of Gamma.

#include <array>
#include <cstddef>
#include <optional>
#include <utility>

#include "bergfan/graph.hpp"
#include "bergfan/matroid.hpp"
#include "bergfan/tropical.hpp"

namespace bergfan {

enum class RootStability {
  /// End 1 counts as an end at the root, so the root condition always holds.
  Literal,
  /// Only ends other than 1 count at the root.
  Strict,
};

struct StabilityReport {
  bool stable = true;
  /// First unstable vertex in vertex order.
  std::optional<std::size_t> unstable_vertex;
};

/// A non-root vertex with d bounded edges and end set I passes when d > 2,
/// when d == 2 and I is nonempty, or when d == 1 and Gamma has an edge inside
/// I. The root passes with at least two bounded edges or at least one end.
/// Gamma must be connected with labels exactly 2..n.
StabilityReport is_gamma_stable(const TropicalType& c, const Graph& gamma,
                                RootStability mode = RootStability::Literal);

/// Bounded edges (as splits) touching a Gamma-unstable vertex, canonically
/// ordered.
std::vector<SplitMask> unstable_edges(const TropicalType& c, const Graph& gamma,
                                      RootStability mode = RootStability::Literal);

/// Contracts the first unstable-adjacent edge in canonical order until the
/// type is Gamma-stable.
TropicalType reduce(const TropicalType& c, const Graph& gamma,
                    RootStability mode = RootStability::Literal);

/// Is the type of the length-one chain (F) Gamma-stable?
bool flat_gamma_stable(const Flat& f, const Graph& gamma);

/// Chain K_{I_1} < ... < K_{I_{n-3}} of flats of K_{n-1}: I_1 is the first
/// edge of the canonical spanning tree of gamma, and each I_{k+1} adds the
/// smallest label adjacent to I_k in that tree.
ChainOfFlats caterpillar_cof(const Graph& gamma);

struct InjectivityReport {
  /// Projection onto Gamma's coordinates is injective on Gamma-stable flats.
  bool injective = true;
  /// rk(F) == rk(F meet Gamma) for every Gamma-stable flat F.
  bool rank_preserving = true;
  bool multipartite = true;

  /// Two Gamma-stable flats with the same image.
  std::optional<std::pair<Flat, Flat>> collision;
  /// A Gamma-stable flat losing rank, with its rank before and after.
  std::optional<Flat> rank_witness;
  std::size_t rank_before = 0;
  std::size_t rank_after = 0;
  /// Three vertices inducing exactly one edge.
  std::optional<std::array<Label, 3>> triple;

  [[nodiscard]] bool consistent() const {
    return injective == rank_preserving && rank_preserving == multipartite;
  }
};

/// Computes the three criteria independently. Gamma must be connected with
/// at most 6 vertices.
InjectivityReport verify_injectivity(const Graph& gamma);

}  // namespace bergfan
