#pragma once

// Radially aligned types: a combinatorial type together with a weak ordering
// of its non-root vertices by distance from the root, and the bijection with
// chains of flats of the complete graph K_{n-1} on labels 2..n.

#include <cstddef>
#include <vector>

#include "bergfan/matroid.hpp"
#include "bergfan/tropical.hpp"

namespace bergfan {

struct RadialType {
  TropicalType type;
  /// level[v] for every vertex; the root has level 0, the others 1..r with
  /// every level in 1..r used and level(parent) < level(child).
  std::vector<std::size_t> level;

  /// Throws PreconditionError if the levels are inconsistent with the tree.
  void validate() const;
  [[nodiscard]] std::size_t level_count() const;
  /// Non-root vertices of each level 1..r.
  [[nodiscard]] std::vector<std::vector<std::size_t>> levels() const;

  friend bool operator==(const RadialType&, const RadialType&) = default;
  friend bool operator<(const RadialType& a, const RadialType& b);
};

/// Every radial alignment of c.
std::vector<RadialType> radial_alignments(const TropicalType& c);

/// Cone counts by dimension (index 0 is the origin) of the radial
/// subdivision of the cone of c: faces are pairs (contraction of c, radial
/// alignment of that contraction).
std::vector<std::size_t> radial_face_census(const TropicalType& c);

/// End-set families L_1, ..., L_r: L_i holds the split of every vertex at
/// level >= i whose parent sits at level < i.
std::vector<std::vector<SplitMask>> level_families(const RadialType& c);

/// Chain of flats of K_{n-1} (labels 2..n) attached to a radial type:
/// the flats are the disjoint unions of cliques K_I over I in L_r, ..., L_1.
ChainOfFlats psi_radial_to_cof(const RadialType& c);

/// Inverse construction. The chain must consist of flats of K_{n-1} on labels
/// 2..n. Builds the tree outward from the root with unit-length edges (one
/// node per block of each flat, blocks of the largest flat nearest the root),
/// suppresses two-valent vertices and reads the levels off the distances.
RadialType psi_cof_to_radial(int n, const ChainOfFlats& chain);

}  // namespace bergfan
