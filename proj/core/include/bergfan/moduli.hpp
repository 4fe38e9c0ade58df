#pragma once

// Moduli fans of rational tropical curves with n marked ends that are stable
// relative to a graph Gamma on labels 2..n: the unaligned cone complex
// (counted by combinatorial type), and the radially aligned fan embedded in
// R^{E(K_{n-1})}/L through the chains-of-flats bijection, together with its
// projection onto the coordinates of Gamma.

#include <cstddef>
#include <optional>
#include <vector>

#include "bergfan/fan.hpp"
#include "bergfan/graph.hpp"
#include "bergfan/radial.hpp"
#include "bergfan/stability.hpp"
#include "bergfan/tropical.hpp"

namespace bergfan {

struct TropicalComplex {
  int n = 0;
  Graph gamma;
  /// Gamma-stable types ordered as enumerate_types.
  std::vector<TropicalType> types;

  /// Number of types with d bounded edges, d = 0..n-3.
  [[nodiscard]] std::vector<std::size_t> census() const;
};

/// Gamma-stable combinatorial types; gamma defaults to K_{n-1}. 4 <= n <= 8.
TropicalComplex moduli_fan_trop(int n, const std::optional<Graph>& gamma = std::nullopt);

struct ModuliFan {
  int n = 0;
  Graph ambient;  // K_{n-1} on labels 2..n
  Graph gamma;
  /// Gamma-stable radial types, ordered.
  std::vector<RadialType> radial_types;
  /// Chain cones of the radial types over the ambient complete graph.
  Fan complex;
  /// Projection of complex onto Gamma's coordinates.
  Fan image;
  /// Cone of complex / of image for each radial type.
  std::vector<std::size_t> complex_of;
  std::vector<std::size_t> image_of;

  /// Each image cone has exactly one preimage and the same dimension.
  [[nodiscard]] bool bijective() const;
  /// bijective() and the image equals the Bergman fan of Gamma.
  [[nodiscard]] bool identified() const;
  /// Radial types whose cone maps onto image cone i.
  [[nodiscard]] std::vector<std::size_t> fiber(std::size_t image_cone) const;
};

/// 4 <= n <= 7; gamma defaults to K_{n-1} and must be connected on 2..n.
ModuliFan moduli_fan_rad(int n, const std::optional<Graph>& gamma = std::nullopt);

}  // namespace bergfan
