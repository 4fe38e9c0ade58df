#pragma once

// JSON and DOT renderings. Every JSON document carries "schema": 1 and lists
// everything in canonical order, so output is byte-stable.

#include <optional>
#include <string>
#include <vector>

#include "bergfan/fan.hpp"
#include "bergfan/graph.hpp"
#include "bergfan/matroid.hpp"
#include "bergfan/moduli.hpp"
#include "bergfan/radial.hpp"
#include "bergfan/tropical.hpp"

namespace bergfan {

inline constexpr int kJsonSchema = 1;

/// {"schema", "graph": {"vertices", "edges"}, "flats": [{"edges", "rank", "blocks"}]}.
std::string flats_to_json(const Graph& g, const std::vector<Flat>& flats);

/// flats_to_json plus "covers": [[lower, upper]] (indices into "flats").
std::string lattice_to_json(const Graph& g, const FlatLattice& lattice);

/// Hasse diagram, one node per flat labelled by its edges, edges upward.
std::string lattice_to_dot(const Graph& g, const FlatLattice& lattice);

/// {"schema", "ambient": [edge labels], "flats": [[edge labels]],
///  "rays": [[int]], "cones": [{"rays", "weight", "provenance": [[flat index]]}]}.
/// Provenance chains index "flats", the flats of fan.source().
/// When a balance report is given it is added as "balanced".
std::string fan_to_json(const Fan& fan, const std::optional<BalanceReport>& balance = std::nullopt);

/// {"ends", "edges": [[parent, child]], "ends_at": {"end": vertex}}.
std::string type_to_json(const TropicalType& c);
/// type_to_json plus "levels": [[vertex]].
std::string radial_to_json(const RadialType& c);
/// Array of flats, each an array of edge labels.
std::string chain_to_json(const Graph& g, const ChainOfFlats& chain);

/// {"schema", "n", "gamma", "radial_types", "complex": fan, "image": fan,
///  "bijective", "identified"}.
std::string moduli_to_json(const ModuliFan& m);

}  // namespace bergfan
