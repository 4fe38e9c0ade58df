#pragma once

// Named small graphs (K4 and some of its subgraphs) that tests and CLI
// invocations can refer to directly.

#include <string>
#include <string_view>
#include <vector>

#include "bergfan/graph.hpp"

namespace bergfan {

/// Names accepted by named_graph, in a stable order.
std::vector<std::string> named_graph_names();

/// Looks up a built-in graph. Also accepts "k<m>" for the complete graph on
/// labels 2..m+1. Throws ParseError for unknown names.
Graph named_graph(std::string_view name);

/// Every simple graph on labels 2..m+1 (m <= 6), ordered by edge bitmask
/// over the canonical edge order of K_m.
std::vector<Graph> graphs_on(int m);

/// Complete graph K_{n-1} on labels 2..n, the ambient graph for n-marked curves.
Graph ambient_complete(int n);

}  // namespace bergfan
