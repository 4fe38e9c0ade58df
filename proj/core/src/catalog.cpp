#include "bergfan/catalog.hpp"

#include <algorithm>
#include <charconv>

#include "bergfan/error.hpp"

namespace bergfan {

namespace {

struct Entry {
  std::string_view name;
  std::string_view edges;
};

// All built-in graphs live on labels 2..5 (or 2..4 for path-2).
constexpr Entry kCatalog[] = {
    {"k4", "2-3\n2-4\n2-5\n3-4\n3-5\n4-5\n"},
    {"k4-minus-e25", "2-3\n2-4\n3-4\n3-5\n4-5\n"},
    {"k4-minus-e35-e45", "2-3\n2-4\n2-5\n3-4\n"},
    {"k4-minus-e34-e35-e45", "2-3\n2-4\n2-5\n"},
    {"k2-2", "2-3\n2-4\n3-5\n4-5\n"},
    {"petersen-check", "2-3\n2-4\n2-5\n3-4\n3-5\n4-5\n"},
    {"path-2", "2-3\n2-4\n"},
};

}  // namespace

std::vector<std::string> named_graph_names() {
  std::vector<std::string> names;
  for (const auto& e : kCatalog) names.emplace_back(e.name);
  return names;
}

Graph named_graph(std::string_view name) {
  for (const auto& e : kCatalog) {
    if (e.name == name) return parse_graph(e.edges);
  }
  if (name.size() >= 2 && (name[0] == 'k' || name[0] == 'K')) {
    int m = 0;
    const auto* end = name.data() + name.size();
    auto [ptr, ec] = std::from_chars(name.data() + 1, end, m);
    if (ec == std::errc() && ptr == end && m >= 1 && m <= 11) {
      return Graph::complete_range(2, m + 1);
    }
  }
  throw ParseError("unknown graph name '" + std::string(name) + "'");
}

std::vector<Graph> graphs_on(int m) {
  if (m < 1 || m > 6) throw SizeLimitError("graphs_on supports 1 <= m <= 6");
  const Graph k = Graph::complete_range(2, m + 1);
  std::vector<Graph> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << k.edge_count()); ++bits) {
    out.push_back(k.edge_subgraph(EdgeSet(bits)));
  }
  return out;
}

Graph ambient_complete(int n) {
  if (n < 3) throw PreconditionError("need at least 3 ends");
  return Graph::complete_range(2, n);
}

}  // namespace bergfan
