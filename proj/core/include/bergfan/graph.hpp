#pragma once

// Simple undirected graphs with externally visible integer vertex labels.
//
// Vertices carry externally chosen labels (2..n for a stability graph on
// n-1 vertices); internally everything is indexed 0-based. Edges are kept in
// canonical order, lexicographic on (smaller label, larger label), and every
// deterministic choice in the library (forest choice, tie-breaks, first
// counterexamples) derives from that order.

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bergfan {

using Label = int;

struct Edge {
  Label u = 0;  // u < v
  Label v = 0;

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// A subset of a graph's edges, bit i standing for the graph's i-th edge in
/// canonical order. The owning graph is passed alongside to every operation.
class EdgeSet {
 public:
  static constexpr std::size_t kMaxEdges = 64;

  constexpr EdgeSet() = default;
  constexpr explicit EdgeSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr EdgeSet first_n(std::size_t n) {
    return EdgeSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }

  [[nodiscard]] constexpr std::uint64_t bits() const { return bits_; }
  [[nodiscard]] constexpr bool empty() const { return bits_ == 0; }
  [[nodiscard]] constexpr std::size_t size() const {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  [[nodiscard]] constexpr bool contains(std::size_t i) const {
    return i < 64 && ((bits_ >> i) & 1U) != 0;
  }
  constexpr void insert(std::size_t i) { bits_ |= std::uint64_t{1} << i; }
  constexpr void erase(std::size_t i) { bits_ &= ~(std::uint64_t{1} << i); }

  [[nodiscard]] constexpr bool subset_of(EdgeSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  [[nodiscard]] constexpr bool proper_subset_of(EdgeSet other) const {
    return subset_of(other) && bits_ != other.bits_;
  }

  /// Edge indices in increasing (canonical) order.
  [[nodiscard]] std::vector<std::size_t> indices() const;

  friend constexpr EdgeSet operator|(EdgeSet a, EdgeSet b) { return EdgeSet(a.bits_ | b.bits_); }
  friend constexpr EdgeSet operator&(EdgeSet a, EdgeSet b) { return EdgeSet(a.bits_ & b.bits_); }
  friend constexpr EdgeSet operator-(EdgeSet a, EdgeSet b) { return EdgeSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(EdgeSet, EdgeSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Canonical order on edge sets: lexicographic on the sorted index lists.
bool canonical_less(EdgeSet a, EdgeSet b);

class Graph {
 public:
  Graph() = default;

  /// Builds a graph on `labels` (deduplicated and sorted). Edge endpoints
  /// must be labels; loops and repeated edges throw PreconditionError.
  Graph(std::vector<Label> labels, std::vector<Edge> edges);

  static Graph complete(std::vector<Label> labels);
  /// Complete graph on labels first..last inclusive.
  static Graph complete_range(Label first, Label last);

  [[nodiscard]] const std::vector<Label>& labels() const { return labels_; }
  [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
  [[nodiscard]] std::size_t vertex_count() const { return labels_.size(); }
  [[nodiscard]] std::size_t edge_count() const { return edges_.size(); }
  [[nodiscard]] EdgeSet all_edges() const { return EdgeSet::first_n(edges_.size()); }

  [[nodiscard]] std::optional<std::size_t> vertex_index(Label l) const;
  [[nodiscard]] bool has_vertex(Label l) const { return vertex_index(l).has_value(); }
  [[nodiscard]] std::optional<std::size_t> edge_index(Label a, Label b) const;
  [[nodiscard]] bool has_edge(Label a, Label b) const { return edge_index(a, b).has_value(); }

  /// Throws PreconditionError unless every bit of s names an edge of this graph.
  void check_subset(EdgeSet s) const;
  [[nodiscard]] bool contains(EdgeSet s) const { return s.subset_of(all_edges()); }

  /// Same labels, only the edges in s.
  [[nodiscard]] Graph edge_subgraph(EdgeSet s) const;
  /// Edge set of this graph made of the edges of `other` (matched by labels)
  /// that also lie in this graph.
  [[nodiscard]] EdgeSet edges_matching(const Graph& other, EdgeSet s) const;
  /// All edges of this graph whose endpoints both lie in `block`.
  [[nodiscard]] EdgeSet clique_edges(std::span<const Label> block) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<Label> labels_;
  std::vector<Edge> edges_;
  // vertex_count x vertex_count table of edge index + 1, 0 meaning absent.
  std::vector<std::uint8_t> edge_lookup_;
};

/// Parses the edge-list format: one "i-j" per line, an optional
/// "vertices: a b c" line declaring (possibly isolated) vertices, blank lines
/// and '#' comments ignored.
Graph parse_graph(std::string_view text);

/// Inverse of parse_graph; always emits the vertices line.
std::string to_edge_list(const Graph& g);

/// One line per edge in canonical order.
std::string to_dot(const Graph& g, std::string_view name = "G");

/// Edge label "i-j".
std::string edge_label(const Edge& e);

/// (#non-isolated vertices of s) - (#components among them).
std::size_t graph_rank(const Graph& g, EdgeSet s);

/// Maximal acyclic subset of s, greedy over canonical edge order.
EdgeSet spanning_forest(const Graph& g, EdgeSet s);

/// Vertex label sets of the connected components of s, isolated vertices
/// excluded; each block sorted, blocks sorted lexicographically.
std::vector<std::vector<Label>> components(const Graph& g, EdgeSet s);

bool is_connected(const Graph& g);

struct MultipartiteReport {
  bool multipartite = true;
  /// Three labels whose induced subgraph has exactly one edge.
  std::optional<std::array<Label, 3>> witness;
};

/// Complete multipartite iff no three vertices induce exactly one edge.
MultipartiteReport is_complete_multipartite(const Graph& g);

Graph complement(const Graph& g);
Graph induced_subgraph(const Graph& g, std::span<const Label> labels);
/// Disjoint union of cliques.
bool is_cluster_graph(const Graph& g);
/// Copy of g without the listed edges (each must be present).
Graph remove_edges(const Graph& g, std::span<const Edge> removed);

}  // namespace bergfan
