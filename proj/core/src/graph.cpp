#include "bergfan/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "bergfan/error.hpp"

namespace bergfan {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

Label parse_label(std::string_view token, std::size_t line_no) {
  token = trim(token);
  Label value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc() || ptr != end) {
    throw ParseError("line " + std::to_string(line_no) + ": bad vertex label '" +
                     std::string(token) + "'");
  }
  return value;
}

}  // namespace

std::vector<std::size_t> EdgeSet::indices() const {
  std::vector<std::size_t> out;
  out.reserve(size());
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
  }
  return out;
}

bool canonical_less(EdgeSet a, EdgeSet b) {
  const auto ia = a.indices();
  const auto ib = b.indices();
  return std::lexicographical_compare(ia.begin(), ia.end(), ib.begin(), ib.end());
}

Graph::Graph(std::vector<Label> labels, std::vector<Edge> edges) : labels_(std::move(labels)) {
  std::sort(labels_.begin(), labels_.end());
  labels_.erase(std::unique(labels_.begin(), labels_.end()), labels_.end());

  for (auto& e : edges) {
    if (e.u == e.v) {
      throw PreconditionError("loop edge at vertex " + std::to_string(e.u));
    }
    if (e.v < e.u) std::swap(e.u, e.v);
    if (!has_vertex(e.u) || !has_vertex(e.v)) {
      throw PreconditionError("edge " + edge_label(e) + " has an endpoint outside the label set");
    }
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
    throw PreconditionError("duplicate edge " + edge_label(*dup));
  }
  if (edges.size() > EdgeSet::kMaxEdges) {
    throw SizeLimitError("graphs are limited to 64 edges");
  }
  edges_ = std::move(edges);

  const std::size_t n = labels_.size();
  edge_lookup_.assign(n * n, 0);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto a = *vertex_index(edges_[i].u);
    const auto b = *vertex_index(edges_[i].v);
    edge_lookup_[a * n + b] = edge_lookup_[b * n + a] = static_cast<std::uint8_t>(i + 1);
  }
}

Graph Graph::complete(std::vector<Label> labels) {
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = i + 1; j < labels.size(); ++j) edges.push_back({labels[i], labels[j]});
  }
  return Graph(std::move(labels), std::move(edges));
}

Graph Graph::complete_range(Label first, Label last) {
  std::vector<Label> labels;
  for (Label l = first; l <= last; ++l) labels.push_back(l);
  return complete(std::move(labels));
}

std::optional<std::size_t> Graph::vertex_index(Label l) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), l);
  if (it == labels_.end() || *it != l) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::optional<std::size_t> Graph::edge_index(Label a, Label b) const {
  const auto ia = vertex_index(a);
  const auto ib = vertex_index(b);
  if (!ia || !ib) return std::nullopt;
  const auto entry = edge_lookup_[*ia * labels_.size() + *ib];
  if (entry == 0) return std::nullopt;
  return static_cast<std::size_t>(entry - 1);
}

void Graph::check_subset(EdgeSet s) const {
  if (!contains(s)) {
    throw PreconditionError("edge set is not a subset of the graph's edges");
  }
}

Graph Graph::edge_subgraph(EdgeSet s) const {
  check_subset(s);
  std::vector<Edge> kept;
  for (auto i : s.indices()) kept.push_back(edges_[i]);
  return Graph(labels_, std::move(kept));
}

EdgeSet Graph::edges_matching(const Graph& other, EdgeSet s) const {
  other.check_subset(s);
  EdgeSet out;
  for (auto i : s.indices()) {
    const auto& e = other.edges()[i];
    if (auto j = edge_index(e.u, e.v)) out.insert(*j);
  }
  return out;
}

EdgeSet Graph::clique_edges(std::span<const Label> block) const {
  EdgeSet out;
  for (std::size_t i = 0; i < block.size(); ++i) {
    for (std::size_t j = i + 1; j < block.size(); ++j) {
      if (auto e = edge_index(block[i], block[j])) out.insert(*e);
    }
  }
  return out;
}

Graph parse_graph(std::string_view text) {
  std::vector<Label> labels;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    constexpr std::string_view kVertices = "vertices:";
    if (line.starts_with(kVertices)) {
      std::istringstream rest{std::string(line.substr(kVertices.size()))};
      std::string token;
      while (rest >> token) labels.push_back(parse_label(token, line_no));
      continue;
    }

    const auto dash = line.find('-', 1);
    if (dash == std::string_view::npos) {
      throw ParseError("line " + std::to_string(line_no) + ": expected 'i-j', got '" +
                       std::string(line) + "'");
    }
    const Label a = parse_label(line.substr(0, dash), line_no);
    const Label b = parse_label(line.substr(dash + 1), line_no);
    if (a == b) {
      throw ParseError("line " + std::to_string(line_no) + ": loop edge " + std::to_string(a) +
                       "-" + std::to_string(b));
    }
    Edge e{std::min(a, b), std::max(a, b)};
    if (std::find(edges.begin(), edges.end(), e) != edges.end()) {
      throw ParseError("line " + std::to_string(line_no) + ": duplicate edge " + edge_label(e));
    }
    edges.push_back(e);
    labels.push_back(a);
    labels.push_back(b);
  }
  return Graph(std::move(labels), std::move(edges));
}

std::string edge_label(const Edge& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

std::string to_edge_list(const Graph& g) {
  std::string out = "vertices:";
  for (auto l : g.labels()) out += " " + std::to_string(l);
  out += "\n";
  for (const auto& e : g.edges()) out += edge_label(e) + "\n";
  return out;
}

std::string to_dot(const Graph& g, std::string_view name) {
  std::string out = "graph " + std::string(name) + " {\n";
  for (auto l : g.labels()) out += "  " + std::to_string(l) + ";\n";
  for (const auto& e : g.edges()) {
    out += "  " + std::to_string(e.u) + " -- " + std::to_string(e.v) + ";\n";
  }
  out += "}\n";
  return out;
}

std::size_t graph_rank(const Graph& g, EdgeSet s) {
  return spanning_forest(g, s).size();
}

EdgeSet spanning_forest(const Graph& g, EdgeSet s) {
  g.check_subset(s);
  UnionFind uf(g.vertex_count());
  EdgeSet forest;
  for (auto i : s.indices()) {
    const auto& e = g.edges()[i];
    if (uf.unite(*g.vertex_index(e.u), *g.vertex_index(e.v))) forest.insert(i);
  }
  return forest;
}

std::vector<std::vector<Label>> components(const Graph& g, EdgeSet s) {
  g.check_subset(s);
  const std::size_t n = g.vertex_count();
  UnionFind uf(n);
  std::vector<bool> touched(n, false);
  for (auto i : s.indices()) {
    const auto a = *g.vertex_index(g.edges()[i].u);
    const auto b = *g.vertex_index(g.edges()[i].v);
    touched[a] = touched[b] = true;
    uf.unite(a, b);
  }
  std::vector<std::vector<Label>> by_root(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (touched[v]) by_root[uf.find(v)].push_back(g.labels()[v]);
  }
  std::vector<std::vector<Label>> blocks;
  for (auto& b : by_root) {
    if (!b.empty()) blocks.push_back(std::move(b));
  }
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() <= 1) return true;
  const auto blocks = components(g, g.all_edges());
  return blocks.size() == 1 && blocks.front().size() == g.vertex_count();
}

MultipartiteReport is_complete_multipartite(const Graph& g) {
  const auto& ls = g.labels();
  for (std::size_t i = 0; i < ls.size(); ++i) {
    for (std::size_t j = i + 1; j < ls.size(); ++j) {
      for (std::size_t k = j + 1; k < ls.size(); ++k) {
        const int edges = int(g.has_edge(ls[i], ls[j])) + int(g.has_edge(ls[i], ls[k])) +
                          int(g.has_edge(ls[j], ls[k]));
        if (edges == 1) return {false, std::array<Label, 3>{ls[i], ls[j], ls[k]}};
      }
    }
  }
  return {};
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  const auto& ls = g.labels();
  for (std::size_t i = 0; i < ls.size(); ++i) {
    for (std::size_t j = i + 1; j < ls.size(); ++j) {
      if (!g.has_edge(ls[i], ls[j])) edges.push_back({ls[i], ls[j]});
    }
  }
  return Graph(ls, std::move(edges));
}

Graph induced_subgraph(const Graph& g, std::span<const Label> labels) {
  std::vector<Label> kept(labels.begin(), labels.end());
  for (auto l : kept) {
    if (!g.has_vertex(l)) throw PreconditionError("label " + std::to_string(l) + " not in graph");
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (std::find(kept.begin(), kept.end(), e.u) != kept.end() &&
        std::find(kept.begin(), kept.end(), e.v) != kept.end()) {
      edges.push_back(e);
    }
  }
  return Graph(std::move(kept), std::move(edges));
}

bool is_cluster_graph(const Graph& g) {
  // Every component must be a clique.
  for (const auto& block : components(g, g.all_edges())) {
    if (g.clique_edges(block).size() != block.size() * (block.size() - 1) / 2) return false;
  }
  return true;
}

Graph remove_edges(const Graph& g, std::span<const Edge> removed) {
  EdgeSet keep = g.all_edges();
  for (const auto& e : removed) {
    auto idx = g.edge_index(e.u, e.v);
    if (!idx) throw PreconditionError("edge " + edge_label(e) + " not in graph");
    keep.erase(*idx);
  }
  return g.edge_subgraph(keep);
}

}  // namespace bergfan
