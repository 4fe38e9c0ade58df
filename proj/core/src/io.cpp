#include "bergfan/io.hpp"

#include <map>
#include <sstream>

#include <json.hpp>

namespace bergfan {

namespace {

using Json = nlohmann::ordered_json;

Json edge_labels(const Graph& g, EdgeSet s) {
  Json out = Json::array();
  for (auto i : s.indices()) out.push_back(edge_label(g.edges()[i]));
  return out;
}

Json graph_json(const Graph& g) {
  return Json{{"vertices", g.labels()}, {"edges", edge_labels(g, g.all_edges())}};
}

Json flat_json(const Graph& g, const Flat& f) {
  return Json{{"edges", edge_labels(g, f.base)}, {"rank", f.rank()}, {"blocks", f.blocks}};
}

Json flats_json(const Graph& g, const std::vector<Flat>& flats) {
  Json out = Json::array();
  for (const auto& f : flats) out.push_back(flat_json(g, f));
  return out;
}

Json fan_object(const Fan& fan, const std::optional<BalanceReport>& balance) {
  const Graph& source = fan.source();
  const auto flats = enumerate_flats(source);
  std::map<std::uint64_t, std::size_t> flat_index;
  Json flat_list = Json::array();
  for (std::size_t i = 0; i < flats.size(); ++i) {
    flat_index.emplace(flats[i].base.bits(), i);
    flat_list.push_back(edge_labels(source, flats[i].base));
  }
  Json rays = Json::array();
  for (const auto& r : fan.rays()) rays.push_back(r.coords());
  Json cones = Json::array();
  for (const auto& c : fan.cones()) {
    Json provenance = Json::array();
    for (const auto& chain : c.sources) {
      Json indices = Json::array();
      for (const auto& f : chain.flats()) indices.push_back(flat_index.at(f.base.bits()));
      provenance.push_back(std::move(indices));
    }
    cones.push_back(Json{{"rays", c.rays}, {"weight", c.weight}, {"provenance", std::move(provenance)}});
  }
  Json out{{"ambient", edge_labels(fan.ambient(), fan.ambient().all_edges())},
           {"flats", std::move(flat_list)},
           {"rays", std::move(rays)},
           {"cones", std::move(cones)}};
  if (balance) {
    out["balanced"] = balance->balanced;
    if (balance->failing_face) out["failing_face"] = *balance->failing_face;
  }
  return out;
}

Json type_object(const TropicalType& c) {
  Json edges = Json::array();
  for (const auto& [p, v] : c.bounded_edges()) edges.push_back(Json::array({p, v}));
  Json ends = Json::object();
  for (std::size_t v = 0; v < c.vertex_count(); ++v) {
    for (auto e : split_elements(c.ends_at(v))) ends[std::to_string(e)] = v;
  }
  // Keys in numeric order.
  Json ordered = Json::object();
  for (int e = 1; e <= c.n(); ++e) ordered[std::to_string(e)] = ends.at(std::to_string(e));
  return Json{{"ends", c.n()}, {"edges", std::move(edges)}, {"ends_at", std::move(ordered)}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string flats_to_json(const Graph& g, const std::vector<Flat>& flats) {
  return dump(Json{{"schema", kJsonSchema}, {"graph", graph_json(g)}, {"flats", flats_json(g, flats)}});
}

std::string lattice_to_json(const Graph& g, const FlatLattice& lattice) {
  Json covers = Json::array();
  for (const auto& [lo, hi] : lattice.covers) covers.push_back(Json::array({lo, hi}));
  return dump(Json{{"schema", kJsonSchema},
                   {"graph", graph_json(g)},
                   {"flats", flats_json(g, lattice.flats)},
                   {"covers", std::move(covers)}});
}

std::string lattice_to_dot(const Graph& g, const FlatLattice& lattice) {
  std::ostringstream out;
  out << "digraph flats {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < lattice.flats.size(); ++i) {
    std::string label;
    for (auto e : lattice.flats[i].base.indices()) {
      if (!label.empty()) label += ",";
      label += "e" + std::to_string(g.edges()[e].u) + std::to_string(g.edges()[e].v);
    }
    if (label.empty()) label = "0";
    out << "  f" << i << " [label=\"" << label << "\"];\n";
  }
  for (const auto& [lo, hi] : lattice.covers) out << "  f" << lo << " -> f" << hi << ";\n";
  out << "}\n";
  return out.str();
}

std::string fan_to_json(const Fan& fan, const std::optional<BalanceReport>& balance) {
  Json out{{"schema", kJsonSchema}};
  out.update(fan_object(fan, balance));
  return dump(out);
}

std::string type_to_json(const TropicalType& c) { return dump(type_object(c)); }

std::string radial_to_json(const RadialType& c) {
  Json out = type_object(c.type);
  out["levels"] = c.levels();
  return dump(out);
}

std::string chain_to_json(const Graph& g, const ChainOfFlats& chain) {
  Json out = Json::array();
  for (const auto& f : chain.flats()) out.push_back(edge_labels(g, f.base));
  return dump(out);
}

std::string moduli_to_json(const ModuliFan& m) {
  return dump(Json{{"schema", kJsonSchema},
                   {"n", m.n},
                   {"gamma", edge_labels(m.gamma, m.gamma.all_edges())},
                   {"radial_types", m.radial_types.size()},
                   {"complex", fan_object(m.complex, std::nullopt)},
                   {"image", fan_object(m.image, std::nullopt)},
                   {"bijective", m.bijective()},
                   {"identified", m.identified()}});
}

}  // namespace bergfan
