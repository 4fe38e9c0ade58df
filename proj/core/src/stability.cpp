#include "bergfan/stability.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "bergfan/catalog.hpp"
#include "bergfan/error.hpp"
#include "bergfan/fan.hpp"
#include "bergfan/radial.hpp"

namespace bergfan {

namespace {

/// n such that gamma's labels are 2..n; throws unless connected with those labels.
int check_gamma(const Graph& gamma) {
  const auto& labels = gamma.labels();
  if (labels.empty()) throw PreconditionError("stability graph has no vertices");
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] != static_cast<Label>(i) + 2) throw PreconditionError("stability graph labels must be 2..n");
  }
  if (!is_connected(gamma)) throw PreconditionError("stability graph must be connected");
  return labels.back();
}

bool has_edge_inside(const Graph& gamma, SplitMask ends) {
  return std::any_of(gamma.edges().begin(), gamma.edges().end(), [&](const Edge& e) {
    return ((ends >> e.u) & 1U) != 0 && ((ends >> e.v) & 1U) != 0;
  });
}

bool vertex_stable(const TropicalType& c, std::size_t v, const Graph& gamma, RootStability mode) {
  const std::size_t d = c.degree(v);
  SplitMask ends = c.ends_at(v);
  if (v == 0) {
    if (mode == RootStability::Strict) ends &= ~SplitMask{2};
    return d >= 2 || ends != 0;
  }
  if (d > 2) return true;
  if (d == 2) return ends != 0;
  return has_edge_inside(gamma, ends);
}

}  // namespace

StabilityReport is_gamma_stable(const TropicalType& c, const Graph& gamma, RootStability mode) {
  if (check_gamma(gamma) != c.n()) throw PreconditionError("stability graph labels must be 2..n");
  for (std::size_t v = 0; v < c.vertex_count(); ++v) {
    if (!vertex_stable(c, v, gamma, mode)) return StabilityReport{false, v};
  }
  return {};
}

std::vector<SplitMask> unstable_edges(const TropicalType& c, const Graph& gamma, RootStability mode) {
  if (check_gamma(gamma) != c.n()) throw PreconditionError("stability graph labels must be 2..n");
  std::vector<SplitMask> out;
  for (std::size_t v = 0; v < c.vertex_count(); ++v) {
    if (vertex_stable(c, v, gamma, mode)) continue;
    if (v != 0) out.push_back(c.splits()[v - 1]);
    for (auto ch : c.children(v)) out.push_back(c.splits()[ch - 1]);
  }
  std::sort(out.begin(), out.end(), split_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

TropicalType reduce(const TropicalType& c, const Graph& gamma, RootStability mode) {
  TropicalType current = c;
  while (true) {
    const auto edges = unstable_edges(current, gamma, mode);
    if (edges.empty()) return current;
    current = current.contract(edges.front());
  }
}

bool flat_gamma_stable(const Flat& f, const Graph& gamma) {
  const int n = check_gamma(gamma);
  const ChainOfFlats chain(ambient_complete(n), {f});
  return is_gamma_stable(psi_cof_to_radial(n, chain).type, gamma).stable;
}

ChainOfFlats caterpillar_cof(const Graph& gamma) {
  const int n = check_gamma(gamma);
  if (n < 4) throw PreconditionError("caterpillar needs at least 3 vertices");
  const Graph k = ambient_complete(n);
  const auto tree = spanning_forest(gamma, gamma.all_edges()).indices();
  const Edge first = gamma.edges()[tree.front()];
  std::vector<Label> grown{first.u, first.v};
  std::vector<Flat> flats;
  while (true) {
    std::sort(grown.begin(), grown.end());
    flats.push_back(flat_from_blocks(k, {grown}));
    if (static_cast<int>(grown.size()) == n - 2) break;
    Label next = 0;
    for (auto i : tree) {
      const Edge& e = gamma.edges()[i];
      const bool has_u = std::find(grown.begin(), grown.end(), e.u) != grown.end();
      const bool has_v = std::find(grown.begin(), grown.end(), e.v) != grown.end();
      if (has_u == has_v) continue;
      const Label candidate = has_u ? e.v : e.u;
      if (next == 0 || candidate < next) next = candidate;
    }
    grown.push_back(next);
  }
  return ChainOfFlats(k, std::move(flats));
}

InjectivityReport verify_injectivity(const Graph& gamma) {
  const int n = check_gamma(gamma);
  if (gamma.vertex_count() > 6) throw SizeLimitError("injectivity check supports at most 6 vertices");
  const Graph k = ambient_complete(n);
  InjectivityReport report;

  std::map<QuotientVector, Flat> images;
  for (const auto& f : enumerate_flats(k)) {
    if (f.base.empty() || f.base == k.all_edges()) continue;
    if (!flat_gamma_stable(f, gamma)) continue;
    const auto image = project_vector(ray_of_flat(f, k), k, gamma);
    const auto [it, inserted] = images.emplace(image, f);
    if (!inserted && report.injective) {
      report.injective = false;
      report.collision = std::make_pair(it->second, f);
    }
    const std::size_t before = rank(k, f.base);
    const std::size_t after = graph_rank(gamma, gamma.edges_matching(k, f.base));
    if (before != after && report.rank_preserving) {
      report.rank_preserving = false;
      report.rank_witness = f;
      report.rank_before = before;
      report.rank_after = after;
    }
  }
  const auto multipartite = is_complete_multipartite(gamma);
  report.multipartite = multipartite.multipartite;
  report.triple = multipartite.witness;
  return report;
}

}  // namespace bergfan
