#include "bergfan/radial.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "bergfan/catalog.hpp"
#include "bergfan/error.hpp"

namespace bergfan {

void RadialType::validate() const {
  if (level.size() != type.vertex_count()) throw PreconditionError("one level per vertex");
  if (level[0] != 0) throw PreconditionError("root must sit at level 0");
  std::set<std::size_t> used;
  for (std::size_t v = 1; v < level.size(); ++v) {
    if (level[v] == 0) throw PreconditionError("non-root vertex at level 0");
    if (level[*type.parent(v)] >= level[v]) throw PreconditionError("level must increase away from the root");
    used.insert(level[v]);
  }
  if (!used.empty() && *used.rbegin() != used.size()) throw PreconditionError("levels must be 1..r");
}

std::size_t RadialType::level_count() const {
  std::size_t r = 0;
  for (auto l : level) r = std::max(r, l);
  return r;
}

std::vector<std::vector<std::size_t>> RadialType::levels() const {
  std::vector<std::vector<std::size_t>> out(level_count());
  for (std::size_t v = 1; v < level.size(); ++v) out[level[v] - 1].push_back(v);
  return out;
}

bool operator<(const RadialType& a, const RadialType& b) {
  if (a.type == b.type) return a.level < b.level;
  return a.type < b.type;
}

namespace {

void place_levels(const TropicalType& c, std::vector<std::size_t>& level, std::size_t next_level,
                  std::size_t placed, std::vector<RadialType>& out) {
  if (placed == c.vertex_count() - 1) {
    out.push_back(RadialType{c, level});
    return;
  }
  // Unplaced vertices whose parent already has a level.
  std::vector<std::size_t> available;
  for (std::size_t v = 1; v < c.vertex_count(); ++v) {
    const auto p = *c.parent(v);
    if (level[v] == 0 && (p == 0 || level[p] != 0)) available.push_back(v);
  }
  const std::size_t subsets = std::size_t{1} << available.size();
  for (std::size_t mask = 1; mask < subsets; ++mask) {
    for (std::size_t i = 0; i < available.size(); ++i) {
      if ((mask >> i) & 1U) level[available[i]] = next_level;
    }
    place_levels(c, level, next_level + 1, placed + static_cast<std::size_t>(std::popcount(mask)), out);
    for (std::size_t i = 0; i < available.size(); ++i) {
      if ((mask >> i) & 1U) level[available[i]] = 0;
    }
  }
}

std::vector<Label> labels_of(SplitMask s) { return split_elements(s); }

}  // namespace

std::vector<RadialType> radial_alignments(const TropicalType& c) {
  std::vector<RadialType> out;
  std::vector<std::size_t> level(c.vertex_count(), 0);
  place_levels(c, level, 1, 0, out);
  return out;
}

std::vector<std::size_t> radial_face_census(const TropicalType& c) {
  const auto& all = c.splits();
  std::vector<std::size_t> census(all.size() + 1, 0);
  for (std::size_t mask = 0; mask < (std::size_t{1} << all.size()); ++mask) {
    std::vector<SplitMask> kept;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if ((mask >> i) & 1U) kept.push_back(all[i]);
    }
    for (const auto& r : radial_alignments(TropicalType::from_splits(c.n(), kept))) ++census[r.level_count()];
  }
  return census;
}

std::vector<std::vector<SplitMask>> level_families(const RadialType& c) {
  c.validate();
  std::vector<std::vector<SplitMask>> out(c.level_count());
  for (std::size_t i = 1; i <= out.size(); ++i) {
    for (std::size_t v = 1; v < c.type.vertex_count(); ++v) {
      if (c.level[v] >= i && c.level[*c.type.parent(v)] < i) out[i - 1].push_back(c.type.splits()[v - 1]);
    }
    std::sort(out[i - 1].begin(), out[i - 1].end(), split_less);
  }
  return out;
}

ChainOfFlats psi_radial_to_cof(const RadialType& c) {
  const Graph k = ambient_complete(c.type.n());
  const auto families = level_families(c);
  std::vector<Flat> flats;
  for (auto it = families.rbegin(); it != families.rend(); ++it) {
    std::vector<std::vector<Label>> blocks;
    for (auto s : *it) blocks.push_back(labels_of(s));
    flats.push_back(flat_from_blocks(k, blocks));
  }
  return ChainOfFlats(k, std::move(flats));
}

RadialType psi_cof_to_radial(int n, const ChainOfFlats& chain) {
  const Graph k = ambient_complete(n);
  const ChainOfFlats checked(k, chain.flats());
  const auto& flats = checked.flats();
  const std::size_t r = flats.size();

  struct Node {
    std::size_t parent = 0;
    SplitMask block = 0;
    SplitMask ends = 0;
    std::size_t depth = 0;
    std::vector<std::size_t> children;
  };
  std::vector<Node> nodes(1);
  const SplitMask all_ends = ((SplitMask{1} << (n + 1)) - 1) & ~SplitMask{1};
  nodes[0].block = all_ends;

  // Blocks of the largest flat hang off the root at distance 1, blocks of the
  // next flat inside them at distance 2, and so on down to the smallest flat.
  std::vector<std::size_t> outer{0};
  for (std::size_t step = 0; step < r; ++step) {
    const Flat& f = flats[r - 1 - step];
    std::vector<std::size_t> current;
    for (const auto& b : f.blocks) {
      const SplitMask mask = split_from_elements(b);
      std::size_t parent = 0;
      for (auto o : outer) {
        if (o != 0 && (nodes[o].block & mask) == mask) parent = o;
      }
      Node node;
      node.parent = parent;
      node.block = mask;
      node.depth = step + 1;
      nodes.push_back(node);
      nodes[parent].children.push_back(nodes.size() - 1);
      current.push_back(nodes.size() - 1);
    }
    outer = std::move(current);
  }
  // Ends: whatever of a node's block is not covered by its children.
  for (auto& node : nodes) {
    SplitMask covered = 0;
    for (auto ch : node.children) covered |= nodes[ch].block;
    node.ends = node.block & ~covered;
  }

  // Suppress two-valent non-root vertices (one child, no ends): the child is
  // reattached to the grandparent and keeps its distance from the root.
  std::vector<bool> alive(nodes.size(), true);
  for (std::size_t v = 1; v < nodes.size(); ++v) {
    if (nodes[v].children.size() == 1 && nodes[v].ends == 0) {
      alive[v] = false;
      const auto child = nodes[v].children.front();
      std::size_t p = nodes[v].parent;
      while (!alive[p]) p = nodes[p].parent;
      nodes[child].parent = p;
    }
  }

  std::vector<SplitMask> splits;
  std::set<std::size_t> depths;
  for (std::size_t v = 1; v < nodes.size(); ++v) {
    if (!alive[v]) continue;
    splits.push_back(nodes[v].block);
    depths.insert(nodes[v].depth);
  }
  RadialType out{TropicalType::from_splits(n, splits), {}};
  out.level.assign(out.type.vertex_count(), 0);
  const std::vector<std::size_t> distinct(depths.begin(), depths.end());
  for (std::size_t v = 1; v < nodes.size(); ++v) {
    if (!alive[v]) continue;
    const auto vertex = *out.type.vertex_of(nodes[v].block);
    const auto pos = std::lower_bound(distinct.begin(), distinct.end(), nodes[v].depth) - distinct.begin();
    out.level[vertex] = static_cast<std::size_t>(pos) + 1;
  }
  out.validate();
  if (out.level_count() != r) throw PreconditionError("construction produced the wrong number of levels");
  return out;
}

}  // namespace bergfan
