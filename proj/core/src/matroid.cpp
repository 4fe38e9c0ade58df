#include "bergfan/matroid.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

#include "bergfan/error.hpp"

namespace bergfan {

namespace {

void check_flat_size(const Graph& g) {
  if (g.vertex_count() > kMaxFlatVertices) {
    throw SizeLimitError("flat enumeration supports at most " +
                         std::to_string(kMaxFlatVertices) + " vertices");
  }
}

EdgeSet cluster_edges(const Graph& g, const std::vector<std::vector<Label>>& blocks) {
  EdgeSet out;
  for (const auto& b : blocks) out = out | g.clique_edges(b);
  return out;
}

// Calls visit(blocks) for every set partition of labels, via restricted
// growth strings. Singleton blocks are dropped before visiting.
void for_each_set_partition(const std::vector<Label>& labels,
                            const std::function<void(const std::vector<std::vector<Label>>&)>& visit) {
  const std::size_t n = labels.size();
  if (n == 0) {
    visit({});
    return;
  }
  std::vector<std::size_t> growth(n, 0);
  std::vector<std::size_t> max_prefix(n, 0);  // max of growth[0..i]
  std::vector<std::vector<Label>> blocks;
  while (true) {
    blocks.assign(max_prefix[n - 1] + 1, {});
    for (std::size_t i = 0; i < n; ++i) blocks[growth[i]].push_back(labels[i]);
    std::erase_if(blocks, [](const auto& b) { return b.size() < 2; });
    visit(blocks);

    // Next restricted growth string.
    std::size_t i = n - 1;
    while (i > 0 && growth[i] == max_prefix[i - 1] + 1) --i;
    if (i == 0) return;
    ++growth[i];
    max_prefix[i] = std::max(max_prefix[i - 1], growth[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      growth[j] = 0;
      max_prefix[j] = max_prefix[i];
    }
  }
}

}  // namespace

std::size_t Flat::rank() const {
  std::size_t r = 0;
  for (const auto& b : blocks) r += b.size() - 1;
  return r;
}

ChainOfFlats::ChainOfFlats(const Graph& g, std::vector<Flat> flats) : flats_(std::move(flats)) {
  for (std::size_t i = 0; i < flats_.size(); ++i) {
    const Flat& f = flats_[i];
    g.check_subset(f.base);
    if (f.base.empty() || f.base == g.all_edges()) {
      throw PreconditionError("chain members must be proper nonempty flats");
    }
    if (!is_flat(g, f.base) || f.blocks != components(g, f.base)) {
      throw PreconditionError("chain member is not a flat of the graph");
    }
    if (i > 0) {
      const Flat& prev = flats_[i - 1];
      if (!prev.base.proper_subset_of(f.base) || prev.rank() >= f.rank()) {
        throw PreconditionError("chain is not strictly increasing");
      }
    }
  }
}

bool is_independent(const Graph& g, EdgeSet s) { return spanning_forest(g, s) == s; }

Flat closure(const Graph& g, EdgeSet s) {
  g.check_subset(s);
  auto blocks = components(g, s);
  EdgeSet base = cluster_edges(g, blocks);
  return Flat{base, std::move(blocks)};
}

Flat make_flat(const Graph& g, EdgeSet s) {
  Flat f = closure(g, s);
  if (f.base != s) throw PreconditionError("edge set is not closed");
  return f;
}

Flat flat_from_blocks(const Graph& g, const std::vector<std::vector<Label>>& blocks) {
  for (const auto& b : blocks) {
    for (auto l : b) {
      if (!g.has_vertex(l)) throw PreconditionError("block label outside graph");
    }
  }
  const EdgeSet base = cluster_edges(g, blocks);
  return Flat{base, components(g, base)};
}

std::size_t rank(const Graph& g, EdgeSet s) { return graph_rank(g, s); }

bool is_flat(const Graph& g, EdgeSet s) { return closure(g, s).base == s; }

std::vector<Flat> enumerate_flats(const Graph& g) {
  check_flat_size(g);
  std::unordered_set<std::uint64_t> seen;
  std::vector<Flat> flats;
  for_each_set_partition(g.labels(), [&](const std::vector<std::vector<Label>>& blocks) {
    const EdgeSet base = cluster_edges(g, blocks);
    if (seen.insert(base.bits()).second) flats.push_back(Flat{base, components(g, base)});
  });
  std::sort(flats.begin(), flats.end(), [](const Flat& a, const Flat& b) {
    if (a.rank() != b.rank()) return a.rank() < b.rank();
    return canonical_less(a.base, b.base);
  });
  return flats;
}

FlatLattice flats_lattice(const Graph& g) {
  FlatLattice lattice{enumerate_flats(g), {}};
  const auto& fs = lattice.flats;
  for (std::size_t lo = 0; lo < fs.size(); ++lo) {
    for (std::size_t hi = 0; hi < fs.size(); ++hi) {
      // Rank grows by exactly one along a strict containment, so nothing
      // can sit strictly in between.
      if (fs[lo].base.proper_subset_of(fs[hi].base) && fs[hi].rank() == fs[lo].rank() + 1) {
        lattice.covers.emplace_back(lo, hi);
      }
    }
  }
  return lattice;
}

namespace {

template <typename Visit>
void walk_chains(const std::vector<Flat>& proper, std::size_t r, Visit&& visit) {
  std::vector<std::size_t> stack;
  std::function<void(std::size_t)> extend = [&](std::size_t from) {
    if (stack.size() == r) {
      visit(stack);
      return;
    }
    for (std::size_t i = from; i < proper.size(); ++i) {
      if (!stack.empty() && !proper[stack.back()].base.proper_subset_of(proper[i].base)) continue;
      stack.push_back(i);
      extend(i + 1);
      stack.pop_back();
    }
  };
  extend(0);
}

std::vector<Flat> proper_flats(const Graph& g) {
  auto flats = enumerate_flats(g);
  std::erase_if(flats, [&](const Flat& f) { return f.base.empty() || f.base == g.all_edges(); });
  return flats;
}

}  // namespace

std::vector<ChainOfFlats> enumerate_chains(const Graph& g, std::size_t r) {
  const auto proper = proper_flats(g);
  std::vector<ChainOfFlats> chains;
  walk_chains(proper, r, [&](const std::vector<std::size_t>& idx) {
    std::vector<Flat> members;
    members.reserve(idx.size());
    for (auto i : idx) members.push_back(proper[i]);
    chains.emplace_back(g, std::move(members));
  });
  return chains;
}

std::vector<ChainOfFlats> enumerate_all_chains(const Graph& g) {
  const auto proper = proper_flats(g);
  const std::size_t top = rank(g, g.all_edges());
  std::vector<ChainOfFlats> chains;
  for (std::size_t r = 0; r < std::max<std::size_t>(top, 1); ++r) {
    walk_chains(proper, r, [&](const std::vector<std::size_t>& idx) {
      std::vector<Flat> members;
      members.reserve(idx.size());
      for (auto i : idx) members.push_back(proper[i]);
      chains.emplace_back(g, std::move(members));
    });
  }
  return chains;
}

}  // namespace bergfan
