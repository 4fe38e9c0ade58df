#include "bergfan/axioms.hpp"

#include <algorithm>
#include <bit>

#include "bergfan/error.hpp"
#include "bergfan/matroid.hpp"

namespace bergfan {

namespace {

using Report = AxiomReport;

Report fail(std::string axiom, std::vector<Subset> sets, std::vector<std::size_t> elements = {}) {
  return Report{false, Counterexample{std::move(axiom), std::move(sets), std::move(elements)}};
}

constexpr bool has(Subset s, std::size_t x) { return ((s >> x) & 1U) != 0; }
constexpr Subset bit(std::size_t x) { return Subset{1} << x; }
constexpr bool subset_of(Subset a, Subset b) { return (a & ~b) == 0; }

class Membership {
 public:
  Membership(std::size_t ground, const std::vector<Subset>& members)
      : table_(std::size_t{1} << ground, false) {
    for (auto m : members) {
      if (m >= table_.size()) throw PreconditionError("member outside the ground set");
      table_[m] = true;
    }
  }
  bool operator()(Subset s) const { return table_[s]; }

 private:
  std::vector<bool> table_;
};

std::vector<Subset> sorted_unique(std::vector<Subset> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

Report check_independence(std::size_t n, const std::vector<Subset>& raw) {
  const auto members = sorted_unique(raw);
  const Membership in(n, members);
  if (!in(0)) return fail("I1", {0});
  for (auto x : members) {
    // Proper subsets of x in increasing order.
    for (Subset y = 0; y < x; ++y) {
      if (subset_of(y, x) && !in(y)) return fail("I2", {x, y});
    }
  }
  for (auto u : members) {
    for (auto v : members) {
      if (std::popcount(u) != std::popcount(v) + 1) continue;
      bool exchanged = false;
      for (std::size_t x = 0; x < n && !exchanged; ++x) {
        exchanged = has(u, x) && !has(v, x) && in(v | bit(x));
      }
      if (!exchanged) return fail("I3", {u, v});
    }
  }
  return {};
}

Report check_bases(std::size_t n, const std::vector<Subset>& raw) {
  const auto members = sorted_unique(raw);
  if (members.empty()) return fail("B0", {});
  const Membership in(n, members);
  for (auto b1 : members) {
    for (auto b2 : members) {
      for (std::size_t x = 0; x < n; ++x) {
        if (!has(b1, x) || has(b2, x)) continue;
        bool found = false;
        for (std::size_t y = 0; y < n && !found; ++y) {
          found = has(b2, y) && !has(b1, y) && in((b1 | bit(y)) & ~bit(x));
        }
        if (!found) return fail("B1", {b1, b2}, {x});
      }
    }
  }
  return {};
}

void check_table_size(std::size_t n, std::size_t size, const char* what) {
  if (size != (std::size_t{1} << n)) {
    throw PreconditionError(std::string(what) + " is not total on the powerset of the ground set");
  }
}

Report check_rank(std::size_t n, const std::vector<int>& rk) {
  check_table_size(n, rk.size(), "rank table");
  if (rk[0] != 0) return fail("R1", {0});
  const Subset full = static_cast<Subset>((std::size_t{1} << n) - 1);
  for (Subset x = 0; x <= full; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const int grown = rk[x | bit(y)];
      if (grown < rk[x] || grown > rk[x] + 1) return fail("R2", {x}, {y});
    }
  }
  for (Subset x = 0; x <= full; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (rk[x | bit(y)] != rk[x]) continue;
      for (std::size_t z = 0; z < n; ++z) {
        if (rk[x | bit(z)] == rk[x] && rk[x | bit(y) | bit(z)] != rk[x]) {
          return fail("R3", {x}, {y, z});
        }
      }
    }
  }
  return {};
}

Report check_rank_submodular(std::size_t n, const std::vector<int>& rk) {
  check_table_size(n, rk.size(), "rank table");
  const Subset full = static_cast<Subset>((std::size_t{1} << n) - 1);
  for (Subset x = 0; x <= full; ++x) {
    if (rk[x] < 0 || rk[x] > std::popcount(x)) return fail("R1'", {x});
  }
  for (Subset y = 0; y <= full; ++y) {
    // Subsets x of y, increasing.
    for (Subset x = 0; x <= y; ++x) {
      if (subset_of(x, y) && rk[x] > rk[y]) return fail("R2'", {x, y});
    }
  }
  for (Subset x = 0; x <= full; ++x) {
    for (Subset y = 0; y <= full; ++y) {
      if (rk[x | y] + rk[x & y] > rk[x] + rk[y]) return fail("R3'", {x, y});
    }
  }
  return {};
}

Report check_closure(std::size_t n, const std::vector<Subset>& cl) {
  check_table_size(n, cl.size(), "closure table");
  const Subset full = static_cast<Subset>((std::size_t{1} << n) - 1);
  for (Subset x = 0; x <= full; ++x) {
    if (cl[x] > full) throw PreconditionError("closure value outside the ground set");
    if (!subset_of(x, cl[x])) return fail("S1", {x});
  }
  for (Subset x = 0; x <= full; ++x) {
    for (Subset y = 0; y <= x; ++y) {
      if (subset_of(y, x) && !subset_of(cl[y], cl[x])) return fail("S2", {x, y});
    }
  }
  for (Subset x = 0; x <= full; ++x) {
    if (cl[cl[x]] != cl[x]) return fail("S3", {x});
  }
  for (Subset x = 0; x <= full; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (has(cl[x], y)) continue;
      for (std::size_t e = 0; e < n; ++e) {
        if (has(cl[x | bit(e)], y) && !has(cl[x | bit(y)], e)) return fail("S4", {x}, {e, y});
      }
    }
  }
  return {};
}

Report check_circuits(std::size_t n, const std::vector<Subset>& raw) {
  const auto members = sorted_unique(raw);
  const Membership in(n, members);
  for (auto x : members) {
    for (auto y : members) {
      if (x != y && subset_of(x, y)) return fail("C1", {x, y});
    }
  }
  for (auto c1 : members) {
    for (auto c2 : members) {
      if (c1 == c2) continue;
      for (std::size_t z = 0; z < n; ++z) {
        if (!has(c1 & c2, z)) continue;
        const Subset pool = (c1 | c2) & ~bit(z);
        const bool found = std::any_of(members.begin(), members.end(),
                                       [&](Subset c3) { return subset_of(c3, pool); });
        if (!found) return fail("C2", {c1, c2}, {z});
      }
    }
  }
  return {};
}

SetSystem ground_of(const Graph& g) {
  if (g.edge_count() > kMaxAxiomGround) {
    throw PreconditionError("ground set larger than " + std::to_string(kMaxAxiomGround));
  }
  SetSystem sys;
  for (const auto& e : g.edges()) sys.ground.push_back(edge_label(e));
  return sys;
}

Subset full_mask(const Graph& g) { return static_cast<Subset>((std::size_t{1} << g.edge_count()) - 1); }

}  // namespace

std::string to_string(AxiomFamily family) {
  switch (family) {
    case AxiomFamily::Independence: return "independence";
    case AxiomFamily::Bases: return "bases";
    case AxiomFamily::Rank: return "rank";
    case AxiomFamily::RankSubmodular: return "rank-submodular";
    case AxiomFamily::Closure: return "closure";
    case AxiomFamily::Circuits: return "circuits";
  }
  return "unknown";
}

std::string format_subset(Subset s, const std::vector<std::string>& ground) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < ground.size(); ++i) {
    if (!has(s, i)) continue;
    if (!first) out += ",";
    out += ground[i];
    first = false;
  }
  return out + "}";
}

std::string Counterexample::describe(const std::vector<std::string>& ground) const {
  std::string out = axiom + ":";
  for (auto s : sets) out += " " + format_subset(s, ground);
  for (auto e : elements) out += " " + (e < ground.size() ? ground[e] : std::to_string(e));
  return out;
}

AxiomReport verify_matroid_axioms(const SetSystem& sys, AxiomFamily family) {
  const std::size_t n = sys.ground.size();
  if (n > kMaxAxiomGround) {
    throw PreconditionError("ground set larger than " + std::to_string(kMaxAxiomGround));
  }
  switch (family) {
    case AxiomFamily::Independence: return check_independence(n, sys.members);
    case AxiomFamily::Bases: return check_bases(n, sys.members);
    case AxiomFamily::Rank: return check_rank(n, sys.rank_table);
    case AxiomFamily::RankSubmodular: return check_rank_submodular(n, sys.rank_table);
    case AxiomFamily::Closure: return check_closure(n, sys.closure_table);
    case AxiomFamily::Circuits: return check_circuits(n, sys.members);
  }
  throw PreconditionError("unknown axiom family");
}

SetSystem cycle_matroid_independent_sets(const Graph& g) {
  SetSystem sys = ground_of(g);
  for (Subset s = 0; s <= full_mask(g); ++s) {
    if (is_independent(g, EdgeSet(s))) sys.members.push_back(s);
  }
  return sys;
}

SetSystem cycle_matroid_bases(const Graph& g) {
  SetSystem sys = ground_of(g);
  const auto r = rank(g, g.all_edges());
  for (Subset s = 0; s <= full_mask(g); ++s) {
    if (static_cast<std::size_t>(std::popcount(s)) == r && is_independent(g, EdgeSet(s))) {
      sys.members.push_back(s);
    }
  }
  return sys;
}

SetSystem cycle_matroid_rank_table(const Graph& g) {
  SetSystem sys = ground_of(g);
  sys.rank_table.resize(std::size_t{1} << g.edge_count());
  for (Subset s = 0; s <= full_mask(g); ++s) {
    sys.rank_table[s] = static_cast<int>(rank(g, EdgeSet(s)));
  }
  return sys;
}

SetSystem cycle_matroid_closure_table(const Graph& g) {
  SetSystem sys = ground_of(g);
  sys.closure_table.resize(std::size_t{1} << g.edge_count());
  for (Subset s = 0; s <= full_mask(g); ++s) {
    sys.closure_table[s] = static_cast<Subset>(closure(g, EdgeSet(s)).base.bits());
  }
  return sys;
}

SetSystem cycle_matroid_circuits(const Graph& g) {
  // Minimal dependent sets: dependent, and every single-edge deletion independent.
  SetSystem sys = ground_of(g);
  for (Subset s = 1; s <= full_mask(g); ++s) {
    if (is_independent(g, EdgeSet(s))) continue;
    bool minimal = true;
    for (std::size_t i = 0; i < g.edge_count() && minimal; ++i) {
      if (has(s, i)) minimal = is_independent(g, EdgeSet(s & ~bit(i)));
    }
    if (minimal) sys.members.push_back(s);
  }
  return sys;
}

}  // namespace bergfan
