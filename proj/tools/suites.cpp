#include "suites.hpp"

#include <algorithm>

#include "bergfan/axioms.hpp"
#include "bergfan/catalog.hpp"
#include "bergfan/error.hpp"
#include "bergfan/fan.hpp"
#include "bergfan/moduli.hpp"
#include "bergfan/radial.hpp"
#include "bergfan/stability.hpp"

namespace bergfan::cli {

namespace {

std::string edges_of(const Graph& g) {
  std::string out;
  for (const auto& e : g.edges()) {
    if (!out.empty()) out += ",";
    out += edge_label(e);
  }
  return out.empty() ? "(no edges)" : out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void check_range(int value, int lo, int hi, const char* what) {
  if (value < lo || value > hi) {
    throw PreconditionError(std::string(what) + " must lie in " + std::to_string(lo) + ".." + std::to_string(hi));
  }
}

}  // namespace

SuiteResult verify_axioms(int max_vertices) {
  check_range(max_vertices, 1, 5, "--max-vertices");
  SuiteResult result;
  constexpr AxiomFamily kFamilies[] = {AxiomFamily::Independence, AxiomFamily::Bases,
                                       AxiomFamily::Rank,         AxiomFamily::RankSubmodular,
                                       AxiomFamily::Closure,      AxiomFamily::Circuits};
  for (int m = 1; m <= max_vertices; ++m) {
    std::size_t checked = 0;
    for (const auto& g : graphs_on(m)) {
      for (auto family : kFamilies) {
        SetSystem sys;
        switch (family) {
          case AxiomFamily::Independence: sys = cycle_matroid_independent_sets(g); break;
          case AxiomFamily::Bases: sys = cycle_matroid_bases(g); break;
          case AxiomFamily::Rank:
          case AxiomFamily::RankSubmodular: sys = cycle_matroid_rank_table(g); break;
          case AxiomFamily::Closure: sys = cycle_matroid_closure_table(g); break;
          case AxiomFamily::Circuits: sys = cycle_matroid_circuits(g); break;
        }
        const auto report = verify_matroid_axioms(sys, family);
        if (!report.holds) {
          result.ok = false;
          result.lines.push_back("FAIL " + edges_of(g) + " " + to_string(family) + ": " +
                                 report.counterexample->describe(sys.ground));
          return result;
        }
      }
      ++checked;
    }
    result.lines.push_back(std::to_string(m) + " vertices: " + std::to_string(checked) +
                           " graphs, all axiom families hold");
  }
  return result;
}

SuiteResult verify_psi(int max_n) {
  check_range(max_n, 5, 7, "--max-n");
  SuiteResult result;
  for (int n = 5; n <= max_n; ++n) {
    const Graph k = ambient_complete(n);
    std::size_t chains = 0;
    for (const auto& chain : enumerate_all_chains(k)) {
      const auto radial = psi_cof_to_radial(n, chain);
      if (radial.level_count() != chain.length() || !(psi_radial_to_cof(radial) == chain)) {
        result.ok = false;
        result.lines.push_back("FAIL n=" + std::to_string(n) + ": chain round trip");
        return result;
      }
      ++chains;
    }
    std::size_t radial_types = 0;
    for (const auto& t : enumerate_types(n)) {
      for (const auto& r : radial_alignments(t)) {
        const auto chain = psi_radial_to_cof(r);
        if (chain.length() != r.level_count() || !(psi_cof_to_radial(n, chain) == r)) {
          result.ok = false;
          result.lines.push_back("FAIL n=" + std::to_string(n) + ": radial round trip");
          return result;
        }
        ++radial_types;
      }
    }
    result.lines.push_back("n=" + std::to_string(n) + ": " + std::to_string(chains) + " chains, " +
                           std::to_string(radial_types) + " radial types, round trips ok");
    if (chains != radial_types) {
      result.ok = false;
      result.lines.push_back("FAIL n=" + std::to_string(n) + ": counts differ");
      return result;
    }
  }
  return result;
}

SuiteResult verify_balancing(int max_vertices) {
  check_range(max_vertices, 3, 5, "--max-vertices");
  SuiteResult result;
  for (int m = 3; m <= max_vertices; ++m) {
    Fan fan = bergman_fan(Graph::complete_range(2, m + 1));
    const bool balanced = is_balanced(fan).balanced;
    std::size_t broken = 0;
    const auto top = fan.cones_of_dim(fan.max_dim());
    for (auto c : top) {
      fan.set_weight(c, 2);
      if (!is_balanced(fan).balanced) ++broken;
      fan.set_weight(c, 1);
    }
    result.lines.push_back("B'(K" + std::to_string(m) + "): balanced " + yes_no(balanced) + ", " +
                           std::to_string(broken) + "/" + std::to_string(top.size()) +
                           " single-weight perturbations detected");
    if (!balanced || broken != top.size()) result.ok = false;
  }
  for (int m = 3; m <= max_vertices; ++m) {
    for (const auto& g : graphs_on(m)) {
      if (!is_connected(g) || !is_complete_multipartite(g).multipartite) continue;
      const auto moduli = moduli_fan_rad(m + 1, g);
      const bool balanced = is_balanced(moduli.image).balanced;
      const bool equal = fans_equal(moduli.image, bergman_fan(g));
      result.lines.push_back(edges_of(g) + ": balanced " + yes_no(balanced) + ", equals B'(Gamma) " +
                             yes_no(equal));
      if (!balanced || !equal) result.ok = false;
    }
  }
  return result;
}

SuiteResult verify_theorem(int min_vertices, int max_vertices) {
  check_range(min_vertices, 3, 5, "--min-vertices");
  check_range(max_vertices, min_vertices, 5, "--max-vertices");
  SuiteResult result;
  for (int m = min_vertices; m <= max_vertices; ++m) {
    for (const auto& g : graphs_on(m)) {
      if (!is_connected(g)) continue;
      const auto moduli = moduli_fan_rad(m + 1, g);
      const bool identified = moduli.identified();
      const auto report = verify_injectivity(g);
      const bool agree = report.consistent() && identified == report.multipartite;
      result.lines.push_back(edges_of(g) + ": identified " + yes_no(identified) + ", injective " +
                             yes_no(report.injective) + ", rank-preserving " + yes_no(report.rank_preserving) +
                             ", multipartite " + yes_no(report.multipartite) + (agree ? "" : "  MISMATCH"));
      if (!agree) result.ok = false;
    }
  }
  return result;
}

}  // namespace bergfan::cli
