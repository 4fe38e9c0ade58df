#pragma once

// Exhaustive verification suites behind `bergfan verify`.

#include <string>
#include <vector>

namespace bergfan::cli {

struct SuiteResult {
  bool ok = true;
  std::vector<std::string> lines;
};

/// Cycle matroids of every graph on 1..max_vertices vertices against all six
/// axiom families.
SuiteResult verify_axioms(int max_vertices);

/// Chain/radial round trips for n = 5..max_n, plus level count = chain length.
SuiteResult verify_psi(int max_n);

/// Unit-weight balancing of B'(K_m) for m = 3..max_vertices, failure after
/// doubling any one top-cone weight, and balancing plus equality with B'(Gamma)
/// of the projected moduli fan for every complete multipartite connected Gamma.
SuiteResult verify_balancing(int max_vertices);

/// For each connected Gamma on min..max vertices: bijectivity of the
/// projected moduli fan, the rank criterion, injectivity on stable flats and
/// complete multipartiteness must all agree.
SuiteResult verify_theorem(int min_vertices, int max_vertices);

}  // namespace bergfan::cli
