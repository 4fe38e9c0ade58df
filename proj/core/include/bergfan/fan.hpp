#pragma once

// Weighted simplicial fans in R^E / L, where E is the edge set of a reference
// graph and L the line spanned by the all-ones vector, and the Bergman fan of
// a cycle matroid in its chains-of-flats subdivision.
//
// Vectors modulo L are stored by their canonical representative, the one
// whose last coordinate is 0 (subtract last * (1,...,1)). That map is a
// lattice isomorphism Z^E / Z(1,...,1) -> Z^(|E|-1), so lattice questions are
// answered on the first |E|-1 coordinates.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "bergfan/graph.hpp"
#include "bergfan/matroid.hpp"
#include "bergfan/zlattice.hpp"

namespace bergfan {

class QuotientVector {
 public:
  QuotientVector() = default;

  /// Canonical representative of raw + L.
  static QuotientVector from_raw(zlattice::Vector raw);
  /// Lift of a reduced vector (first |E|-1 coordinates) back to Z^E.
  static QuotientVector from_reduced(zlattice::Vector reduced);

  [[nodiscard]] const zlattice::Vector& coords() const { return coords_; }
  [[nodiscard]] std::size_t ambient_dim() const { return coords_.size(); }
  /// Coordinates in Z^(|E|-1).
  [[nodiscard]] zlattice::Vector reduced() const;
  [[nodiscard]] bool is_zero() const;
  /// Divides out the content; the zero vector stays zero.
  [[nodiscard]] QuotientVector primitive() const;

  friend QuotientVector operator+(const QuotientVector& a, const QuotientVector& b);
  friend QuotientVector operator-(const QuotientVector& a, const QuotientVector& b);
  friend QuotientVector operator*(zlattice::Int k, const QuotientVector& a);
  friend auto operator<=>(const QuotientVector&, const QuotientVector&) = default;

 private:
  zlattice::Vector coords_;
};

/// rho_F = -(sum of v_e over e in F), canonicalized. The flat must be a flat of
/// `ambient` (its edge set is the cluster graph of its blocks inside ambient).
QuotientVector ray_of_flat(const Flat& f, const Graph& ambient);

/// A simplicial cone of a Fan: indices into the fan's ray table.
struct Cone {
  std::vector<std::size_t> rays;  // sorted
  std::int64_t weight = 1;
  /// Chains of flats (of Fan::source) this cone is the image of; one entry
  /// for a Bergman cone, the whole fiber for a projected cone.
  std::vector<ChainOfFlats> sources;

  [[nodiscard]] std::size_t dim() const { return rays.size(); }
};

class Fan {
 public:
  Fan() = default;
  /// Empty fan in R^{E(ambient)}/L whose provenance chains live in `source`.
  Fan(Graph ambient, Graph source);

  [[nodiscard]] const Graph& ambient() const { return ambient_; }
  [[nodiscard]] const Graph& source() const { return source_; }
  [[nodiscard]] const std::vector<QuotientVector>& rays() const { return rays_; }
  [[nodiscard]] const std::vector<Cone>& cones() const { return cones_; }
  [[nodiscard]] std::size_t max_dim() const;
  /// Do all inclusion-maximal cones have dimension max_dim?
  [[nodiscard]] bool is_pure() const;

  /// Interns a nonzero primitive ray and returns its index.
  std::size_t intern_ray(const QuotientVector& ray);
  /// Adds a cone spanned by the given ray indices, or merges its sources into
  /// an existing cone with the same ray set. Returns the cone index.
  std::size_t add_cone(std::vector<std::size_t> rays, std::int64_t weight,
                       std::vector<ChainOfFlats> sources);
  void set_weight(std::size_t cone, std::int64_t weight);

  [[nodiscard]] std::optional<std::size_t> find_ray(const QuotientVector& ray) const;
  [[nodiscard]] std::optional<std::size_t> find_cone(std::vector<std::size_t> rays) const;
  [[nodiscard]] std::vector<std::size_t> cones_of_dim(std::size_t d) const;
  [[nodiscard]] std::vector<std::size_t> maximal_cones() const;
  /// Is cone `tau` a face of cone `sigma` (ray subset)?
  [[nodiscard]] bool is_face(std::size_t tau, std::size_t sigma) const;
  /// Ray vectors of a cone.
  [[nodiscard]] std::vector<QuotientVector> cone_rays(std::size_t cone) const;
  /// Number of cones of each dimension 0..max_dim.
  [[nodiscard]] std::vector<std::size_t> census() const;

  /// Sorts rays and cones into canonical order (rays by coordinates, cones by
  /// dimension then ray lists) so that output is independent of build order.
  void canonicalize();

 private:
  Graph ambient_;
  Graph source_;
  std::vector<QuotientVector> rays_;
  std::vector<Cone> cones_;
  std::map<QuotientVector, std::size_t> ray_index_;
  std::map<std::vector<std::size_t>, std::size_t> cone_index_;
};

/// B'(M(g)) with the chains-of-flats structure: one cone per chain of proper
/// nonempty flats (the empty chain gives the origin), all weights 1.
Fan bergman_fan(const Graph& g);

/// Primitive normal vector u_{sigma/tau}: an integer vector in sigma whose
/// class generates (lattice of span sigma)/(lattice of span tau), oriented
/// into sigma, reduced modulo the lattice of span tau by its Hermite basis.
/// tau's rays must be sigma's rays minus one (compared as primitive vectors).
QuotientVector primitive_normal(const std::vector<QuotientVector>& sigma,
                                const std::vector<QuotientVector>& tau);

struct BalanceReport {
  bool balanced = true;
  /// First codimension-one cone (index into the fan) where the weighted sum
  /// of primitive normals leaves the span of the cone.
  std::optional<std::size_t> failing_face;
};

/// Exact balancing check over every codimension-one cone. Throws
/// PreconditionError for a non-pure fan.
BalanceReport is_balanced(const Fan& fan);

/// Keeps only the coordinates of gamma's edges (matched by labels) and
/// re-canonicalizes. gamma must be a subgraph of ambient.
QuotientVector project_vector(const QuotientVector& v, const Graph& ambient, const Graph& gamma);

/// Forgets the coordinates of edges of fan.ambient() that are not in gamma.
/// Image cones are spanned by the distinct nonzero images of the rays, keep
/// the sources of every preimage and carry weight 1. gamma must have the same
/// labels as fan.ambient() and be a subgraph of it.
Fan project_fan(const Fan& fan, const Graph& gamma);

/// Same ambient edges, and a bijection of cones matching ray sets exactly.
bool fans_equal(const Fan& a, const Fan& b);

}  // namespace bergfan
