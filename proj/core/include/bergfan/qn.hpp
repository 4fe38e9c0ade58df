#pragma once

// The space Q_n = R^(n choose 2) / Phi(R^n) of tree metrics, where
// Phi(x)_{ij} = x_i + x_j, with exact rational coordinates, and the linear
// isomorphism Psi from Q_n onto R^{E(K_{n-1})}/L defined on the basis of
// size-two splits.
//
// Pairs {i<j} of [n] are indexed lexicographically: (1,2), (1,3), ..., (n-1,n).
// A QnVector is kept in canonical form: zero in the pivot coordinates
// {1,2}, ..., {1,n} and {2,3}.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include <boost/rational.hpp>

#include "bergfan/fan.hpp"
#include "bergfan/tropical.hpp"

namespace bergfan {

using Rational = boost::rational<std::int64_t>;

/// Index of the pair {i, j} (1-based ends, i != j) among the n choose 2 pairs.
std::size_t pair_index(int n, int i, int j);

class QnVector {
 public:
  QnVector() = default;
  /// Canonical class of a raw pairwise vector of length n choose 2.
  static QnVector from_raw(int n, std::vector<Rational> raw);
  static QnVector zero(int n);

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] const std::vector<Rational>& coords() const { return coords_; }
  [[nodiscard]] Rational at(int i, int j) const { return coords_[pair_index(n_, i, j)]; }
  [[nodiscard]] bool is_zero() const;

  friend QnVector operator+(const QnVector& a, const QnVector& b);
  friend QnVector operator*(const Rational& k, const QnVector& a);
  friend bool operator==(const QnVector&, const QnVector&) = default;

 private:
  int n_ = 0;
  std::vector<Rational> coords_;
};

/// A type with a positive length on each bounded edge; lengths[v - 1] is the
/// length of the edge from vertex v to its parent.
struct MetricType {
  TropicalType type;
  std::vector<Rational> lengths;

  /// Throws PreconditionError unless there is one positive length per edge.
  void validate() const;
  /// Distance from the root to every vertex (root first).
  [[nodiscard]] std::vector<Rational> root_distances() const;
};

/// Pairwise distances between ends (raw, not reduced modulo Phi).
std::vector<Rational> pairwise_distances(const MetricType& m);

/// Canonical class of the pairwise distance vector.
QnVector dist_vector(const MetricType& m);

/// rho_I: class of the curve with one bounded edge of length 1 and split I.
/// Any I with 2 <= |I| <= n-1 and 1 not in I is accepted.
QnVector ray_of_split(int n, SplitMask split);

struct QnRelationsReport {
  /// Sum of rho_S over all two-element S avoiding end 1 vanishes.
  bool sum_relation = true;
  /// rho_I equals the sum of rho_S over two-element subsets of I, every I.
  bool split_relation = true;
  std::optional<SplitMask> failing_split;
  /// Psi sends every rho_{ij} (including the one left out of the basis) to
  /// -v_{e_ij}.
  bool psi_basis_images = true;
  /// Psi carries the sum relation to the zero class.
  bool psi_sum_vanishes = true;

  [[nodiscard]] bool ok() const {
    return sum_relation && split_relation && psi_basis_images && psi_sum_vanishes;
  }
};

QnRelationsReport qn_relations_check(int n);

/// A rational vector modulo the all-ones line, canonical (last coordinate 0).
class RationalQuotient {
 public:
  RationalQuotient() = default;
  static RationalQuotient from_raw(std::vector<Rational> raw);

  [[nodiscard]] const std::vector<Rational>& coords() const { return coords_; }
  [[nodiscard]] bool is_integral() const;
  /// Integral representative; throws PreconditionError if not integral.
  [[nodiscard]] QuotientVector to_integral() const;
  static RationalQuotient from_integral(const QuotientVector& v);

  friend RationalQuotient operator+(const RationalQuotient& a, const RationalQuotient& b);
  friend RationalQuotient operator*(const Rational& k, const RationalQuotient& a);
  friend bool operator==(const RationalQuotient&, const RationalQuotient&) = default;

 private:
  std::vector<Rational> coords_;
};

/// Psi: Q_n -> R^{E(K_{n-1})}/L, the linear map with rho_{ij} -> -v_{e_ij}.
/// Coordinates follow the canonical edge order of K on labels 2..n.
RationalQuotient psi_linear(const QnVector& v);

}  // namespace bergfan
