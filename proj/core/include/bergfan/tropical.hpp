#pragma once

// Combinatorial types of rational tropical curves with n marked ends.
//
// A type is stored by its set of splits: each bounded edge cuts the ends into
// two sides and we record the side I not containing end 1, as a bitmask with
// bit e standing for end e. Compatible split families (pairwise nested or
// disjoint) are in bijection with types. Internal vertex 0 is the root (it
// carries end 1); vertex i >= 1 is the far endpoint of the bounded edge of
// the i-th split in canonical order.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bergfan {

using SplitMask = std::uint32_t;

/// Largest number of ends a type may carry.
inline constexpr int kMaxEnds = 16;

/// Ends of a split in increasing order.
std::vector<int> split_elements(SplitMask s);
SplitMask split_from_elements(const std::vector<int>& ends);
/// "{2,3}".
std::string format_split(SplitMask s);

/// Canonical order on splits: lexicographic on the sorted end lists.
bool split_less(SplitMask a, SplitMask b);
/// Nested or disjoint.
bool splits_compatible(SplitMask a, SplitMask b);

/// Every split I of {2..n} with 2 <= |I| <= n-2, canonically ordered.
std::vector<SplitMask> all_splits(int n);

class TropicalType {
 public:
  TropicalType() = default;

  /// Validates 3 <= n <= kMaxEnds, every split a subset of {2..n} of size
  /// between 2 and n-2, no repeats, pairwise compatible.
  static TropicalType from_splits(int n, std::vector<SplitMask> splits);
  /// The type with no bounded edges.
  static TropicalType star(int n);

  [[nodiscard]] int n() const { return n_; }
  /// Canonically ordered; split i-1 belongs to vertex i.
  [[nodiscard]] const std::vector<SplitMask>& splits() const { return splits_; }
  [[nodiscard]] std::size_t vertex_count() const { return splits_.size() + 1; }
  [[nodiscard]] std::size_t bounded_edge_count() const { return splits_.size(); }

  [[nodiscard]] std::optional<std::size_t> parent(std::size_t v) const;
  [[nodiscard]] const std::vector<std::size_t>& children(std::size_t v) const;
  /// Ends attached directly to v; end 1 sits at the root.
  [[nodiscard]] SplitMask ends_at(std::size_t v) const;
  /// All ends below v (for the root, every end).
  [[nodiscard]] SplitMask ends_below(std::size_t v) const;
  /// Number of bounded edges at v.
  [[nodiscard]] std::size_t degree(std::size_t v) const;
  /// Bounded edges plus ends at v.
  [[nodiscard]] std::size_t valence(std::size_t v) const;
  /// Vertex whose split is s, if any.
  [[nodiscard]] std::optional<std::size_t> vertex_of(SplitMask s) const;
  /// Every internal vertex at least trivalent.
  [[nodiscard]] bool is_plain_stable() const;
  /// (parent, child) per bounded edge, ordered by child.
  [[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>> bounded_edges() const;

  /// Type with the bounded edge of split s contracted.
  [[nodiscard]] TropicalType contract(SplitMask s) const;

  friend bool operator==(const TropicalType& a, const TropicalType& b) {
    return a.n_ == b.n_ && a.splits_ == b.splits_;
  }
  friend bool operator<(const TropicalType& a, const TropicalType& b);

 private:
  int n_ = 0;
  std::vector<SplitMask> splits_;
  std::vector<std::size_t> parent_;  // parent_[0] unused
  std::vector<std::vector<std::size_t>> children_;
  std::vector<SplitMask> ends_;
};

/// One split per bounded edge, in canonical order.
std::vector<SplitMask> splits(const TropicalType& c);

/// Every type with n ends and all internal vertices at least trivalent,
/// ordered by number of bounded edges and then canonically. 4 <= n <= 8.
std::vector<TropicalType> enumerate_types(int n);

}  // namespace bergfan
