#include "bergfan/tropical.hpp"

#include <algorithm>
#include <bit>

#include "bergfan/error.hpp"

namespace bergfan {

std::vector<int> split_elements(SplitMask s) {
  std::vector<int> out;
  for (int e = 0; e < 32; ++e) {
    if ((s >> e) & 1U) out.push_back(e);
  }
  return out;
}

SplitMask split_from_elements(const std::vector<int>& ends) {
  SplitMask s = 0;
  for (auto e : ends) {
    if (e < 1 || e > kMaxEnds) throw PreconditionError("end label out of range");
    s |= SplitMask{1} << e;
  }
  return s;
}

std::string format_split(SplitMask s) {
  std::string out = "{";
  bool first = true;
  for (auto e : split_elements(s)) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

bool split_less(SplitMask a, SplitMask b) { return split_elements(a) < split_elements(b); }

bool splits_compatible(SplitMask a, SplitMask b) {
  return (a & b) == 0 || (a & b) == a || (a & b) == b;
}

std::vector<SplitMask> all_splits(int n) {
  if (n < 3 || n > kMaxEnds) throw PreconditionError("number of ends out of range");
  std::vector<SplitMask> out;
  const SplitMask universe = ((SplitMask{1} << (n + 1)) - 1) & ~SplitMask{3};  // {2..n}
  for (SplitMask s = universe; s != 0; s = (s - 1) & universe) {
    const int size = std::popcount(s);
    if (size >= 2 && size <= n - 2) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), split_less);
  return out;
}

TropicalType TropicalType::from_splits(int n, std::vector<SplitMask> splits) {
  if (n < 3 || n > kMaxEnds) throw PreconditionError("number of ends out of range");
  const SplitMask universe = ((SplitMask{1} << (n + 1)) - 1) & ~SplitMask{3};
  for (auto s : splits) {
    const int size = std::popcount(s);
    if ((s & ~universe) != 0 || size < 2 || size > n - 2) {
      throw PreconditionError("invalid split " + format_split(s));
    }
  }
  std::sort(splits.begin(), splits.end(), split_less);
  if (std::adjacent_find(splits.begin(), splits.end()) != splits.end()) {
    throw PreconditionError("repeated split");
  }
  for (std::size_t i = 0; i < splits.size(); ++i) {
    for (std::size_t j = i + 1; j < splits.size(); ++j) {
      if (!splits_compatible(splits[i], splits[j])) {
        throw PreconditionError("incompatible splits " + format_split(splits[i]) + " and " +
                                format_split(splits[j]));
      }
    }
  }

  TropicalType t;
  t.n_ = n;
  t.splits_ = std::move(splits);
  const std::size_t count = t.splits_.size() + 1;
  t.parent_.assign(count, 0);
  t.children_.assign(count, {});
  t.ends_.assign(count, 0);
  auto split_of = [&](std::size_t v) { return v == 0 ? (universe | SplitMask{2}) : t.splits_[v - 1]; };
  for (std::size_t v = 1; v < count; ++v) {
    // Parent: the smallest strictly larger split containing this one.
    std::size_t best = 0;
    for (std::size_t w = 1; w < count; ++w) {
      if (w == v) continue;
      const SplitMask sw = split_of(w);
      if ((sw & split_of(v)) == split_of(v) &&
          (best == 0 || std::popcount(sw) < std::popcount(split_of(best)))) {
        best = w;
      }
    }
    t.parent_[v] = best;
    t.children_[best].push_back(v);
  }
  for (std::size_t v = 0; v < count; ++v) {
    SplitMask below = split_of(v);
    for (auto c : t.children_[v]) below &= ~split_of(c);
    t.ends_[v] = below;
  }
  return t;
}

TropicalType TropicalType::star(int n) { return from_splits(n, {}); }

std::optional<std::size_t> TropicalType::parent(std::size_t v) const {
  if (v == 0 || v >= vertex_count()) return std::nullopt;
  return parent_[v];
}

const std::vector<std::size_t>& TropicalType::children(std::size_t v) const { return children_.at(v); }

SplitMask TropicalType::ends_at(std::size_t v) const { return ends_.at(v); }

SplitMask TropicalType::ends_below(std::size_t v) const {
  if (v == 0) return ((SplitMask{1} << (n_ + 1)) - 1) & ~SplitMask{1};
  return splits_.at(v - 1);
}

std::size_t TropicalType::degree(std::size_t v) const {
  return children_.at(v).size() + (v == 0 ? 0 : 1);
}

std::size_t TropicalType::valence(std::size_t v) const {
  return degree(v) + static_cast<std::size_t>(std::popcount(ends_.at(v)));
}

std::optional<std::size_t> TropicalType::vertex_of(SplitMask s) const {
  const auto it = std::lower_bound(splits_.begin(), splits_.end(), s, split_less);
  if (it == splits_.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - splits_.begin()) + 1;
}

bool TropicalType::is_plain_stable() const {
  for (std::size_t v = 0; v < vertex_count(); ++v) {
    if (valence(v) < 3) return false;
  }
  return true;
}

std::vector<std::pair<std::size_t, std::size_t>> TropicalType::bounded_edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t v = 1; v < vertex_count(); ++v) out.emplace_back(parent_[v], v);
  return out;
}

TropicalType TropicalType::contract(SplitMask s) const {
  std::vector<SplitMask> rest;
  for (auto x : splits_) {
    if (x != s) rest.push_back(x);
  }
  if (rest.size() == splits_.size()) throw PreconditionError("no bounded edge with split " + format_split(s));
  return from_splits(n_, std::move(rest));
}

bool operator<(const TropicalType& a, const TropicalType& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  if (a.splits_.size() != b.splits_.size()) return a.splits_.size() < b.splits_.size();
  return std::lexicographical_compare(a.splits_.begin(), a.splits_.end(), b.splits_.begin(),
                                      b.splits_.end(), split_less);
}

std::vector<SplitMask> splits(const TropicalType& c) { return c.splits(); }

namespace {

void extend(int n, const std::vector<SplitMask>& universe, std::size_t next,
            std::vector<SplitMask>& chosen, std::vector<TropicalType>& out) {
  out.push_back(TropicalType::from_splits(n, chosen));
  for (std::size_t i = next; i < universe.size(); ++i) {
    const bool ok = std::all_of(chosen.begin(), chosen.end(),
                                [&](SplitMask s) { return splits_compatible(s, universe[i]); });
    if (!ok) continue;
    chosen.push_back(universe[i]);
    extend(n, universe, i + 1, chosen, out);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<TropicalType> enumerate_types(int n) {
  if (n < 4 || n > 8) throw SizeLimitError("type enumeration supports 4 <= n <= 8");
  const auto universe = all_splits(n);
  std::vector<TropicalType> out;
  std::vector<SplitMask> chosen;
  extend(n, universe, 0, chosen, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace bergfan
