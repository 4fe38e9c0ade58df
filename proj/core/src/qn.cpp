#include "bergfan/qn.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "bergfan/error.hpp"

namespace bergfan {

std::size_t pair_index(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  if (i < 1 || j > n || i == j) throw PreconditionError("bad end pair");
  std::size_t idx = 0;
  for (int a = 1; a < i; ++a) idx += static_cast<std::size_t>(n - a);
  return idx + static_cast<std::size_t>(j - i - 1);
}

namespace {

std::size_t pair_count(int n) { return static_cast<std::size_t>(n * (n - 1) / 2); }

}  // namespace

QnVector QnVector::from_raw(int n, std::vector<Rational> raw) {
  if (n < 3 || n > kMaxEnds) throw PreconditionError("number of ends out of range");
  if (raw.size() != pair_count(n)) throw PreconditionError("wrong number of pair coordinates");
  // Solve for x with Phi(x) matching the pivots, then subtract Phi(x).
  std::vector<Rational> x(static_cast<std::size_t>(n) + 1);
  x[1] = (raw[pair_index(n, 1, 2)] + raw[pair_index(n, 1, 3)] - raw[pair_index(n, 2, 3)]) / 2;
  for (int k = 2; k <= n; ++k) x[k] = raw[pair_index(n, 1, k)] - x[1];
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) raw[pair_index(n, i, j)] -= x[i] + x[j];
  }
  QnVector v;
  v.n_ = n;
  v.coords_ = std::move(raw);
  return v;
}

QnVector QnVector::zero(int n) { return from_raw(n, std::vector<Rational>(pair_count(n))); }

bool QnVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& r) { return r.numerator() == 0; });
}

QnVector operator+(const QnVector& a, const QnVector& b) {
  if (a.n_ != b.n_) throw PreconditionError("Q_n dimension mismatch");
  std::vector<Rational> raw(a.coords_.size());
  for (std::size_t i = 0; i < raw.size(); ++i) raw[i] = a.coords_[i] + b.coords_[i];
  return QnVector::from_raw(a.n_, std::move(raw));
}

QnVector operator*(const Rational& k, const QnVector& a) {
  std::vector<Rational> raw(a.coords_);
  for (auto& r : raw) r *= k;
  return QnVector::from_raw(a.n_, std::move(raw));
}

void MetricType::validate() const {
  if (lengths.size() != type.bounded_edge_count()) throw PreconditionError("one length per bounded edge");
  for (const auto& l : lengths) {
    if (l.numerator() <= 0) throw PreconditionError("edge lengths must be positive");
  }
}

std::vector<Rational> MetricType::root_distances() const {
  validate();
  std::vector<Rational> dist(type.vertex_count());
  // Parents precede children in a breadth-first sweep from the root.
  std::vector<std::size_t> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto v = queue[head];
    for (auto c : type.children(v)) {
      dist[c] = dist[v] + lengths[c - 1];
      queue.push_back(c);
    }
  }
  return dist;
}

std::vector<Rational> pairwise_distances(const MetricType& m) {
  const int n = m.type.n();
  const auto dist = m.root_distances();
  std::vector<std::size_t> home(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t v = 0; v < m.type.vertex_count(); ++v) {
    for (auto e : split_elements(m.type.ends_at(v))) home[static_cast<std::size_t>(e)] = v;
  }
  // Lowest common ancestor by walking the deeper endpoint up.
  auto depth = [&](std::size_t v) {
    std::size_t d = 0;
    while (auto p = m.type.parent(v)) {
      v = *p;
      ++d;
    }
    return d;
  };
  auto lca = [&](std::size_t a, std::size_t b) {
    std::size_t da = depth(a);
    std::size_t db = depth(b);
    while (da > db) {
      a = *m.type.parent(a);
      --da;
    }
    while (db > da) {
      b = *m.type.parent(b);
      --db;
    }
    while (a != b) {
      a = *m.type.parent(a);
      b = *m.type.parent(b);
    }
    return a;
  };
  std::vector<Rational> out(pair_count(n));
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const auto a = home[static_cast<std::size_t>(i)];
      const auto b = home[static_cast<std::size_t>(j)];
      out[pair_index(n, i, j)] = dist[a] + dist[b] - 2 * dist[lca(a, b)];
    }
  }
  return out;
}

QnVector dist_vector(const MetricType& m) { return QnVector::from_raw(m.type.n(), pairwise_distances(m)); }

QnVector ray_of_split(int n, SplitMask split) {
  if (n < 3 || n > kMaxEnds) throw PreconditionError("number of ends out of range");
  const int size = std::popcount(split);
  const SplitMask universe = ((SplitMask{1} << (n + 1)) - 1) & ~SplitMask{3};
  if ((split & ~universe) != 0 || size < 2 || size > n - 1) {
    throw PreconditionError("invalid split " + format_split(split));
  }
  std::vector<Rational> raw(pair_count(n));
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const bool in_i = ((split >> i) & 1U) != 0;
      const bool in_j = ((split >> j) & 1U) != 0;
      if (in_i != in_j) raw[pair_index(n, i, j)] = 1;
    }
  }
  return QnVector::from_raw(n, std::move(raw));
}

// ---------------------------------------------------------------------------

RationalQuotient RationalQuotient::from_raw(std::vector<Rational> raw) {
  if (!raw.empty()) {
    const Rational last = raw.back();
    for (auto& r : raw) r -= last;
  }
  RationalQuotient q;
  q.coords_ = std::move(raw);
  return q;
}

bool RationalQuotient::is_integral() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& r) { return r.denominator() == 1; });
}

QuotientVector RationalQuotient::to_integral() const {
  if (!is_integral()) throw PreconditionError("vector is not integral");
  zlattice::Vector raw;
  for (const auto& r : coords_) raw.push_back(r.numerator());
  return QuotientVector::from_raw(std::move(raw));
}

RationalQuotient RationalQuotient::from_integral(const QuotientVector& v) {
  std::vector<Rational> raw;
  for (auto x : v.coords()) raw.emplace_back(x);
  return from_raw(std::move(raw));
}

RationalQuotient operator+(const RationalQuotient& a, const RationalQuotient& b) {
  if (a.coords_.size() != b.coords_.size()) throw PreconditionError("dimension mismatch");
  std::vector<Rational> raw(a.coords_.size());
  for (std::size_t i = 0; i < raw.size(); ++i) raw[i] = a.coords_[i] + b.coords_[i];
  return RationalQuotient::from_raw(std::move(raw));
}

RationalQuotient operator*(const Rational& k, const RationalQuotient& a) {
  std::vector<Rational> raw(a.coords_);
  for (auto& r : raw) r *= k;
  return RationalQuotient::from_raw(std::move(raw));
}

namespace {

using Matrix = std::vector<std::vector<Rational>>;

struct PsiBasis {
  std::vector<std::pair<int, int>> basis;     // rho_{ij} kept in the basis
  std::vector<std::pair<int, int>> free;      // non-pivot Q_n coordinates
  Matrix inverse;                             // basis coefficients from free coordinates
};

Matrix invert(Matrix a) {
  const std::size_t m = a.size();
  Matrix inv(m, std::vector<Rational>(m));
  for (std::size_t i = 0; i < m; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t pivot = col;
    while (pivot < m && a[pivot][col].numerator() == 0) ++pivot;
    if (pivot == m) throw PreconditionError("size-two splits do not form a basis");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational p = a[col][col];
    for (std::size_t k = 0; k < m; ++k) {
      a[col][k] /= p;
      inv[col][k] /= p;
    }
    for (std::size_t r = 0; r < m; ++r) {
      if (r == col || a[r][col].numerator() == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t k = 0; k < m; ++k) {
        a[r][k] -= f * a[col][k];
        inv[r][k] -= f * inv[col][k];
      }
    }
  }
  return inv;
}

PsiBasis build_basis(int n) {
  PsiBasis b;
  for (int i = 2; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (!(i == n - 1 && j == n)) b.basis.emplace_back(i, j);
      if (!(i == 2 && j == 3)) b.free.emplace_back(i, j);
    }
  }
  const std::size_t m = b.basis.size();
  Matrix a(m, std::vector<Rational>(m));
  for (std::size_t col = 0; col < m; ++col) {
    const auto [i, j] = b.basis[col];
    const auto rho = ray_of_split(n, (SplitMask{1} << i) | (SplitMask{1} << j));
    for (std::size_t row = 0; row < m; ++row) a[row][col] = rho.at(b.free[row].first, b.free[row].second);
  }
  b.inverse = invert(std::move(a));
  return b;
}

const PsiBasis& psi_basis(int n) {
  static std::mutex mutex;
  static std::map<int, PsiBasis> cache;
  const std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_basis(n)).first;
  return it->second;
}

}  // namespace

RationalQuotient psi_linear(const QnVector& v) {
  const int n = v.n();
  if (n < 4) throw PreconditionError("psi_linear needs at least 4 ends");
  const PsiBasis& b = psi_basis(n);
  const std::size_t edges = pair_count(n - 1);
  std::vector<Rational> raw(edges);
  for (std::size_t k = 0; k < b.basis.size(); ++k) {
    Rational c = 0;
    for (std::size_t row = 0; row < b.free.size(); ++row) {
      c += b.inverse[k][row] * v.at(b.free[row].first, b.free[row].second);
    }
    // Edge {i,j} of K on 2..n is pair {i-1,j-1} of an (n-1)-element index set.
    const auto [i, j] = b.basis[k];
    raw[pair_index(n - 1, i - 1, j - 1)] -= c;
  }
  return RationalQuotient::from_raw(std::move(raw));
}

QnRelationsReport qn_relations_check(int n) {
  if (n < 4 || n > 8) throw SizeLimitError("relation check supports 4 <= n <= 8");
  QnRelationsReport report;
  const std::size_t edges = pair_count(n - 1);
  QnVector sum = QnVector::zero(n);
  RationalQuotient psi_sum = RationalQuotient::from_raw(std::vector<Rational>(edges));
  for (int i = 2; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const auto rho = ray_of_split(n, (SplitMask{1} << i) | (SplitMask{1} << j));
      sum = sum + rho;
      const auto image = psi_linear(rho);
      std::vector<Rational> expected(edges);
      expected[pair_index(n - 1, i - 1, j - 1)] = -1;
      if (image != RationalQuotient::from_raw(expected)) report.psi_basis_images = false;
      psi_sum = psi_sum + image;
    }
  }
  report.sum_relation = sum.is_zero();
  report.psi_sum_vanishes = std::all_of(psi_sum.coords().begin(), psi_sum.coords().end(),
                                        [](const Rational& r) { return r.numerator() == 0; });

  const SplitMask universe = ((SplitMask{1} << (n + 1)) - 1) & ~SplitMask{3};
  std::vector<SplitMask> all;
  for (SplitMask s = universe; s != 0; s = (s - 1) & universe) {
    if (std::popcount(s) >= 2) all.push_back(s);
  }
  std::sort(all.begin(), all.end(), split_less);
  for (auto split : all) {
    QnVector pairs = QnVector::zero(n);
    const auto ends = split_elements(split);
    for (std::size_t a = 0; a < ends.size(); ++a) {
      for (std::size_t b = a + 1; b < ends.size(); ++b) {
        pairs = pairs + ray_of_split(n, (SplitMask{1} << ends[a]) | (SplitMask{1} << ends[b]));
      }
    }
    if (ray_of_split(n, split) != pairs) {
      report.split_relation = false;
      report.failing_split = split;
      break;
    }
  }
  return report;
}

}  // namespace bergfan
