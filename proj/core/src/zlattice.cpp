#include "bergfan/zlattice.hpp"

#include <algorithm>
#include <cstdlib>

#include "bergfan/error.hpp"

namespace bergfan::zlattice {

Int checked_add(Int a, Int b) {
  Int out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("integer overflow in addition");
  return out;
}

Int checked_mul(Int a, Int b) {
  Int out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("integer overflow in multiplication");
  return out;
}

Int gcd(Int a, Int b) {
  a = std::llabs(a);
  b = std::llabs(b);
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

Bezout extended_gcd(Int a, Int b) {
  Int old_r = a, r = b;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    const Int q = old_r / r;
    old_r = checked_add(old_r, -checked_mul(q, r));
    std::swap(old_r, r);
    old_s = checked_add(old_s, -checked_mul(q, s));
    std::swap(old_s, s);
    old_t = checked_add(old_t, -checked_mul(q, t));
    std::swap(old_t, t);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Int content(const Vector& v) {
  Int g = 0;
  for (auto x : v) g = gcd(g, x);
  return g;
}

Vector primitive(Vector v) {
  const Int g = content(v);
  if (g > 1) {
    for (auto& x : v) x /= g;
  }
  return v;
}

Vector add(const Vector& a, const Vector& b) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = checked_add(a[i], b[i]);
  return out;
}

Vector scale(const Vector& a, Int k) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = checked_mul(a[i], k);
  return out;
}

Int dot(const Vector& a, const Vector& b) {
  Int out = 0;
  for (std::size_t i = 0; i < a.size(); ++i) out = checked_add(out, checked_mul(a[i], b[i]));
  return out;
}

namespace {

// Replaces (x, y) by (s x + t y, -(b/g) x + (a/g) y), a unimodular change that
// leaves g in the first and 0 in the second slot of the column being cleared.
void combine(Vector& x, Vector& y, Int a, Int b) {
  const auto [g, s, t] = extended_gcd(a, b);
  const Int ag = a / g;
  const Int bg = b / g;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const Int nx = checked_add(checked_mul(s, x[k]), checked_mul(t, y[k]));
    const Int ny = checked_add(checked_mul(-bg, x[k]), checked_mul(ag, y[k]));
    x[k] = nx;
    y[k] = ny;
  }
}

}  // namespace

Rows hermite_normal_form(const Rows& vectors, std::size_t dim) {
  Rows a = vectors;
  for (const auto& v : a) {
    if (v.size() != dim) throw PreconditionError("vector length mismatch");
  }
  std::size_t row = 0;
  for (std::size_t col = 0; col < dim && row < a.size(); ++col) {
    for (std::size_t i = row + 1; i < a.size(); ++i) {
      if (a[i][col] != 0) combine(a[row], a[i], a[row][col], a[i][col]);
    }
    if (a[row][col] == 0) continue;
    if (a[row][col] < 0) a[row] = scale(a[row], -1);
    for (std::size_t k = 0; k < row; ++k) {
      const Int q = floor_div(a[k][col], a[row][col]);
      if (q != 0) a[k] = add(a[k], scale(a[row], -q));
    }
    ++row;
  }
  a.resize(row);
  return a;
}

Rows integer_kernel(const Rows& rows, std::size_t cols) {
  const std::size_t r = rows.size();
  // Column j holds (A e_j ; e_j); column operations keep it unimodular.
  Rows columns(cols, Vector(r + cols, 0));
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != cols) throw PreconditionError("matrix row length mismatch");
      columns[j][i] = rows[i][j];
    }
    columns[j][r + j] = 1;
  }
  std::size_t pivot = 0;
  for (std::size_t i = 0; i < r && pivot < cols; ++i) {
    for (std::size_t j = pivot + 1; j < cols; ++j) {
      if (columns[j][i] != 0) combine(columns[pivot], columns[j], columns[pivot][i], columns[j][i]);
    }
    if (columns[pivot][i] != 0) ++pivot;
  }
  Rows kernel;
  for (std::size_t j = pivot; j < cols; ++j) {
    kernel.emplace_back(columns[j].begin() + static_cast<std::ptrdiff_t>(r), columns[j].end());
  }
  return hermite_normal_form(kernel, cols);
}

Rows saturation(const Rows& vectors, std::size_t dim) {
  if (rank(vectors, dim) == 0) return {};
  const Rows functionals = integer_kernel(vectors, dim);
  return integer_kernel(functionals, dim);
}

Vector reduce_modulo(Vector v, const Rows& hnf) {
  for (const auto& h : hnf) {
    const auto p = static_cast<std::size_t>(
        std::find_if(h.begin(), h.end(), [](Int x) { return x != 0; }) - h.begin());
    if (p == h.size()) continue;
    const Int q = floor_div(v[p], h[p]);
    if (q != 0) v = add(v, scale(h, -q));
  }
  return v;
}

std::size_t rank(const Rows& vectors, std::size_t dim) {
  return hermite_normal_form(vectors, dim).size();
}

bool in_rational_span(const Vector& v, const Rows& vectors, std::size_t dim) {
  Rows with = vectors;
  with.push_back(v);
  return rank(with, dim) == rank(vectors, dim);
}

}  // namespace bergfan::zlattice
