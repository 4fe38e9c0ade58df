#pragma once

// Exact integer linear algebra for the small lattices that appear in fans:
// integer kernels via unimodular column reduction, saturation of a span,
// row Hermite normal form and reduction of a vector modulo a lattice.
// All arithmetic is on int64 with overflow checks (OverflowError).

#include <cstddef>
#include <cstdint>
#include <vector>

namespace bergfan::zlattice {

using Int = std::int64_t;
using Vector = std::vector<Int>;
/// A list of row vectors of equal length.
using Rows = std::vector<Vector>;

Int checked_add(Int a, Int b);
Int checked_mul(Int a, Int b);
Int gcd(Int a, Int b);

struct Bezout {
  Int g;  // gcd >= 0
  Int s;  // s*a + t*b == g
  Int t;
};
Bezout extended_gcd(Int a, Int b);

/// Floor division for b > 0.
Int floor_div(Int a, Int b);

/// gcd of the entries (0 for the zero vector).
Int content(const Vector& v);
/// v divided by its content; the zero vector is returned unchanged.
Vector primitive(Vector v);

/// Basis (in row Hermite form) of {x in Z^cols : r . x = 0 for all rows r}.
Rows integer_kernel(const Rows& rows, std::size_t cols);

/// Basis (in row Hermite form) of span_Q(vectors) intersected with Z^dim.
Rows saturation(const Rows& vectors, std::size_t dim);

/// Row Hermite normal form of the lattice spanned by `vectors`: nonzero rows,
/// strictly increasing pivot columns, positive pivots, entries above each
/// pivot reduced into [0, pivot).
Rows hermite_normal_form(const Rows& vectors, std::size_t dim);

/// Unique representative of v modulo the lattice with Hermite basis `hnf`:
/// every pivot coordinate lands in [0, pivot).
Vector reduce_modulo(Vector v, const Rows& hnf);

/// Rank over Q.
std::size_t rank(const Rows& vectors, std::size_t dim);

/// Does v lie in span_Q(vectors)?
bool in_rational_span(const Vector& v, const Rows& vectors, std::size_t dim);

Vector add(const Vector& a, const Vector& b);
Vector scale(const Vector& a, Int k);
Int dot(const Vector& a, const Vector& b);

}  // namespace bergfan::zlattice
