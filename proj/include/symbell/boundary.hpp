#pragma once
// Vertex side of the symmetric two-body local polytope: the boundary of the
// strategy-count tetrahedron T_N = {(a,b,c,d) >= 0, a+b+c+d = N} maps under
// phi onto exactly the 2(N^2+1) vertices.

#include <utility>
#include <vector>

#include "symbell/types.hpp"

namespace symbell {

// Number of boundary 4-tuples, 2(n^2+1).
i64 vertex_count(i64 n);

// All 4-tuples with a+b+c+d = n and abcd = 0, each exactly once,
// in a fixed deterministic order. Requires n >= 1.
std::vector<StrategyCounts> enumerate_boundary_counts(i64 n);

// phi applied to each boundary tuple; pairwise distinct.
std::vector<SymmetricVector> vertices(i64 n);

// Vertices together with their generating tuples (phi is injective on the
// boundary, so the pairing is one-to-one).
std::vector<std::pair<StrategyCounts, SymmetricVector>> vertices_with_counts(i64 n);

// Streaming visitation of the boundary without materializing it; used by the
// bound scans at large n. f is called once per boundary tuple.
template <typename F>
void for_each_boundary_count(i64 n, F&& f) {
  if (n < 1) throw precondition_error("boundary tuples require n >= 1");
  // Partition the boundary by the first vanishing coordinate so every tuple
  // is visited exactly once: a=0; then b=0 with a>0; c=0 with a,b>0;
  // d=0 with a,b,c>0.
  for (i64 b = 0; b <= n; ++b)
    for (i64 c = 0; b + c <= n; ++c) f(StrategyCounts{0, b, c, n - b - c, n});
  for (i64 a = 1; a <= n; ++a)
    for (i64 c = 0; a + c <= n; ++c) f(StrategyCounts{a, 0, c, n - a - c, n});
  for (i64 a = 1; a <= n; ++a)
    for (i64 b = 1; a + b <= n; ++b) f(StrategyCounts{a, b, 0, n - a - b, n});
  for (i64 a = 1; a <= n; ++a)
    for (i64 b = 1; a + b + 1 <= n; ++b) {
      i64 c = n - a - b;  // d = 0, c >= 1
      f(StrategyCounts{a, b, c, 0, n});
    }
}

}  // namespace symbell
