#pragma once
// Facet enumeration (exact convex hull in the 5-dimensional correlator
// space) and the tightness test.

#include <optional>
#include <vector>

#include "symbell/types.hpp"

namespace symbell {

struct FacetList {
  i64 n = 0;
  i64 vertex_count = 0;
  std::vector<BellInequality> facets;  // canonical, lexicographically sorted
};

// Complete facet list of conv(vertices(n)) via the double description
// method on the dual cone {y in R^6 : y . (1, v) >= 0 for all vertices v},
// with exact integer (GMP) arithmetic end-to-end. Requires n >= 2; if the
// hull is not full-dimensional this is reported as an internal error naming
// the actual dimension. The parallel and serial variants return identical
// lists.
FacetList facets(i64 n);
FacetList facets_serial(i64 n);

enum class Tightness {
  invalid,   // some vertex violates the inequality
  not_tight, // valid but saturated by < 5 affinely independent vertices
  tight,     // a facet: 5 affinely independent saturating vertices
};

struct TightnessReport {
  Tightness status = Tightness::not_tight;
  // Saturating boundary tuples and their images, sorted; empty for invalid.
  std::vector<StrategyCounts> saturating_counts;
  std::vector<SymmetricVector> saturating_vertices;
  // Dimension of the affine hull of the saturating set (-1 when empty).
  int affine_dimension = -1;
  // For invalid: one violating tuple.
  std::optional<StrategyCounts> witness;
  // Set for inequalities that are not proper supporting hyperplanes
  // (all five coefficients zero).
  bool improper = false;
};

// Exact tightness test against all vertices of P for ineq.n parties.
TightnessReport is_tight(const BellInequality& ineq);

// True when ineq (in canonical form) appears in the facet list.
bool facet_list_contains(const FacetList& fl, const BellInequality& ineq);

}  // namespace symbell
