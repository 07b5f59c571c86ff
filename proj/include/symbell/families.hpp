#pragma once
// The two analytic inequality families and the facet classifier.
//
// Family B (three-parameter class): gamma = x^2, epsilon = y^2, delta =
// sigma*x*y, alpha_{+-} = x[sigma*mu +- (x+y)], beta = mu*y, with mu of
// parity opposite to epsilon (gamma) for odd (even) N. Its exact classical
// bound is beta_c = [N(x+y)^2 + (sigma*mu +- x)^2 - 1] / 2. The parity
// rule makes that a valid bound for any N; it is the exact bound only when
// some boundary strategy saturates the underlying core identity, so
// admissibility additionally requires solvability of a small Diophantine
// system (checked exactly, O(N); see class_b_rejection). Two ways it can
// fail: sigma*mu != +-1 modulo gcd(x,y), which rules the formula out for
// every N, or |mu| too large for the simplex at small N.
//
// Dicke family: alpha_N = N(N-1)(ceil(N/2)-N/2), beta_N = alpha_N/N,
// gamma_N = N(N-1)/2, delta_N = N/2, epsilon_N = -1, with
// beta_c(N) = (1/2) N(N-1) ceil((N+2)/2). For odd N the raw delta_N is a
// half-integer, so the stored integer inequality is the doubled one and
// `scale` records the factor (see DickeFamily).

#include <optional>
#include <string>
#include <vector>

#include "symbell/types.hpp"

namespace symbell {

struct FacetList;  // polytope.hpp

struct ClassBParams {
  i64 x = 1, y = 1;     // positive
  int sigma = 1;        // sign of delta
  i64 mu = 0;           // beta / y
  int branch = 1;       // +1 -> alpha_+, -1 -> alpha_-
  bool coprime = true;  // gcd(x,y) == 1; informational only
};

// Empty when admissible for this n; otherwise the violated condition.
std::optional<std::string> class_b_rejection(const ClassBParams& p, i64 n);

// Build + canonicalize; asserts the analytic bound against
// classical_bound_exact (internal_error on mismatch). Requires n >= 2 and
// admissible parity (precondition_error otherwise).
BellInequality class_b_build(const ClassBParams& p, i64 n);

// The strategy count entering the bound proof's core inequality
//   (x*S0 + sigma*y*S1 + sigma*mu +- x)^2 + 8*x*y*r >= 1:
// r = b (alpha_+, sigma=+1), a (alpha_+, sigma=-1), c (alpha_-, sigma=+1),
// d (alpha_-, sigma=-1).
i64 class_b_core_r(const ClassBParams& p, const StrategyCounts& t);

// Exact check of the core inequality at one boundary point.
bool class_b_core_holds(const ClassBParams& p, const StrategyCounts& t);

struct ClassBMatch {
  std::size_t facet_index;
  ClassBParams params;
};

struct ClassifyResult {
  i64 matched = 0;
  std::vector<ClassBMatch> matches;  // one entry per matched facet
};

// Decide membership by inverting the coefficient map on each canonical
// facet. The only possible integer multiplier restoring (x^2, y^2, sigma*xy)
// from a gcd-1 facet is the common squarefree kernel of gamma and epsilon;
// each candidate is confirmed by rebuilding through class_b_build.
ClassifyResult classify_facets_as_class_b(const FacetList& facets);

struct DickeFamily {
  BellInequality ineq;  // canonical stored form (doubled when n is odd)
  i64 scale = 1;        // stored = scale * family normalization
  // beta_c in the family normalization, (1/2) n(n-1) ceil((n+2)/2);
  // equals ineq.beta_c / scale.
  i64 beta_c_family = 0;
};

// Requires n >= 2; asserts the analytic bound via classical_bound_exact.
DickeFamily dicke_family(i64 n);
BellInequality dicke_build(i64 n);

// The five boundary tuples saturating the Dicke inequality.
std::vector<StrategyCounts> dicke_saturating_counts(i64 n);

}  // namespace symbell
