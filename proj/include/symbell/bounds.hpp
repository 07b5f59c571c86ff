#pragma once
// Exact classical bounds: beta_c = -min I over the boundary of T_N, plus an
// independent brute-force oracle over all 4^n deterministic strategies.

#include <vector>

#include "symbell/types.hpp"

namespace symbell {

struct BoundResult {
  i64 beta_c2 = 0;                      // 2*beta_c, always integral
  std::vector<StrategyCounts> minimizers;  // all argmin boundary tuples, sorted

  bool beta_c_is_integer() const { return beta_c2 % 2 == 0; }
  HalfInt beta_c() const { return HalfInt{beta_c2}; }
};

// Scan of the 2(n^2+1) boundary points. Exact: int64 accumulation when an
// a-priori magnitude bound fits, otherwise 128-bit; coefficient ranges whose
// bound exceeds 128 bits are rejected (far outside every use in this
// artifact). Requires n >= 2. Parallelized over the boundary; the serial
// twin below must produce identical results.
BoundResult classical_bound_exact(i64 alpha, i64 beta, i64 gamma, i64 delta,
                                  i64 epsilon, i64 n);
BoundResult classical_bound_exact_serial(i64 alpha, i64 beta, i64 gamma,
                                         i64 delta, i64 epsilon, i64 n);

// Independent oracle: minimize I over every assignment of (+-1,+-1) per
// party, evaluating the two-body sums pairwise (no use of phi). Requires
// n <= 14 (cost 4^n); larger n is refused with the limit named.
HalfInt classical_bound_bruteforce(i64 alpha, i64 beta, i64 gamma, i64 delta,
                                   i64 epsilon, i64 n);
HalfInt classical_bound_bruteforce_serial(i64 alpha, i64 beta, i64 gamma,
                                          i64 delta, i64 epsilon, i64 n);

}  // namespace symbell
