#pragma once
// Quantum side: Bell operators restricted to the symmetric (Dicke) subspace,
// eigenvalue minimization over the measurement angle, Dicke-state analytics,
// reduced two-qubit objects, and collective-to-pairwise conversions.
//
// Measurements are identical on every site: M0 = sigma_z and
// M1 = cos(theta) sigma_z + sin(theta) sigma_x. In the Dicke basis
// |k> (k excitations, S_z |k> = (N/2 - k)|k>) the Bell operator
//   B = alpha*Sum_i M0 + beta*Sum_i M1 + (gamma/2)*Sum_{i!=j} M0 M0
//     + delta*Sum_{i!=j} M0 M1 + (epsilon/2)*Sum_{i!=j} M1 M1 + beta_c
// reduces via the collective identities
//   Sum_i (u.sigma)^(i)            = 2 u.S,
//   Sum_{i!=j} (u.sigma)(w.sigma)  = 2[(u.S)(w.S)+(w.S)(u.S)] - N(u.w)
// to a real symmetric pentadiagonal (N+1)x(N+1) matrix.

#include <Eigen/Dense>
#include <vector>

#include "symbell/types.hpp"

namespace symbell {

struct MeasurementSettings {
  double theta = 0.0;  // radians, in [0, pi]
};

// Real symmetric banded matrix in the Dicke basis, half-bandwidth <= 2.
struct SymmetricOperator {
  i64 n = 0;                  // parties; matrix dimension n+1
  std::vector<double> diag;   // size n+1
  std::vector<double> off1;   // size n   (k <-> k+1)
  std::vector<double> off2;   // size n-1 (k <-> k+2)

  i64 dim() const { return n + 1; }
  Eigen::MatrixXd dense() const;
};

// Restriction of the Bell operator (including the +beta_c shift) to the
// symmetric subspace. Requires n >= 2 and theta in [0, pi].
SymmetricOperator bell_operator_sym(const BellInequality& ineq,
                                    MeasurementSettings settings);

// Full 2^n tensor-product construction; oracle for the compression.
// Requires 2 <= n <= 10.
Eigen::MatrixXd bell_operator_full(const BellInequality& ineq,
                                   MeasurementSettings settings);

// Smallest eigenvalue to 1e-9 relative accuracy. Dense solve for small
// dimensions, banded Sturm-count bisection above; non-convergence raises
// internal_error naming the iteration budget.
double min_eigenvalue(const SymmetricOperator& op);
double min_eigenvalue_dense(const SymmetricOperator& op);  // oracle path
double min_eigenvalue_banded(const SymmetricOperator& op);

struct ThetaOptimum {
  double theta_star = 0.0;
  double lambda_min = 0.0;
  double effective_violation = 0.0;  // lambda_min / beta_c
  bool violation = false;            // lambda_min < 0
};

// Minimize min_eigenvalue(bell_operator_sym(ineq, theta)) over [0, pi]:
// 1024-point grid then golden-section refinement, ties resolved toward the
// smallest theta; theta accurate to 1e-6.
ThetaOptimum optimize_theta(const BellInequality& ineq);
ThetaOptimum optimize_theta_serial(const BellInequality& ineq);

// Same protocol but minimizing the Dicke-state expectation
// <D_n^{ceil(n/2)} | B(theta) | D_n^{ceil(n/2)}> instead of the operator
// minimum; this is the quantity with closed form
//   scale * 4*floor(n/2)*sin^2(t/2)*[(ceil(n/2)+1)*sin^2(t/2) - 1].
ThetaOptimum optimize_theta_dicke_expectation(const BellInequality& ineq);

// <D_n^k | B(theta) | D_n^k> for the operator of ineq (diagonal entry k).
double dicke_expectation(const BellInequality& ineq, MeasurementSettings settings, i64 k);

struct DickeViolation {
  double theta_min = 0.0;  // arccos(ceil(n/2) / (ceil(n/2)+1))
  double value = 0.0;      // -floor(n/2) / (ceil(n/2)+1), family normalization
  double effective = 0.0;  // value / beta_c_family
};

// Closed-form violation data; also verifies the closed form against the
// operator construction on a theta grid (internal_error on disagreement).
DickeViolation dicke_violation_analytic(i64 n);

// Two-qubit reduced density matrix of |D_n^k> in the basis {00,01,10,11}:
// (1/(n(n-1))) * [p, [q q; q q], r] with p = (n-k)(n-k-1), q = k(n-k),
// r = k(k-1). Default k = ceil(n/2). Requires n >= 2.
Eigen::Matrix4d dicke_reduced_two_qubit(i64 n);
Eigen::Matrix4d dicke_reduced_two_qubit(i64 n, i64 k);

// Two-qubit "reduced" Bell operator
//   beta_c*1 + (n/2)[alpha(M0x1 + 1xM0) + beta(M1x1 + 1xM1)]
//   + (n(n-1)/2)[gamma M0xM0 + epsilon M1xM1 + delta(M0xM1 + M1xM0)],
// satisfying Tr(rho_n^k Btilde) = <D_n^k|B|D_n^k>.
Eigen::Matrix4d reduced_bell_operator(const BellInequality& ineq,
                                      MeasurementSettings settings);

struct PairwiseCorrelators {
  double czz = 0.0;  // <sigma_z^(1) sigma_z^(2)>
  double czx = 0.0;  // <sigma_z^(1) sigma_x^(2)>
  bool in_range = true;  // false when a converted value exceeds [-1, 1]
};

// Collective moments -> symmetrized two-body correlators:
//   czz = (4<S_z^2> - n) / (n(n-1)),
//   czx = 2<{S_z,S_x}> / (n(n-1)).
// The anticommutator factor 2 follows from Sum_{i!=j} sz_i sx_j =
// 2(SzSx+SxSz) (z and x orthogonal) and is validated in the tests by a
// round-trip against explicit two-qubit reductions.
PairwiseCorrelators collective_to_pairwise(double sz2_mean,
                                           double anticomm_zx_mean, i64 n);

// Collective matrices on the symmetric subspace (dimension n+1), Dicke
// convention S_z|k> = (n/2-k)|k>. Building blocks for tests and `reduce`.
Eigen::MatrixXd collective_sz(i64 n);
Eigen::MatrixXd collective_sx(i64 n);

}  // namespace symbell
