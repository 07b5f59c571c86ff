#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "symbell/quantum.hpp"

namespace symbell {
namespace {

void check_shape(const SymmetricOperator& op) {
  if (op.n < 1 || op.diag.size() != static_cast<std::size_t>(op.n + 1) ||
      op.off1.size() != static_cast<std::size_t>(op.n) ||
      op.off2.size() != static_cast<std::size_t>(op.n - 1))
    throw precondition_error("malformed SymmetricOperator band structure");
}

// Number of eigenvalues of the pentadiagonal matrix strictly below x, via the
// inertia of the banded LDL^T factorization (Sylvester's law).
int count_below(const SymmetricOperator& op, double x, double pivmin,
                std::vector<double>& d, std::vector<double>& l1,
                std::vector<double>& l2) {
  const std::size_t dim = op.diag.size();
  int cnt = 0;
  for (std::size_t i = 0; i < dim; ++i) {
    double u = op.diag[i] - x;
    if (i >= 1) u -= l1[i - 1] * l1[i - 1] * d[i - 1];
    if (i >= 2) u -= l2[i - 2] * l2[i - 2] * d[i - 2];
    if (std::abs(u) < pivmin) u = -pivmin;  // pessimistic zero-pivot nudge
    d[i] = u;
    if (u < 0.0) ++cnt;
    if (i + 1 < dim) {
      double b = op.off1[i];
      if (i >= 1) b -= l1[i - 1] * l2[i - 1] * d[i - 1];
      l1[i] = b / u;
    }
    if (i + 2 < dim) l2[i] = op.off2[i] / u;
  }
  return cnt;
}

}  // namespace

double min_eigenvalue_dense(const SymmetricOperator& op) {
  check_shape(op);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(op.dense(),
                                                        Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw internal_error("dense symmetric eigensolver failed to converge");
  return solver.eigenvalues()(0);
}

double min_eigenvalue_banded(const SymmetricOperator& op) {
  check_shape(op);
  const std::size_t dim = op.diag.size();

  // Gershgorin bracket.
  double lo = std::numeric_limits<double>::infinity(), hi = -lo, max_off = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    double r = 0.0;
    if (i >= 1) r += std::abs(op.off1[i - 1]);
    if (i >= 2) r += std::abs(op.off2[i - 2]);
    if (i + 1 < dim) r += std::abs(op.off1[i]);
    if (i + 2 < dim) r += std::abs(op.off2[i]);
    lo = std::min(lo, op.diag[i] - r);
    hi = std::max(hi, op.diag[i] + r);
    max_off = std::max({max_off, std::abs(op.diag[i]) + r});
  }
  const double pivmin =
      std::numeric_limits<double>::min() * std::max(1.0, max_off * max_off);
  // Scale-relative stop so tiny-magnitude operators converge to the same
  // relative accuracy as O(1) ones; the pivmin term keeps it positive for
  // the all-zero matrix.
  const double tol = 8 * std::numeric_limits<double>::epsilon() *
                         std::max(std::abs(lo), std::abs(hi)) +
                     2 * pivmin;

  std::vector<double> d(dim), l1(dim), l2(dim);
  constexpr int kBudget = 256;
  int iters = 0;
  while (hi - lo > tol) {
    if (++iters > kBudget)
      throw internal_error("banded bisection exceeded its budget of " +
                           std::to_string(kBudget) + " iterations");
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // interval at floating-point resolution
    if (count_below(op, mid, pivmin, d, l1, l2) >= 1)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

double min_eigenvalue(const SymmetricOperator& op) {
  check_shape(op);
  return op.dim() <= 512 ? min_eigenvalue_dense(op) : min_eigenvalue_banded(op);
}

}  // namespace symbell
