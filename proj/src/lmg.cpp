#include "symbell/lmg.hpp"

#include <Eigen/Eigenvalues>

#include <bit>
#include <cmath>

namespace symbell {
namespace {

void check_params(const LMGParams& p) {
  if (!(p.lambda > 0.0))
    throw precondition_error("LMG coupling lambda must be positive");
  if (!(p.h >= 0.0)) throw precondition_error("LMG field h must be non-negative");
  if (p.n < 2) throw precondition_error("LMG model requires n >= 2");
}

}  // namespace

double lmg_energy(const LMGParams& params, i64 k) {
  check_params(params);
  if (k < 0 || k > params.n)
    throw precondition_error("Dicke label k must satisfy 0 <= k <= n");
  const double n = static_cast<double>(params.n);
  const double s = 0.5 * n;
  const double m = static_cast<double>(k) - 0.5 * n;
  return -(params.lambda / n) * (2.0 * (s * (s + 1.0) - m * m) - n) -
         2.0 * params.h * m;
}

LMGGroundState lmg_ground_state(const LMGParams& params) {
  check_params(params);
  LMGGroundState out;
  out.weak_field = params.weak_field();

  double emin = lmg_energy(params, 0);
  for (i64 k = 1; k <= params.n; ++k) emin = std::min(emin, lmg_energy(params, k));
  const double tol =
      1e-12 * (std::abs(emin) + params.lambda + params.h * static_cast<double>(params.n) + 1.0);
  for (i64 k = 0; k <= params.n; ++k)
    if (lmg_energy(params, k) <= emin + tol) out.ks.push_back(k);

  out.energy = emin;
  out.degeneracy = static_cast<int>(out.ks.size());
  out.state = Eigen::VectorXd::Zero(params.n + 1);
  out.state(out.ks.front()) = 1.0;
  return out;
}

LMGFullResult lmg_ground_state_full(const LMGParams& params) {
  check_params(params);
  if (params.n > 12)
    throw precondition_error("full LMG diagonalization supports 2 <= n <= 12");
  const int n = static_cast<int>(params.n);
  const long dim = 1L << n;
  const double coup = -2.0 * params.lambda / static_cast<double>(n);

  Eigen::MatrixXd H = Eigen::MatrixXd::Zero(dim, dim);
  for (long idx = 0; idx < dim; ++idx) {
    const int ones = std::popcount(static_cast<unsigned long>(idx));
    H(idx, idx) = -params.h * static_cast<double>(n - 2 * ones);  // bit 1 <-> sz=-1
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const int bi = (idx >> i) & 1, bj = (idx >> j) & 1;
        if (bi == bj) continue;
        // (sx sx + sy sy) exchanges anti-aligned pairs with weight 2
        H(idx ^ (1L << i) ^ (1L << j), idx) += coup;
      }
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(H);
  if (solver.info() != Eigen::Success)
    throw internal_error("full LMG eigensolver failed to converge");
  const double e0 = solver.eigenvalues()(0);
  const double tol =
      1e-8 * (std::abs(e0) + params.lambda + params.h * static_cast<double>(n) + 1.0);

  LMGFullResult out;
  out.energy = e0;
  int deg = 0;
  while (deg < dim && solver.eigenvalues()(deg) <= e0 + tol) ++deg;
  out.degeneracy = deg;

  const LMGGroundState sector = lmg_ground_state(params);
  double fid = 0.0;
  for (i64 k : sector.ks) {
    const Eigen::VectorXd v = dicke_vector_full(params.n, k);
    for (int g = 0; g < deg; ++g) {
      const double ov = solver.eigenvectors().col(g).dot(v);
      fid += ov * ov;
    }
  }
  out.fidelity_with_sector_ground = fid / static_cast<double>(sector.ks.size());
  return out;
}

Eigen::VectorXd dicke_vector_full(i64 n, i64 k) {
  if (n < 1 || n > 20)
    throw precondition_error("dicke_vector_full supports 1 <= n <= 20");
  if (k < 0 || k > n)
    throw precondition_error("Dicke label k must satisfy 0 <= k <= n");
  const long dim = 1L << n;
  const int anti = static_cast<int>(n - k);  // one-bits: spins against the field
  double count = 1.0;
  for (i64 i = 1; i <= n - k; ++i)
    count *= static_cast<double>(k + i) / static_cast<double>(i);
  const double amp = 1.0 / std::sqrt(count);
  Eigen::VectorXd v = Eigen::VectorXd::Zero(dim);
  for (long idx = 0; idx < dim; ++idx)
    if (std::popcount(static_cast<unsigned long>(idx)) == anti) v(idx) = amp;
  return v;
}

}  // namespace symbell
