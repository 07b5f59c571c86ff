#include "symbell/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "symbell/families.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace symbell {
namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

void check_theta(double theta) {
  if (!(theta >= -1e-12 && theta <= kPi + 1e-12))
    throw precondition_error("theta must lie in [0, pi], got " + std::to_string(theta));
}

double dicke_dz(i64 n, i64 k) { return 0.5 * static_cast<double>(n) - static_cast<double>(k); }

// <k+1| S_x |k>
double dicke_ox(i64 n, i64 k) {
  if (k < 0 || k >= n) return 0.0;
  return 0.5 * std::sqrt(static_cast<double>((k + 1) * (n - k)));
}

// Crude upper bound on the operator norm, used to scale tolerances.
double operator_scale(const BellInequality& q) {
  const double n = static_cast<double>(q.n);
  return std::abs(static_cast<double>(q.alpha)) * n +
         std::abs(static_cast<double>(q.beta)) * n +
         (std::abs(static_cast<double>(q.gamma)) +
          2.0 * std::abs(static_cast<double>(q.delta)) +
          std::abs(static_cast<double>(q.epsilon))) *
             n * n +
         std::abs(static_cast<double>(q.beta_c)) + 1.0;
}

// Shared grid + golden-section driver. f must be callable on [0, pi].
template <typename F>
ThetaOptimum minimize_over_theta(const BellInequality& ineq, F&& f, bool parallel) {
  constexpr int kGrid = 1024;
  std::vector<double> vals(kGrid);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
  for (int i = 0; i < kGrid; ++i)
    vals[static_cast<std::size_t>(i)] = f(kPi * i / (kGrid - 1));
  int best_i = 0;
  for (int i = 1; i < kGrid; ++i)
    if (vals[static_cast<std::size_t>(i)] < vals[static_cast<std::size_t>(best_i)])
      best_i = i;

  double best_theta = kPi * best_i / (kGrid - 1);
  double best_val = vals[static_cast<std::size_t>(best_i)];
  auto probe = [&](double t) {
    const double v = f(t);
    if (v < best_val || (v == best_val && t < best_theta)) {
      best_val = v;
      best_theta = t;
    }
    return v;
  };

  const double h = kPi / (kGrid - 1);
  double a = std::max(0.0, best_theta - h);
  double b = std::min(kPi, best_theta + h);
  constexpr double kGr = 0.6180339887498949;  // (sqrt(5)-1)/2
  double c = b - kGr * (b - a), d = a + kGr * (b - a);
  double fc = probe(c), fd = probe(d);
  while (b - a > 1e-7) {
    if (fc <= fd) {  // ties move toward smaller theta
      b = d;
      d = c;
      fd = fc;
      c = b - kGr * (b - a);
      fc = probe(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kGr * (b - a);
      fd = probe(d);
    }
  }

  ThetaOptimum out;
  out.theta_star = best_theta;
  out.lambda_min = best_val;
  out.effective_violation =
      ineq.beta_c != 0 ? best_val / static_cast<double>(ineq.beta_c)
                       : std::numeric_limits<double>::quiet_NaN();
  out.violation = best_val < 0.0;
  return out;
}

}  // namespace

Eigen::MatrixXd SymmetricOperator::dense() const {
  const i64 d = dim();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
  for (i64 k = 0; k <= n; ++k) m(k, k) = diag[static_cast<std::size_t>(k)];
  for (i64 k = 0; k + 1 <= n; ++k)
    m(k, k + 1) = m(k + 1, k) = off1[static_cast<std::size_t>(k)];
  for (i64 k = 0; k + 2 <= n; ++k)
    m(k, k + 2) = m(k + 2, k) = off2[static_cast<std::size_t>(k)];
  return m;
}

SymmetricOperator bell_operator_sym(const BellInequality& ineq,
                                    MeasurementSettings settings) {
  if (ineq.n < 2) throw precondition_error("bell_operator_sym requires n >= 2");
  check_theta(settings.theta);
  const i64 n = ineq.n;
  const double c = std::cos(settings.theta), s = std::sin(settings.theta);
  const double al = static_cast<double>(ineq.alpha), be = static_cast<double>(ineq.beta),
               ga = static_cast<double>(ineq.gamma), de = static_cast<double>(ineq.delta),
               ep = static_cast<double>(ineq.epsilon), bc = static_cast<double>(ineq.beta_c);
  const double shift = -0.5 * static_cast<double>(n) * (ga + ep) -
                       de * static_cast<double>(n) * c + bc;

  SymmetricOperator op;
  op.n = n;
  op.diag.resize(static_cast<std::size_t>(n + 1));
  op.off1.resize(static_cast<std::size_t>(n));
  op.off2.resize(static_cast<std::size_t>(n - 1));
  for (i64 k = 0; k <= n; ++k) {
    const double dz = dicke_dz(n, k);
    const double ox2 = dicke_ox(n, k - 1) * dicke_ox(n, k - 1) +
                       dicke_ox(n, k) * dicke_ox(n, k);
    op.diag[static_cast<std::size_t>(k)] =
        2.0 * al * dz + 2.0 * be * c * dz + 2.0 * ga * dz * dz +
        2.0 * ep * (c * c * dz * dz + s * s * ox2) + 4.0 * de * c * dz * dz + shift;
  }
  for (i64 k = 0; k < n; ++k) {
    const double ox = dicke_ox(n, k);
    op.off1[static_cast<std::size_t>(k)] =
        2.0 * be * s * ox +
        2.0 * (de + ep * c) * s * ox * (dicke_dz(n, k) + dicke_dz(n, k + 1));
  }
  for (i64 k = 0; k + 1 < n; ++k)
    op.off2[static_cast<std::size_t>(k)] =
        2.0 * ep * s * s * dicke_ox(n, k) * dicke_ox(n, k + 1);
  return op;
}

Eigen::MatrixXd bell_operator_full(const BellInequality& ineq,
                                   MeasurementSettings settings) {
  if (ineq.n < 2 || ineq.n > 10)
    throw precondition_error("bell_operator_full supports 2 <= n <= 10");
  check_theta(settings.theta);
  const int n = static_cast<int>(ineq.n);
  const long dim = 1L << n;
  const double c = std::cos(settings.theta), s = std::sin(settings.theta);
  // Site matrices, bit value 1 <-> sigma_z = -1.
  const double M0[2][2] = {{1.0, 0.0}, {0.0, -1.0}};
  const double M1[2][2] = {{c, s}, {s, -c}};

  Eigen::MatrixXd B = Eigen::MatrixXd::Identity(dim, dim) *
                      static_cast<double>(ineq.beta_c);
  const double al = static_cast<double>(ineq.alpha), be = static_cast<double>(ineq.beta),
               ga = static_cast<double>(ineq.gamma), de = static_cast<double>(ineq.delta),
               ep = static_cast<double>(ineq.epsilon);

  for (long idx = 0; idx < dim; ++idx) {
    for (int i = 0; i < n; ++i) {
      const int bi = (idx >> i) & 1;
      // single-site terms
      B(idx, idx) += al * M0[bi][bi] + be * M1[bi][bi];
      const long flip_i = idx ^ (1L << i);
      B(flip_i, idx) += be * M1[1 - bi][bi];  // M0 is diagonal
      // pair terms, i < j
      for (int j = i + 1; j < n; ++j) {
        const int bj = (idx >> j) & 1;
        const long flip_j = idx ^ (1L << j);
        const long flip_ij = flip_i ^ (1L << j);
        for (int ti = 0; ti < 2; ++ti) {
          for (int tj = 0; tj < 2; ++tj) {
            const double w = ga * M0[ti][bi] * M0[tj][bj] +
                             de * (M0[ti][bi] * M1[tj][bj] + M1[ti][bi] * M0[tj][bj]) +
                             ep * M1[ti][bi] * M1[tj][bj];
            if (w == 0.0) continue;
            long row = idx;
            if (ti != bi) row = (tj != bj) ? flip_ij : flip_i;
            else if (tj != bj) row = flip_j;
            B(row, idx) += w;
          }
        }
      }
    }
  }
  return B;
}

ThetaOptimum optimize_theta(const BellInequality& ineq) {
  return minimize_over_theta(
      ineq, [&](double t) { return min_eigenvalue(bell_operator_sym(ineq, {t})); },
      true);
}

ThetaOptimum optimize_theta_serial(const BellInequality& ineq) {
  return minimize_over_theta(
      ineq, [&](double t) { return min_eigenvalue(bell_operator_sym(ineq, {t})); },
      false);
}

ThetaOptimum optimize_theta_dicke_expectation(const BellInequality& ineq) {
  const i64 k = (ineq.n + 1) / 2;
  return minimize_over_theta(
      ineq, [&](double t) { return dicke_expectation(ineq, {t}, k); }, true);
}

double dicke_expectation(const BellInequality& ineq, MeasurementSettings settings,
                         i64 k) {
  if (k < 0 || k > ineq.n)
    throw precondition_error("Dicke index k must satisfy 0 <= k <= n");
  return bell_operator_sym(ineq, settings).diag[static_cast<std::size_t>(k)];
}

DickeViolation dicke_violation_analytic(i64 n) {
  const DickeFamily fam = dicke_family(n);  // validates n and the bound
  const double half_up = std::ceil(0.5 * static_cast<double>(n));    // ceil(n/2)
  const double half_dn = std::floor(0.5 * static_cast<double>(n));   // floor(n/2)

  DickeViolation out;
  out.theta_min = std::acos(half_up / (half_up + 1.0));
  out.value = -half_dn / (half_up + 1.0);
  out.effective = out.value / static_cast<double>(fam.beta_c_family);

  // Cross-check the closed form against the operator construction.
  const i64 k = (n + 1) / 2;
  const double tol = 1e-9 * operator_scale(fam.ineq);
  for (int i = 0; i <= 32; ++i) {
    const double t = kPi * i / 32;
    const double s2 = std::sin(0.5 * t) * std::sin(0.5 * t);
    const double closed =
        static_cast<double>(fam.scale) * 4.0 * half_dn * s2 * ((half_up + 1.0) * s2 - 1.0);
    const double direct = dicke_expectation(fam.ineq, {t}, k);
    if (std::abs(closed - direct) > tol)
      throw internal_error("Dicke closed-form expectation disagrees with the "
                           "operator at theta=" + std::to_string(t));
  }
  const double at_min = dicke_expectation(fam.ineq, {out.theta_min}, k);
  if (std::abs(at_min - static_cast<double>(fam.scale) * out.value) > tol)
    throw internal_error("Dicke closed-form minimum disagrees with the operator");
  return out;
}

Eigen::Matrix4d dicke_reduced_two_qubit(i64 n) {
  return dicke_reduced_two_qubit(n, (n + 1) / 2);
}

Eigen::Matrix4d dicke_reduced_two_qubit(i64 n, i64 k) {
  if (n < 2) throw precondition_error("dicke_reduced_two_qubit requires n >= 2");
  if (k < 0 || k > n)
    throw precondition_error("Dicke index k must satisfy 0 <= k <= n");
  const double norm = 1.0 / static_cast<double>(n * (n - 1));
  const double p = static_cast<double>((n - k) * (n - k - 1));
  const double q = static_cast<double>(k * (n - k));
  const double r = static_cast<double>(k * (k - 1));
  Eigen::Matrix4d rho = Eigen::Matrix4d::Zero();
  rho(0, 0) = p;
  rho(1, 1) = rho(1, 2) = rho(2, 1) = rho(2, 2) = q;
  rho(3, 3) = r;
  return norm * rho;
}

Eigen::Matrix4d reduced_bell_operator(const BellInequality& ineq,
                                      MeasurementSettings settings) {
  if (ineq.n < 2) throw precondition_error("reduced_bell_operator requires n >= 2");
  check_theta(settings.theta);
  const double c = std::cos(settings.theta), s = std::sin(settings.theta);
  Eigen::Matrix2d m0, m1, id2;
  m0 << 1, 0, 0, -1;
  m1 << c, s, s, -c;
  id2.setIdentity();
  auto kron = [](const Eigen::Matrix2d& a, const Eigen::Matrix2d& b) {
    Eigen::Matrix4d out;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    return out;
  };
  const double n = static_cast<double>(ineq.n);
  const double pair = 0.5 * n * (n - 1.0);
  Eigen::Matrix4d out = static_cast<double>(ineq.beta_c) * Eigen::Matrix4d::Identity();
  out += 0.5 * n * static_cast<double>(ineq.alpha) * (kron(m0, id2) + kron(id2, m0));
  out += 0.5 * n * static_cast<double>(ineq.beta) * (kron(m1, id2) + kron(id2, m1));
  out += pair * static_cast<double>(ineq.gamma) * kron(m0, m0);
  out += pair * static_cast<double>(ineq.epsilon) * kron(m1, m1);
  out += pair * static_cast<double>(ineq.delta) * (kron(m0, m1) + kron(m1, m0));
  return out;
}

PairwiseCorrelators collective_to_pairwise(double sz2_mean, double anticomm_zx_mean,
                                           i64 n) {
  if (n < 2) throw precondition_error("collective_to_pairwise requires n >= 2");
  PairwiseCorrelators out;
  const double pairs = static_cast<double>(n) * static_cast<double>(n - 1);
  out.czz = (4.0 * sz2_mean - static_cast<double>(n)) / pairs;
  out.czx = 2.0 * anticomm_zx_mean / pairs;
  out.in_range = std::abs(out.czz) <= 1.0 + 1e-9 && std::abs(out.czx) <= 1.0 + 1e-9;
  return out;
}

Eigen::MatrixXd collective_sz(i64 n) {
  if (n < 1) throw precondition_error("collective_sz requires n >= 1");
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n + 1, n + 1);
  for (i64 k = 0; k <= n; ++k) m(k, k) = dicke_dz(n, k);
  return m;
}

Eigen::MatrixXd collective_sx(i64 n) {
  if (n < 1) throw precondition_error("collective_sx requires n >= 1");
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n + 1, n + 1);
  for (i64 k = 0; k < n; ++k) m(k, k + 1) = m(k + 1, k) = dicke_ox(n, k);
  return m;
}

}  // namespace symbell
