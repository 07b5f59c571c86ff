// Benchmarks the OpenMP kernels against their serial reference
// implementations and verifies that both produce identical results.

#include <chrono>
#include <cstdio>
#include <functional>

#include "symbell/bounds.hpp"
#include "symbell/families.hpp"
#include "symbell/polytope.hpp"
#include "symbell/quantum.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

double seconds(const std::function<void()>& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP disabled (serial build)\n");
#endif

  // Kernel 1: exact classical bound scan (2(n^2+1) boundary points).
  {
    const symbell::i64 n = 6000;
    symbell::BoundResult par, ser;
    const double tp =
        seconds([&] { par = symbell::classical_bound_exact(-2, 0, 1, -1, 1, n); });
    const double ts = seconds(
        [&] { ser = symbell::classical_bound_exact_serial(-2, 0, 1, -1, 1, n); });
    const bool same = par.beta_c2 == ser.beta_c2 && par.minimizers == ser.minimizers;
    std::printf("bound scan      n=%lld: parallel %.3fs, serial %.3fs, "
                "speedup %.2fx, identical=%s\n",
                static_cast<long long>(n), tp, ts, ts / tp, same ? "yes" : "no");
  }

  // Kernel 2: theta optimization (1024-point grid of eigensolves).
  {
    const symbell::BellInequality q = symbell::dicke_build(80);
    symbell::ThetaOptimum par, ser;
    const double tp = seconds([&] { par = symbell::optimize_theta(q); });
    const double ts = seconds([&] { ser = symbell::optimize_theta_serial(q); });
    const bool same =
        par.theta_star == ser.theta_star && par.lambda_min == ser.lambda_min;
    std::printf("theta sweep     n=80:   parallel %.3fs, serial %.3fs, "
                "speedup %.2fx, identical=%s\n",
                tp, ts, ts / tp, same ? "yes" : "no");
  }

  // Kernel 3: exact facet enumeration (double description pair loop).
  {
    const symbell::i64 n = 8;
    symbell::FacetList par, ser;
    const double tp = seconds([&] { par = symbell::facets(n); });
    const double ts = seconds([&] { ser = symbell::facets_serial(n); });
    const bool same = par.facets == ser.facets;
    std::printf("facet hull      n=%lld:    parallel %.3fs, serial %.3fs, "
                "speedup %.2fx, identical=%s (%zu facets)\n",
                static_cast<long long>(n), tp, ts, ts / tp, same ? "yes" : "no",
                par.facets.size());
  }
  return 0;
}
