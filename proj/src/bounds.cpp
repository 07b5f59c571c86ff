#include "symbell/bounds.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "symbell/boundary.hpp"

namespace symbell {
namespace {

// The boundary splits into four faces (first vanishing coordinate); each is
// parametrized by an outer index u plus an inner loop, giving OpenMP a flat
// iteration space. Face layouts mirror for_each_boundary_count exactly.
struct FaceSlice {
  int face;
  i64 u;
};

std::vector<FaceSlice> face_slices(i64 n) {
  std::vector<FaceSlice> slices;
  slices.reserve(static_cast<std::size_t>(4 * n + 4));
  for (i64 b = 0; b <= n; ++b) slices.push_back({0, b});
  for (i64 a = 1; a <= n; ++a) slices.push_back({1, a});
  for (i64 a = 1; a <= n; ++a) slices.push_back({2, a});
  for (i64 a = 1; a <= n; ++a) slices.push_back({3, a});
  return slices;
}

template <typename F>
void for_each_in_slice(i64 n, FaceSlice s, F&& f) {
  switch (s.face) {
    case 0:
      for (i64 c = 0; s.u + c <= n; ++c) f(0, s.u, c, n - s.u - c);
      break;
    case 1:
      for (i64 c = 0; s.u + c <= n; ++c) f(s.u, 0, c, n - s.u - c);
      break;
    case 2:
      for (i64 b = 1; s.u + b <= n; ++b) f(s.u, b, 0, n - s.u - b);
      break;
    default:
      for (i64 b = 1; s.u + b + 1 <= n; ++b) f(s.u, b, n - s.u - b, 0);
      break;
  }
}

// The scans track 2I (always integral) in accumulator type T.
template <typename T>
struct SliceBest {
  T min_twice = 0;
  std::vector<StrategyCounts> argmin;
};

template <typename T>
void scan_slice(i64 alpha, i64 beta, i64 gamma, i64 delta, i64 epsilon, i64 n,
                FaceSlice s, SliceBest<T>& best) {
  for_each_in_slice(n, s, [&](i64 a, i64 b, i64 c, i64 d) {
    const T s0 = a + b - c - d;
    const T s1 = a - b + c - d;
    const T z = a - b - c + d;
    const T twice = 2 * (T(alpha) * s0 + T(beta) * s1 + T(delta) * (s0 * s1 - z)) +
                    T(gamma) * (s0 * s0 - n) + T(epsilon) * (s1 * s1 - n);
    if (best.argmin.empty() || twice < best.min_twice) {
      best.min_twice = twice;
      best.argmin.assign(1, StrategyCounts{a, b, c, d, n});
    } else if (twice == best.min_twice) {
      best.argmin.push_back(StrategyCounts{a, b, c, d, n});
    }
  });
}

template <typename T>
BoundResult scan(i64 alpha, i64 beta, i64 gamma, i64 delta, i64 epsilon, i64 n,
                 bool parallel) {
  const std::vector<FaceSlice> slices = face_slices(n);
  std::vector<SliceBest<T>> partial;

#ifdef _OPENMP
  if (parallel) {
    partial.resize(omp_get_max_threads());
#pragma omp parallel
    {
      SliceBest<T>& best = partial[omp_get_thread_num()];
#pragma omp for schedule(static)
      for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(slices.size()); ++i)
        scan_slice<T>(alpha, beta, gamma, delta, epsilon, n, slices[i], best);
    }
  } else
#endif
  {
    (void)parallel;
    partial.resize(1);
    for (const FaceSlice& s : slices)
      scan_slice<T>(alpha, beta, gamma, delta, epsilon, n, s, partial[0]);
  }

  const SliceBest<T>* first = nullptr;
  for (const auto& p : partial)
    if (!p.argmin.empty() && (!first || p.min_twice < first->min_twice)) first = &p;
  if (!first) throw internal_error("empty boundary scan");

  BoundResult out;
  const i128 beta_c2 = -i128(first->min_twice);
  if (beta_c2 > INT64_MAX || beta_c2 < INT64_MIN)
    throw precondition_error("classical bound exceeds the supported 64-bit range");
  out.beta_c2 = static_cast<i64>(beta_c2);
  for (const auto& p : partial)
    if (!p.argmin.empty() && p.min_twice == first->min_twice)
      out.minimizers.insert(out.minimizers.end(), p.argmin.begin(), p.argmin.end());
  std::sort(out.minimizers.begin(), out.minimizers.end());
  return out;
}

// Conservative magnitude bound on 2I over the boundary, used to pick the
// accumulator width.
long double scan_magnitude_bound(i64 alpha, i64 beta, i64 gamma, i64 delta,
                                 i64 epsilon, i64 n) {
  const long double N = static_cast<long double>(n);
  const long double A = std::llabs(alpha), B = std::llabs(beta), G = std::llabs(gamma),
                    D = std::llabs(delta), E = std::llabs(epsilon);
  return 2 * (A + B) * N + (G + E) * (N * N + N) + 2 * D * (N * N + N) + 4;
}

BoundResult bound_impl(i64 alpha, i64 beta, i64 gamma, i64 delta, i64 epsilon,
                       i64 n, bool parallel) {
  if (n < 2) throw precondition_error("classical bound requires n >= 2");
  const long double bound = scan_magnitude_bound(alpha, beta, gamma, delta, epsilon, n);
  if (bound < 4.0e18L)  // comfortably inside int64
    return scan<i64>(alpha, beta, gamma, delta, epsilon, n, parallel);
  if (bound < 1.5e38L)
    return scan<i128>(alpha, beta, gamma, delta, epsilon, n, parallel);
  throw precondition_error(
      "coefficient magnitudes exceed the exact 128-bit scan range");
}

// Brute-force oracle: minimize 2I over every strategy assignment, with the
// two-body sums accumulated pairwise.
HalfInt bruteforce_impl(i64 alpha, i64 beta, i64 gamma, i64 delta, i64 epsilon,
                        i64 n, bool parallel) {
  if (n < 2) throw precondition_error("brute-force bound requires n >= 2");
  if (n > 14)
    throw precondition_error("brute-force bound limited to n <= 14 (cost 4^n); got n=" +
                             std::to_string(n));
  const i64 total = i64(1) << (2 * n);

  auto eval_assignment = [&](i64 code) -> i128 {
    std::array<int, 14> x{}, y{};
    for (i64 i = 0; i < n; ++i) {
      const int bits = static_cast<int>((code >> (2 * i)) & 3);
      x[i] = (bits & 1) ? -1 : 1;
      y[i] = (bits & 2) ? -1 : 1;
    }
    i64 s0 = 0, s1 = 0;
    for (i64 i = 0; i < n; ++i) {
      s0 += x[i];
      s1 += y[i];
    }
    i64 t00 = 0, t11 = 0, s01 = 0;  // t's sum over i<j; s01 over ordered pairs
    for (i64 i = 0; i < n; ++i)
      for (i64 j = i + 1; j < n; ++j) {
        t00 += x[i] * x[j];
        t11 += y[i] * y[j];
        s01 += x[i] * y[j] + x[j] * y[i];
      }
    return 2 * (i128(alpha) * s0 + i128(beta) * s1 + i128(delta) * s01) +
           i128(gamma) * 2 * t00 + i128(epsilon) * 2 * t11;
  };

  bool have = false;
  i128 best = 0;
#ifdef _OPENMP
  if (parallel) {
#pragma omp parallel
    {
      bool lhave = false;
      i128 lbest = 0;
#pragma omp for schedule(static)
      for (i64 code = 0; code < total; ++code) {
        const i128 v = eval_assignment(code);
        if (!lhave || v < lbest) {
          lbest = v;
          lhave = true;
        }
      }
#pragma omp critical
      {
        if (lhave && (!have || lbest < best)) {
          best = lbest;
          have = true;
        }
      }
    }
  } else
#endif
  {
    (void)parallel;
    for (i64 code = 0; code < total; ++code) {
      const i128 v = eval_assignment(code);
      if (!have || v < best) {
        best = v;
        have = true;
      }
    }
  }

  const i128 beta_c2 = -best;
  if (beta_c2 > INT64_MAX || beta_c2 < INT64_MIN)
    throw precondition_error("brute-force bound exceeds the 64-bit range");
  return HalfInt{static_cast<i64>(beta_c2)};
}

}  // namespace

BoundResult classical_bound_exact(i64 alpha, i64 beta, i64 gamma, i64 delta,
                                  i64 epsilon, i64 n) {
  return bound_impl(alpha, beta, gamma, delta, epsilon, n, true);
}

BoundResult classical_bound_exact_serial(i64 alpha, i64 beta, i64 gamma,
                                         i64 delta, i64 epsilon, i64 n) {
  return bound_impl(alpha, beta, gamma, delta, epsilon, n, false);
}

HalfInt classical_bound_bruteforce(i64 alpha, i64 beta, i64 gamma, i64 delta,
                                   i64 epsilon, i64 n) {
  return bruteforce_impl(alpha, beta, gamma, delta, epsilon, n, true);
}

HalfInt classical_bound_bruteforce_serial(i64 alpha, i64 beta, i64 gamma,
                                          i64 delta, i64 epsilon, i64 n) {
  return bruteforce_impl(alpha, beta, gamma, delta, epsilon, n, false);
}

}  // namespace symbell
