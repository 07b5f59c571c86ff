#include "symbell/polytope.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "symbell/boundary.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace symbell {
namespace {

// ---------------------------------------------------------------------------
// Exact facet enumeration via the double description method on the dual cone
//   C* = { y in R^6 : y . (1, v) >= 0 for every vertex v }.
// Extreme rays of C* are exactly the facet normals (beta_c, a0..a4) of the
// polytope, homogenised as  beta_c + a.s >= 0.
// ---------------------------------------------------------------------------

using Row = std::array<i64, 6>;  // (1, s0, s1, s00, s01, s11)

struct Ray {
  std::array<mpz_class, 6> v;
  std::vector<std::uint64_t> zero;  // tight-constraint bitset over all rows
};

// Fraction-free Gaussian elimination (Bareiss). Entries here are bounded by
// minors of 6x6 matrices with entries O(n^2), far inside the i128 range.
int bareiss_rank(std::vector<std::array<i128, 6>> a) {
  const int rows = static_cast<int>(a.size());
  int rank = 0;
  i128 prev = 1;
  for (int col = 0; col < 6 && rank < rows; ++col) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (a[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[rank], a[piv]);
    for (int r = rank + 1; r < rows; ++r) {
      for (int c = col + 1; c < 6; ++c)
        a[r][c] = (a[rank][col] * a[r][c] - a[r][col] * a[rank][c]) / prev;
      a[r][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

i128 bareiss_det(std::array<std::array<i128, 6>, 6> a, int dim) {
  i128 prev = 1;
  int sign = 1;
  for (int col = 0; col < dim; ++col) {
    int piv = -1;
    for (int r = col; r < dim; ++r)
      if (a[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != col) {
      std::swap(a[col], a[piv]);
      sign = -sign;
    }
    for (int r = col + 1; r < dim; ++r) {
      for (int c = col + 1; c < dim; ++c)
        a[r][c] = (a[col][col] * a[r][c] - a[r][col] * a[col][c]) / prev;
      a[r][col] = 0;
    }
    prev = a[col][col];
  }
  return sign > 0 ? prev : -prev;
}

mpz_class mpz_from_i128(i128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : v;
  mpz_class hi(static_cast<unsigned long>(u >> 64));
  mpz_class out = (hi << 64) + static_cast<unsigned long>(u & ~0ULL);
  return neg ? mpz_class(-out) : out;
}

void set_bit(std::vector<std::uint64_t>& z, int i) {
  z[static_cast<std::size_t>(i) >> 6] |= 1ULL << (i & 63);
}

bool subset_of(const std::vector<std::uint64_t>& w,
               const std::vector<std::uint64_t>& z) {
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] & ~z[i]) return false;
  return true;
}

mpz_class dot(const Row& row, const Ray& r) {
  mpz_class acc = r.v[0] * static_cast<long>(row[0]);
  for (int k = 1; k < 6; ++k) acc += r.v[k] * static_cast<long>(row[k]);
  return acc;
}

void reduce_content(Ray& r) {
  mpz_class g = 0;
  for (const auto& c : r.v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g == 0) throw internal_error("double description produced a zero ray");
  if (g > 1)
    for (auto& c : r.v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

BellInequality ray_to_bell(const Ray& r, i64 n) {
  std::array<i64, 6> b{};
  const int map[6] = {1, 2, 3, 4, 5, 0};  // (a0,a1,a2,a3,a4,y0)
  for (int k = 0; k < 6; ++k) {
    const mpz_class& c = r.v[map[k]];
    if (!c.fits_slong_p())
      throw internal_error("facet coefficient exceeds the 64-bit range");
    b[k] = c.get_si();
  }
  b[2] *= 2;  // gamma and epsilon enter the Bell form halved
  b[4] *= 2;
  i64 g = 0;
  for (i64 c : b) g = std::gcd(g, c < 0 ? -c : c);
  if (g == 0) throw internal_error("facet with all-zero coefficients");
  for (i64& c : b) c /= g;
  return BellInequality{n, b[0], b[1], b[2], b[3], b[4], b[5]};
}

FacetList facets_impl(i64 n, bool parallel) {
  if (n < 2)
    throw precondition_error("facet enumeration requires n >= 2 (the polytope "
                             "is not full-dimensional below that)");
  const std::vector<SymmetricVector> verts = vertices(n);
  const int m = static_cast<int>(verts.size());
  const std::size_t words = static_cast<std::size_t>(m + 63) / 64;

  std::vector<Row> rows(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    const SymmetricVector& v = verts[static_cast<std::size_t>(i)];
    rows[static_cast<std::size_t>(i)] = {1, v.s0, v.s1, v.s00, v.s01, v.s11};
  }

  // Randomised (but seeded, hence reproducible) insertion order keeps the
  // intermediate ray counts near the running facet count.
  std::vector<int> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  std::mt19937 rng(12345u);
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    const std::size_t j = i + rng() % (order.size() - i);
    std::swap(order[i], order[j]);
  }

  // Greedily pick 6 linearly independent rows as the simplicial seed.
  std::vector<int> seed;
  std::vector<std::array<i128, 6>> picked;
  for (int idx : order) {
    std::array<i128, 6> as128{};
    for (int k = 0; k < 6; ++k) as128[k] = rows[static_cast<std::size_t>(idx)][k];
    picked.push_back(as128);
    if (bareiss_rank(picked) == static_cast<int>(picked.size())) {
      seed.push_back(idx);
      if (seed.size() == 6) break;
    } else {
      picked.pop_back();
    }
  }
  if (seed.size() != 6)
    throw internal_error("vertex set spans only " +
                         std::to_string(static_cast<int>(seed.size()) - 1) +
                         " affine dimensions, expected 5");

  // Rays of the seed cone {B y >= 0}: signed adjugate columns of B, since
  // B adj(B) = det(B) I.
  std::array<std::array<i128, 6>, 6> B{};
  for (int i = 0; i < 6; ++i)
    for (int k = 0; k < 6; ++k)
      B[i][k] = rows[static_cast<std::size_t>(seed[static_cast<std::size_t>(i)])][k];
  const i128 det = bareiss_det(B, 6);
  const int dsign = det > 0 ? 1 : -1;

  std::vector<Ray> rays(6);
  for (int j = 0; j < 6; ++j) {
    Ray& r = rays[static_cast<std::size_t>(j)];
    r.zero.assign(words, 0);
    for (int i = 0; i < 6; ++i) {
      std::array<std::array<i128, 6>, 6> minor{};
      for (int rr = 0, mr = 0; rr < 6; ++rr) {
        if (rr == j) continue;
        for (int cc = 0, mc = 0; cc < 6; ++cc) {
          if (cc == i) continue;
          minor[static_cast<std::size_t>(mr)][static_cast<std::size_t>(mc)] =
              B[static_cast<std::size_t>(rr)][static_cast<std::size_t>(cc)];
          ++mc;
        }
        ++mr;
      }
      const i128 cof = ((i + j) % 2 ? -1 : 1) * bareiss_det(minor, 5);
      r.v[static_cast<std::size_t>(i)] = mpz_from_i128(dsign * cof);
    }
    reduce_content(r);
    for (int i = 0; i < 6; ++i) {
      const mpz_class s = dot(rows[static_cast<std::size_t>(seed[static_cast<std::size_t>(i)])], r);
      if (i == j ? s <= 0 : s != 0)
        throw internal_error("seed cone rays fail the adjugate identity");
      if (i != j) set_bit(r.zero, seed[static_cast<std::size_t>(i)]);
    }
  }

  std::vector<bool> is_seed(static_cast<std::size_t>(m), false);
  for (int idx : seed) is_seed[static_cast<std::size_t>(idx)] = true;

  std::vector<mpz_class> sval;
  std::vector<signed char> sg;
  std::vector<std::vector<int>> inc(static_cast<std::size_t>(m));

  for (int ci : order) {
    if (is_seed[static_cast<std::size_t>(ci)]) continue;
    const Row& row = rows[static_cast<std::size_t>(ci)];
    const std::size_t nr = rays.size();
    sval.assign(nr, 0);
    sg.assign(nr, 0);
    bool any_minus = false;
    for (std::size_t r = 0; r < nr; ++r) {
      sval[r] = dot(row, rays[r]);
      const int s = sgn(sval[r]);
      sg[r] = static_cast<signed char>(s);
      if (s < 0) any_minus = true;
    }
    if (!any_minus) {
      for (std::size_t r = 0; r < nr; ++r)
        if (sg[r] == 0) set_bit(rays[r].zero, ci);
      continue;
    }

    // Incidence lists over the current rays, used both to propose candidate
    // partners and to run the combinatorial adjacency test.
    for (auto& lst : inc) lst.clear();
    for (std::size_t r = 0; r < nr; ++r) {
      const auto& z = rays[r].zero;
      for (std::size_t w = 0; w < words; ++w) {
        std::uint64_t bits = z[w];
        while (bits) {
          const int j = static_cast<int>(w * 64) + std::countr_zero(bits);
          bits &= bits - 1;
          inc[static_cast<std::size_t>(j)].push_back(static_cast<int>(r));
        }
      }
    }

    std::vector<int> minus_list;
    for (std::size_t r = 0; r < nr; ++r)
      if (sg[r] < 0) minus_list.push_back(static_cast<int>(r));

    std::vector<std::vector<Ray>> born(minus_list.size());

#ifdef _OPENMP
#pragma omp parallel if (parallel)
#endif
    {
      std::vector<int> stamp(nr, -1);
      std::vector<int> cand;
      std::vector<std::uint64_t> common(words);
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 1)
#endif
      for (long long mil = 0; mil < static_cast<long long>(minus_list.size()); ++mil) {
        const std::size_t mi = static_cast<std::size_t>(mil);
        const int mr = minus_list[mi];
        const auto& zm = rays[static_cast<std::size_t>(mr)].zero;
        cand.clear();
        for (std::size_t w = 0; w < words; ++w) {
          std::uint64_t bits = zm[w];
          while (bits) {
            const int j = static_cast<int>(w * 64) + std::countr_zero(bits);
            bits &= bits - 1;
            for (int p : inc[static_cast<std::size_t>(j)])
              if (sg[static_cast<std::size_t>(p)] > 0 &&
                  stamp[static_cast<std::size_t>(p)] != static_cast<int>(mi)) {
                stamp[static_cast<std::size_t>(p)] = static_cast<int>(mi);
                cand.push_back(p);
              }
          }
        }
        std::sort(cand.begin(), cand.end());
        for (int p : cand) {
          const auto& zp = rays[static_cast<std::size_t>(p)].zero;
          int pc = 0;
          for (std::size_t w = 0; w < words; ++w) {
            common[w] = zp[w] & zm[w];
            pc += std::popcount(common[w]);
          }
          // An adjacent pair spans a two-face, whose tight set has rank 4.
          if (pc < 4) continue;
          int best = -1, best_sz = INT32_MAX;
          for (std::size_t w = 0; w < words; ++w) {
            std::uint64_t bits = common[w];
            while (bits) {
              const int j = static_cast<int>(w * 64) + std::countr_zero(bits);
              bits &= bits - 1;
              const int sz = static_cast<int>(inc[static_cast<std::size_t>(j)].size());
              if (sz < best_sz) {
                best_sz = sz;
                best = j;
              }
            }
          }
          bool adjacent = true;
          for (int other : inc[static_cast<std::size_t>(best)]) {
            if (other == p || other == mr) continue;
            if (subset_of(common, rays[static_cast<std::size_t>(other)].zero)) {
              adjacent = false;
              break;
            }
          }
          if (!adjacent) continue;
          Ray nr_ray;
          nr_ray.zero = common;
          set_bit(nr_ray.zero, ci);
          for (int k = 0; k < 6; ++k)
            nr_ray.v[static_cast<std::size_t>(k)] =
                sval[static_cast<std::size_t>(p)] *
                    rays[static_cast<std::size_t>(mr)].v[static_cast<std::size_t>(k)] -
                sval[static_cast<std::size_t>(mr)] *
                    rays[static_cast<std::size_t>(p)].v[static_cast<std::size_t>(k)];
          reduce_content(nr_ray);
          born[mi].push_back(std::move(nr_ray));
        }
      }
    }

    std::vector<Ray> next;
    next.reserve(nr + 64);
    for (std::size_t r = 0; r < nr; ++r) {
      if (sg[r] < 0) continue;
      if (sg[r] == 0) set_bit(rays[r].zero, ci);
      next.push_back(std::move(rays[r]));
    }
    for (auto& lst : born)
      for (auto& r : lst) next.push_back(std::move(r));
    rays = std::move(next);
  }

  FacetList out;
  out.n = n;
  out.vertex_count = m;
  out.facets.reserve(rays.size());
  for (const Ray& r : rays) {
    int tight = 0;
    for (std::uint64_t w : r.zero) tight += std::popcount(w);
    if (tight < 5)
      throw internal_error("extreme ray supported by fewer than 5 vertices");
    out.facets.push_back(ray_to_bell(r, n));
  }
  std::sort(out.facets.begin(), out.facets.end());
  for (std::size_t i = 1; i < out.facets.size(); ++i)
    if (out.facets[i] == out.facets[i - 1])
      throw internal_error("duplicate facet emitted by the double description");
  return out;
}

}  // namespace

FacetList facets(i64 n) { return facets_impl(n, true); }
FacetList facets_serial(i64 n) { return facets_impl(n, false); }

}  // namespace symbell
