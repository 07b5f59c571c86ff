#include "symbell/families.hpp"

#include <cmath>
#include <numeric>

#include "symbell/bounds.hpp"
#include "symbell/polytope.hpp"

namespace symbell {
namespace {

i64 isqrt_exact(i64 v) {
  // Returns r with r*r == v, or -1 when v is not a perfect square.
  if (v < 0) return -1;
  i64 r = static_cast<i64>(std::sqrt(static_cast<double>(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r * r == v ? r : -1;
}

// Squarefree kernel (product of primes with odd exponent). Coefficients of
// real facets are far below the 1e12 full-factorization guarantee of trial
// division by 1e6.
i64 squarefree_kernel(i64 v) {
  if (v <= 0) throw internal_error("squarefree kernel of non-positive value");
  if (v > 1'000'000'000'000LL)
    throw internal_error("facet coefficient too large to factor: " + std::to_string(v));
  i64 kernel = 1;
  for (i64 p = 2; p * p <= v; ++p) {
    if (v % p) continue;
    int e = 0;
    while (v % p == 0) {
      v /= p;
      ++e;
    }
    if (e & 1) kernel *= p;
  }
  return kernel * v;  // leftover v is 1 or a single prime
}

void check_i64(i128 v, const char* what) {
  if (v > INT64_MAX || v < INT64_MIN)
    throw precondition_error(std::string(what) + " exceeds the 64-bit coefficient range");
}

}  // namespace

std::optional<std::string> class_b_rejection(const ClassBParams& p, i64 n) {
  if (n < 2) return "requires n >= 2";
  if (p.x < 1 || p.y < 1) return "x and y must be positive integers";
  if (p.sigma != 1 && p.sigma != -1) return "sigma must be +1 or -1";
  if (p.branch != 1 && p.branch != -1) return "branch must be +1 (alpha_+) or -1 (alpha_-)";
  // mu must have parity opposite to epsilon = y^2 for odd n, and opposite to
  // gamma = x^2 for even n (squares share the parity of their root).
  if (n % 2 == 1 && (p.mu + p.y) % 2 == 0)
    return "odd n requires mu of parity opposite to epsilon = y^2";
  if (n % 2 == 0 && (p.mu + p.x) % 2 == 0)
    return "even n requires mu of parity opposite to gamma = x^2";
  // Validity of the bound follows from the parity argument alone, but
  // exactness (the formula equaling the true minimum) needs a boundary
  // point saturating the core identity: r = 0 and core = +-1. Writing the
  // three remaining counts through w (the difference of the two counts
  // summing to n - z) and z (the count weighted by y - x), saturation is
  // the Diophantine system
  //   (x+y) w + branch (y-x) z = e - (sigma mu + branch x),  e in {-1,+1},
  //   0 <= z <= n, |w| <= n - z, w == n - z (mod 2),
  // identical in shape for all four (sigma, branch) choices. Unsolvable
  // parameters make the formula strictly overestimate the exact bound:
  // x=y=3, mu=0 is off by 4 at every n (a solution needs sigma*mu == +-1
  // modulo gcd(x,y)), and x=1, y=4, mu=-6, branch=-1 is off by 4 at n=4
  // (large |mu| needs room: |w| <= n - z has no slack yet).
  const i128 t = i128(p.sigma) * p.mu + p.branch * p.x;
  for (i128 e : {i128(-1), i128(1)})
    for (i64 z = 0; z <= n; ++z) {
      const i128 m = e - t - i128(p.branch) * (p.y - p.x) * z;
      if (m % (p.x + p.y) != 0) continue;
      const i128 w = m / (p.x + p.y);
      const i128 cap = n - z;
      if ((w < 0 ? -w : w) <= cap && (w - cap) % 2 == 0) return std::nullopt;
    }
  return "the bound formula is not attained at this n: no boundary point "
         "solves (x+y)w + branch*(y-x)z = +-1 - (sigma*mu + branch*x)";
}

BellInequality class_b_build(const ClassBParams& p, i64 n) {
  if (auto why = class_b_rejection(p, n))
    throw precondition_error("inadmissible class-B parameters " + *why);

  const i64 sm = p.sigma * p.mu;
  const i128 alpha = i128(p.x) * (sm + p.branch * (p.x + p.y));
  const i128 beta = i128(p.mu) * p.y;
  const i128 gamma = i128(p.x) * p.x;
  const i128 delta = i128(p.sigma) * p.x * p.y;
  const i128 epsilon = i128(p.y) * p.y;
  const i128 sum = p.x + p.y;
  const i128 inner = sm + p.branch * p.x;
  const i128 beta_c2 = i128(n) * sum * sum + inner * inner - 1;
  if (beta_c2 % 2 != 0)
    throw internal_error("class-B bound is not an integer despite parity admissibility");
  for (i128 v : {alpha, beta, gamma, delta, epsilon, beta_c2 / 2})
    check_i64(v, "class-B coefficient");

  BellInequality q{n,
                   static_cast<i64>(alpha),
                   static_cast<i64>(beta),
                   static_cast<i64>(gamma),
                   static_cast<i64>(delta),
                   static_cast<i64>(epsilon),
                   static_cast<i64>(beta_c2 / 2)};
  q = canonicalize(q);

  const BoundResult exact =
      classical_bound_exact(q.alpha, q.beta, q.gamma, q.delta, q.epsilon, n);
  if (exact.beta_c2 != 2 * q.beta_c)
    throw internal_error("class-B analytic bound " + std::to_string(q.beta_c) +
                         " != exact bound " + exact.beta_c().str() + " for " +
                         to_string(q));
  return q;
}

i64 class_b_core_r(const ClassBParams& p, const StrategyCounts& t) {
  if (p.branch > 0) return p.sigma > 0 ? t.b : t.a;
  return p.sigma > 0 ? t.c : t.d;
}

bool class_b_core_holds(const ClassBParams& p, const StrategyCounts& t) {
  const SymmetricVector v = phi(t);
  const i128 paren =
      i128(p.x) * v.s0 + i128(p.sigma) * p.y * v.s1 + p.sigma * p.mu + p.branch * p.x;
  const i128 lhs = paren * paren + i128(8) * p.x * p.y * class_b_core_r(p, t);
  return lhs >= 1;
}

ClassifyResult classify_facets_as_class_b(const FacetList& fl) {
  ClassifyResult out;
  for (std::size_t idx = 0; idx < fl.facets.size(); ++idx) {
    const BellInequality& f = fl.facets[idx];
    if (f.gamma <= 0 || f.epsilon <= 0 || f.delta == 0) continue;
    if (i128(f.delta) * f.delta != i128(f.gamma) * f.epsilon) continue;

    // A canonical facet can only be the class member divided by lambda =
    // squarefree kernel of gamma (the beta_c equation rules out any larger
    // square multiple), so x, y, mu are forced:
    const i64 lambda = squarefree_kernel(f.gamma);
    const i64 x = isqrt_exact(lambda * f.gamma);
    const i64 y = isqrt_exact(lambda * f.epsilon);
    if (x <= 0 || y <= 0) continue;
    const int sigma = f.delta > 0 ? 1 : -1;
    if ((i128(lambda) * f.beta) % y != 0) continue;
    const i64 mu = lambda * f.beta / y;

    for (int branch : {1, -1}) {
      ClassBParams p{x, y, sigma, mu, branch, std::gcd(x, y) == 1};
      if (class_b_rejection(p, fl.n)) continue;
      const i64 sm = sigma * mu;
      if (i128(lambda) * f.alpha != i128(x) * (sm + branch * (x + y))) continue;
      const i128 inner = sm + i128(branch) * x;
      const i128 sum = x + y;
      if (i128(lambda) * 2 * f.beta_c != i128(fl.n) * sum * sum + inner * inner - 1)
        continue;
      // Confirm by rebuilding (also re-asserts the analytic bound).
      if (class_b_build(p, fl.n) != f)
        throw internal_error("class-B inversion mismatch for facet " + to_string(f));
      out.matches.push_back({idx, p});
      break;
    }
  }
  out.matched = static_cast<i64>(out.matches.size());
  return out;
}

DickeFamily dicke_family(i64 n) {
  if (n < 2) throw precondition_error("the Dicke family requires n >= 2");
  DickeFamily fam;
  if (n % 2 == 0) {
    // (alpha, beta, gamma, delta, epsilon) = (0, 0, n(n-1)/2, n/2, -1),
    // beta_c = n(n-1)(n+2)/4; all integral, gcd 1 via epsilon.
    fam.scale = 1;
    fam.beta_c_family = n * (n - 1) * (n + 2) / 4;
    fam.ineq = BellInequality{n, 0, 0, n * (n - 1) / 2, n / 2, -1, fam.beta_c_family};
  } else {
    // Raw odd-n coefficients (n(n-1)/2, (n-1)/2, n(n-1)/2, n/2, -1) carry a
    // half-integer delta; store the doubled form (gcd 1 since gcd(n-1,n)=1).
    fam.scale = 2;
    fam.beta_c_family = n * (n - 1) * (n + 3) / 4;
    fam.ineq = BellInequality{n,     n * (n - 1),          n - 1, n * (n - 1),
                              n,     -2,                   2 * fam.beta_c_family};
  }
  if (coefficient_gcd(fam.ineq) != 1)
    throw internal_error("Dicke inequality is not primitive at n=" + std::to_string(n));
  const BoundResult exact = classical_bound_exact(fam.ineq.alpha, fam.ineq.beta,
                                                  fam.ineq.gamma, fam.ineq.delta,
                                                  fam.ineq.epsilon, n);
  if (exact.beta_c2 != 2 * fam.ineq.beta_c)
    throw internal_error("Dicke analytic bound " + std::to_string(fam.ineq.beta_c) +
                         " != exact bound " + exact.beta_c().str() + " at n=" +
                         std::to_string(n));
  return fam;
}

BellInequality dicke_build(i64 n) { return dicke_family(n).ineq; }

std::vector<StrategyCounts> dicke_saturating_counts(i64 n) {
  if (n < 2) throw precondition_error("the Dicke family requires n >= 2");
  std::vector<StrategyCounts> out;
  if (n % 2 == 0) {
    const i64 h = n / 2;
    out = {make_counts(0, h, 0, h), make_counts(0, h + 1, 0, h - 1),
           make_counts(h - 1, 0, h + 1, 0), make_counts(h, 0, h, 0),
           make_counts(h, 0, 0, h)};
  } else {
    out = {make_counts(0, (n + 1) / 2, 0, (n - 1) / 2),
           make_counts(0, (n - 1) / 2, 0, (n + 1) / 2),
           make_counts((n - 1) / 2, 0, (n + 1) / 2, 0),
           make_counts((n - 3) / 2, 0, (n + 3) / 2, 0),
           make_counts((n - 1) / 2, 0, 0, (n + 1) / 2)};
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace symbell
