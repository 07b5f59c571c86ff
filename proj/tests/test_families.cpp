// The two analytic families. The oracles here rebuild the raw coefficient
// maps and the bound-proof algebra from scratch and compare against both the
// library constructors and the exact boundary scan.
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "symbell/boundary.hpp"
#include "symbell/bounds.hpp"
#include "symbell/families.hpp"
#include "symbell/polytope.hpp"
#include "symbell/types.hpp"

namespace {

using symbell::BellInequality;
using symbell::ClassBParams;
using symbell::DickeFamily;
using symbell::i128;
using symbell::i64;
using symbell::StrategyCounts;

// Raw (uncanonicalized) class-B coefficients straight from the parameter map.
BellInequality raw_class_b(const ClassBParams& p, i64 n) {
  const i64 s = p.sigma, br = p.branch;
  BellInequality q;
  q.n = n;
  q.gamma = p.x * p.x;
  q.epsilon = p.y * p.y;
  q.delta = s * p.x * p.y;
  q.beta = p.mu * p.y;
  q.alpha = p.x * (s * p.mu + br * (p.x + p.y));
  const i64 t = s * p.mu + br * p.x;
  q.beta_c = (n * (p.x + p.y) * (p.x + p.y) + t * t - 1) / 2;
  return q;
}

std::vector<ClassBParams> admissible_grid(i64 n, i64 max_xy, i64 max_mu) {
  std::vector<ClassBParams> out;
  for (i64 x = 1; x <= max_xy; ++x)
    for (i64 y = 1; y <= max_xy; ++y)
      for (i64 mu = -max_mu; mu <= max_mu; ++mu)
        for (int sigma : {-1, 1})
          for (int branch : {-1, 1}) {
            const ClassBParams p{x, y, sigma, mu, branch,
                                 std::gcd(x, y) == 1};
            if (!symbell::class_b_rejection(p, n)) out.push_back(p);
          }
  return out;
}

}  // namespace

TEST_CASE("class-B parameter admissibility") {
  // Wrong domains are rejected regardless of parity.
  CHECK(symbell::class_b_rejection({0, 1, 1, 0, 1, true}, 5).has_value());
  CHECK(symbell::class_b_rejection({1, -2, 1, 0, 1, true}, 5).has_value());
  CHECK(symbell::class_b_rejection({1, 1, 0, 0, 1, true}, 5).has_value());
  CHECK(symbell::class_b_rejection({1, 1, 1, 0, 2, true}, 5).has_value());
  CHECK(symbell::class_b_rejection({1, 1, 1, 1, 1, true}, 1).has_value());
  // Odd n needs mu+y odd; even n needs mu+x odd.
  CHECK_FALSE(symbell::class_b_rejection({1, 1, -1, 0, -1, true}, 5).has_value());
  CHECK(symbell::class_b_rejection({1, 1, -1, 1, -1, true}, 5).has_value());
  CHECK(symbell::class_b_rejection({1, 2, -1, 0, -1, true}, 5).has_value());
  CHECK_FALSE(symbell::class_b_rejection({1, 2, -1, 1, -1, true}, 5).has_value());
  CHECK_FALSE(symbell::class_b_rejection({1, 1, 1, 0, 1, true}, 6).has_value());
  CHECK(symbell::class_b_rejection({1, 1, 1, 1, 1, true}, 6).has_value());
  CHECK(symbell::class_b_rejection({2, 1, 1, 0, 1, true}, 6).has_value());
  CHECK_FALSE(symbell::class_b_rejection({2, 1, 1, 1, 1, true}, 6).has_value());
  // Builders refuse what the predicate refuses.
  CHECK_THROWS_AS(symbell::class_b_build({1, 1, -1, 1, -1, true}, 5),
                  symbell::precondition_error);
}

TEST_CASE("non-coprime x,y need mu = +-1 mod gcd for the bound to be attained") {
  // x=y=3: core = 3(S0 - S1) + sigma*mu +- 3 is sigma*mu mod 3, so mu = 0
  // keeps |core| >= 3 and the formula overshoots the true bound by 4.
  CHECK(symbell::class_b_rejection({3, 3, -1, 0, -1, false}, 4).has_value());
  CHECK_FALSE(symbell::class_b_rejection({3, 3, -1, 2, -1, false}, 5).has_value());
  CHECK_FALSE(symbell::class_b_rejection({3, 3, -1, -2, -1, false}, 4).has_value());
  for (i64 n : {4, 5}) {
    const BellInequality raw = raw_class_b({3, 3, -1, 0, -1, false}, n);
    const symbell::BoundResult res = symbell::classical_bound_exact(
        raw.alpha, raw.beta, raw.gamma, raw.delta, raw.epsilon, n);
    CHECK(res.beta_c().integer() == raw.beta_c - 4);
  }
  // Even-parity gcds are harmless: the parity rule already forces odd mu.
  CHECK_FALSE(symbell::class_b_rejection({2, 2, 1, 1, 1, false}, 6).has_value());
  CHECK_FALSE(symbell::class_b_rejection({4, 4, 1, 3, 1, false}, 6).has_value());
}

TEST_CASE("attainment also needs room: large |mu| is rejected at small n") {
  // x=1, y=4, mu=-6: the saturating point must solve (x+y)w + branch(y-x)z
  // = +-1 - (sigma*mu + branch*x) with |w| <= n-z, and for the two
  // orientations with |sigma*mu + branch*x| = 7 that first fits at n=6; at
  // n=4 the formula overshoots the exact bound by 4.
  const ClassBParams bad{1, 4, 1, -6, -1, true};
  CHECK(symbell::class_b_rejection(bad, 4).has_value());
  CHECK(symbell::class_b_rejection({1, 4, -1, -6, 1, true}, 4).has_value());
  // The sibling orientations reach +-1 inside the simplex already at n=4...
  CHECK_FALSE(symbell::class_b_rejection({1, 4, 1, -6, 1, true}, 4).has_value());
  CHECK_FALSE(symbell::class_b_rejection({1, 4, -1, -6, -1, true}, 4).has_value());
  // ...and the rejected one becomes admissible at n=6.
  CHECK_FALSE(symbell::class_b_rejection(bad, 6).has_value());
  for (i64 n : {4, 6}) {
    const BellInequality raw = raw_class_b(bad, n);
    const symbell::BoundResult res = symbell::classical_bound_exact(
        raw.alpha, raw.beta, raw.gamma, raw.delta, raw.epsilon, n);
    CHECK(res.beta_c().integer() == (n == 4 ? raw.beta_c - 4 : raw.beta_c));
  }
  CHECK_THROWS_AS(symbell::class_b_build(bad, 4), symbell::precondition_error);
  CHECK(symbell::class_b_build(bad, 6) ==
        symbell::canonicalize(raw_class_b(bad, 6)));
}

TEST_CASE("core inequality holds even for parity-only-admissible tuples") {
  // The parity rule alone makes the core term odd, so core^2 >= 1 pointwise
  // regardless of the gcd congruence (the latter only decides attainment).
  const symbell::ClassBParams p{3, 3, -1, 0, -1, false};
  symbell::for_each_boundary_count(4, [&](const StrategyCounts& t) {
    CHECK(symbell::class_b_core_holds(p, t));
  });
}

TEST_CASE("class-B build reproduces hand-expanded forms") {
  for (i64 n = 4; n <= 10; ++n) {
    // x=y=1, sigma=-1, mu=0, minus branch: the (-2,0,1,-1,1) inequality.
    CHECK(symbell::class_b_build({1, 1, -1, 0, -1, true}, n) ==
          BellInequality{n, -2, 0, 1, -1, 1, 2 * n});
    if (n % 2 == 0)
      CHECK(symbell::class_b_build({1, 1, 1, 0, 1, true}, n) ==
            BellInequality{n, 2, 0, 1, 1, 1, 2 * n});
  }
}

TEST_CASE("class-B analytic bound equals the exact boundary scan") {
  for (i64 n : {4, 5, 8, 9}) {
    for (const ClassBParams& p : admissible_grid(n, 3, 3)) {
      const BellInequality raw = raw_class_b(p, n);
      const symbell::BoundResult res = symbell::classical_bound_exact(
          raw.alpha, raw.beta, raw.gamma, raw.delta, raw.epsilon, n);
      REQUIRE(res.beta_c_is_integer());
      CHECK(res.beta_c().integer() == raw.beta_c);
      // The library builder returns the canonical form of the same object.
      CHECK(symbell::class_b_build(p, n) == symbell::canonicalize(raw));
    }
  }
}

TEST_CASE("bound-proof identity: 2(I + beta_c) = core^2 + 8xyr - 1 pointwise") {
  for (i64 n : {4, 5, 7, 10}) {
    for (const ClassBParams& p : admissible_grid(n, 3, 3)) {
      const BellInequality raw = raw_class_b(p, n);
      symbell::for_each_boundary_count(n, [&](const StrategyCounts& t) {
        const symbell::SymmetricVector v = symbell::phi(t);
        const i64 lhs =
            symbell::evaluate(raw, v, n).twice + 2 * raw.beta_c;
        const i64 core = p.x * v.s0 + p.sigma * p.y * v.s1 +
                         p.sigma * p.mu + p.branch * p.x;
        const i64 r = symbell::class_b_core_r(p, t);
        CHECK(lhs == core * core + 8 * p.x * p.y * r - 1);
        CHECK(symbell::class_b_core_holds(p, t));
      });
    }
  }
}

TEST_CASE("core strategy count selection by branch and sigma") {
  const StrategyCounts t = symbell::make_counts(1, 2, 3, 4);
  CHECK(symbell::class_b_core_r({1, 1, 1, 0, 1, true}, t) == t.b);
  CHECK(symbell::class_b_core_r({1, 1, -1, 0, 1, true}, t) == t.a);
  CHECK(symbell::class_b_core_r({1, 1, 1, 0, -1, true}, t) == t.c);
  CHECK(symbell::class_b_core_r({1, 1, -1, 0, -1, true}, t) == t.d);
}

TEST_CASE("classifier recovers the class-B facets of the n=5 polytope") {
  const symbell::FacetList fl = symbell::facets(5);
  const symbell::ClassifyResult res = symbell::classify_facets_as_class_b(fl);
  CHECK(res.matched == 16);  // reference table value
  CHECK(res.matched == static_cast<i64>(res.matches.size()));
  std::set<std::size_t> indices;
  for (const symbell::ClassBMatch& m : res.matches) {
    CHECK(indices.insert(m.facet_index).second);
    CHECK_FALSE(symbell::class_b_rejection(m.params, 5).has_value());
    CHECK(symbell::class_b_build(m.params, 5) == fl.facets[m.facet_index]);
  }
}

TEST_CASE("classifier on a hand-assembled list distinguishes members") {
  const i64 n = 6;
  symbell::FacetList fl;
  fl.n = n;
  fl.vertex_count = symbell::vertex_count(n);
  fl.facets = {symbell::class_b_build({1, 1, -1, 0, -1, true}, n),
               symbell::dicke_build(n)};
  std::sort(fl.facets.begin(), fl.facets.end());
  const symbell::ClassifyResult res = symbell::classify_facets_as_class_b(fl);
  REQUIRE(res.matched == 1);
  CHECK(fl.facets[res.matches[0].facet_index] ==
        symbell::class_b_build({1, 1, -1, 0, -1, true}, n));
}

TEST_CASE("Dicke family closed forms") {
  // n=2 degenerates to the CHSH facet.
  const DickeFamily two = symbell::dicke_family(2);
  CHECK(two.ineq == BellInequality{2, 0, 0, 1, 1, -1, 2});
  CHECK(two.scale == 1);
  CHECK(two.beta_c_family == 2);
  CHECK(symbell::dicke_build(2) == two.ineq);

  for (i64 n = 2; n <= 21; ++n) {
    const DickeFamily fam = symbell::dicke_family(n);
    CHECK(symbell::coefficient_gcd(fam.ineq) == 1);
    CHECK(fam.ineq.beta_c == fam.scale * fam.beta_c_family);
    CHECK(fam.beta_c_family == n * (n - 1) * ((n + 2 + 1) / 2) / 2);
    if (n % 2 == 0) {
      CHECK(fam.scale == 1);
      CHECK(fam.ineq == BellInequality{n, 0, 0, n * (n - 1) / 2, n / 2, -1,
                                       n * (n - 1) * (n + 2) / 4});
    } else {
      CHECK(fam.scale == 2);
      CHECK(fam.ineq == BellInequality{n, n * (n - 1), n - 1, n * (n - 1), n,
                                       -2, n * (n - 1) * (n + 3) / 2});
    }
    CHECK(symbell::dicke_build(n) == fam.ineq);
  }
  CHECK_THROWS_AS(symbell::dicke_family(1), symbell::precondition_error);
}

TEST_CASE("Dicke stored beta_c is the exact classical bound") {
  for (i64 n = 2; n <= 24; ++n) {
    const BellInequality q = symbell::dicke_build(n);
    const symbell::BoundResult res = symbell::classical_bound_exact(
        q.alpha, q.beta, q.gamma, q.delta, q.epsilon, n);
    REQUIRE(res.beta_c_is_integer());
    CHECK(res.beta_c().integer() == q.beta_c);
  }
}

TEST_CASE("the five saturating tuples are exactly the exact-scan minimizers") {
  for (i64 n = 2; n <= 16; ++n) {
    const BellInequality q = symbell::dicke_build(n);
    const std::vector<StrategyCounts> sat = symbell::dicke_saturating_counts(n);
    REQUIRE(sat.size() == 5);
    CHECK(std::is_sorted(sat.begin(), sat.end()));
    for (const StrategyCounts& t : sat)
      CHECK(symbell::evaluate(q, symbell::phi(t), n).twice == -2 * q.beta_c);
    const symbell::BoundResult res = symbell::classical_bound_exact(
        q.alpha, q.beta, q.gamma, q.delta, q.epsilon, n);
    CHECK(res.minimizers == sat);
  }
}

TEST_CASE("Dicke inequalities are facets with those five saturators") {
  for (i64 n = 4; n <= 10; ++n) {
    const symbell::TightnessReport rep =
        symbell::is_tight(symbell::dicke_build(n));
    CHECK(rep.status == symbell::Tightness::tight);
    CHECK(rep.affine_dimension == 4);
    CHECK(rep.saturating_counts == symbell::dicke_saturating_counts(n));
  }
}
