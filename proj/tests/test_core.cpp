// Core types: phi, exact evaluation, HalfInt, canonical form, and the
// boundary enumeration. Oracles here recompute every correlator from an
// explicit party-by-party outcome assignment, independent of phi's algebra.
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "symbell/boundary.hpp"
#include "symbell/types.hpp"

namespace {

using symbell::BellInequality;
using symbell::HalfInt;
using symbell::i64;
using symbell::StrategyCounts;
using symbell::SymmetricVector;

// Independent oracle: lay out the n parties' outcome pairs explicitly and
// form the symmetrized one- and two-body sums by brute force.
SymmetricVector correlators_by_enumeration(const StrategyCounts& t) {
  std::vector<int> x, y;
  auto push = [&](i64 count, int xv, int yv) {
    for (i64 i = 0; i < count; ++i) {
      x.push_back(xv);
      y.push_back(yv);
    }
  };
  push(t.a, +1, +1);
  push(t.b, +1, -1);
  push(t.c, -1, +1);
  push(t.d, -1, -1);
  SymmetricVector v{};
  const std::size_t n = x.size();
  for (std::size_t i = 0; i < n; ++i) {
    v.s0 += x[i];
    v.s1 += y[i];
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      v.s00 += x[i] * x[j];
      v.s01 += x[i] * y[j];
      v.s11 += y[i] * y[j];
    }
  }
  return v;
}

// Independent oracle for the Bell expression: evaluate
// alpha*S0 + beta*S1 + (gamma/2)*S00 + delta*S01 + (epsilon/2)*S11, doubled.
i64 twice_value_by_formula(const BellInequality& q, const SymmetricVector& v) {
  return 2 * (q.alpha * v.s0 + q.beta * v.s1 + q.delta * v.s01) +
         q.gamma * v.s00 + q.epsilon * v.s11;
}

std::vector<StrategyCounts> some_interior_counts(i64 n) {
  std::vector<StrategyCounts> out;
  for (i64 a = 1; a < n; ++a)
    for (i64 b = 1; a + b < n; ++b)
      for (i64 c = 1; a + b + c < n; ++c)
        out.push_back(symbell::make_counts(a, b, c, n - a - b - c));
  return out;
}

}  // namespace

TEST_CASE("phi matches explicit party-by-party correlator sums") {
  for (i64 n = 1; n <= 12; ++n) {
    for (const StrategyCounts& t : symbell::enumerate_boundary_counts(n))
      CHECK(symbell::phi(t) == correlators_by_enumeration(t));
    for (const StrategyCounts& t : some_interior_counts(n))
      CHECK(symbell::phi(t) == correlators_by_enumeration(t));
  }
}

TEST_CASE("phi on hand-checked tuples") {
  // n=2, both parties on strategy (+1,+1): all sums are maximal.
  CHECK(symbell::phi(symbell::make_counts(2, 0, 0, 0)) ==
        SymmetricVector{2, 2, 2, 2, 2});
  // n=2, one (+1,+1) and one (-1,-1): everything cancels pairwise.
  CHECK(symbell::phi(symbell::make_counts(1, 0, 0, 1)) ==
        SymmetricVector{0, 0, -2, -2, -2});
  // n=3, mixed boundary tuple (0,1,2,0):
  // S0=-1, S1=1, S01 = S0*S1 - (a-b-c+d) = -1 - (-3) = 2.
  CHECK(symbell::phi(symbell::make_counts(0, 1, 2, 0)) ==
        SymmetricVector{-1, 1, -2, 2, -2});
}

TEST_CASE("strategy count validation") {
  CHECK_THROWS_AS(symbell::make_counts(-1, 1, 0, 1), symbell::precondition_error);
  CHECK_THROWS_AS((StrategyCounts{1, 1, 1, 1, 5}.validate()),
                  symbell::precondition_error);
  CHECK_THROWS_AS((StrategyCounts{0, 0, 0, 0, 0}.validate()),
                  symbell::precondition_error);
  CHECK_NOTHROW(symbell::make_counts(0, 0, 0, 3));
  CHECK(symbell::make_counts(1, 0, 2, 0).on_boundary());
  CHECK_FALSE(symbell::make_counts(1, 1, 1, 1).on_boundary());
}

TEST_CASE("evaluate agrees with the direct formula and checks n") {
  const BellInequality chsh{2, 0, 0, 1, 1, -1, 2};
  for (const auto& [t, v] : symbell::vertices_with_counts(2)) {
    (void)t;
    CHECK(symbell::evaluate(chsh, v, 2).twice == twice_value_by_formula(chsh, v));
  }
  const BellInequality q{6, -2, 0, 1, -1, 1, 12};
  for (const auto& v : symbell::vertices(6))
    CHECK(symbell::evaluate(q, v, 6).twice == twice_value_by_formula(q, v));
  CHECK_THROWS_AS(symbell::evaluate(chsh, SymmetricVector{}, 3),
                  symbell::precondition_error);
}

TEST_CASE("Bell values on strategy images are integers") {
  // 2I = 2(alpha S0 + beta S1 + delta S01) + gamma(S0^2-n) + epsilon(S1^2-n)
  // and S0, S1, n share parity, so I itself is integral on every phi image.
  const BellInequality odd{5, 1, -2, 3, 1, -1, 0};
  for (const auto& v : symbell::vertices(5))
    CHECK(symbell::evaluate(odd, v, 5).is_integer());
}

TEST_CASE("HalfInt semantics") {
  CHECK(HalfInt{14}.is_integer());
  CHECK(HalfInt{14}.integer() == 7);
  CHECK(HalfInt{14}.str() == "7");
  CHECK(HalfInt{7}.value() == doctest::Approx(3.5));
  CHECK_FALSE(HalfInt{7}.is_integer());
  CHECK(HalfInt{7}.str() == "7/2");
  CHECK(HalfInt{-7}.str() == "-7/2");
  CHECK(HalfInt{-8}.integer() == -4);
  CHECK_THROWS_AS(HalfInt{7}.integer(), symbell::internal_error);
  CHECK(HalfInt{3} < HalfInt{4});
}

TEST_CASE("half-integer values appear only off the strategy images") {
  const BellInequality q{4, 0, 0, 1, 0, 0, 0};  // I = S00/2
  CHECK(symbell::evaluate(q, SymmetricVector{0, 0, 1, 0, 0}, 4).twice == 1);
  CHECK_FALSE(symbell::evaluate(q, SymmetricVector{0, 0, 1, 0, 0}, 4).is_integer());
}

TEST_CASE("coefficient gcd and canonical form") {
  const BellInequality q{7, 2, 4, 6, 8, 10, 12};
  CHECK(symbell::coefficient_gcd(q) == 2);
  CHECK(symbell::canonicalize(q) == BellInequality{7, 1, 2, 3, 4, 5, 6});
  const BellInequality zero{7, 0, 0, 0, 0, 0, 0};
  CHECK(symbell::coefficient_gcd(zero) == 0);
  CHECK(symbell::canonicalize(zero) == zero);
  // beta_c participates in the gcd.
  const BellInequality r{3, 0, 0, 2, 2, -2, 4};
  CHECK(symbell::canonicalize(r) == BellInequality{3, 0, 0, 1, 1, -1, 2});
  // Signs are preserved, never flipped.
  const BellInequality s{3, -3, 0, 3, 0, 0, 6};
  CHECK(symbell::canonicalize(s) == BellInequality{3, -1, 0, 1, 0, 0, 2});
}

TEST_CASE("vertex count formula 2(n^2+1)") {
  for (i64 n = 1; n <= 30; ++n) {
    CHECK(symbell::vertex_count(n) == 2 * (n * n + 1));
    CHECK(static_cast<i64>(symbell::vertices(n).size()) ==
          symbell::vertex_count(n));
  }
}

TEST_CASE("boundary tuples are exactly the abcd=0 slice, each once") {
  for (i64 n = 1; n <= 15; ++n) {
    const auto counts = symbell::enumerate_boundary_counts(n);
    std::set<std::array<i64, 4>> seen;
    for (const StrategyCounts& t : counts) {
      CHECK_NOTHROW(t.validate());
      CHECK(t.on_boundary());
      CHECK(t.n == n);
      CHECK(seen.insert({t.a, t.b, t.c, t.d}).second);
    }
    // Independent count: all tuples minus the interior ones.
    i64 all = 0, interior = 0;
    for (i64 a = 0; a <= n; ++a)
      for (i64 b = 0; a + b <= n; ++b)
        for (i64 c = 0; a + b + c <= n; ++c) {
          ++all;
          const i64 d = n - a - b - c;
          if (a > 0 && b > 0 && c > 0 && d > 0) ++interior;
        }
    CHECK(static_cast<i64>(counts.size()) == all - interior);
  }
  CHECK_THROWS_AS(symbell::enumerate_boundary_counts(0),
                  symbell::precondition_error);
}

TEST_CASE("for_each_boundary_count visits the same set as the materialized list") {
  for (i64 n : {1, 2, 5, 9, 14}) {
    std::vector<StrategyCounts> streamed;
    symbell::for_each_boundary_count(n, [&](const StrategyCounts& t) {
      streamed.push_back(t);
    });
    auto materialized = symbell::enumerate_boundary_counts(n);
    auto key = [](const StrategyCounts& l, const StrategyCounts& r) {
      return l < r;
    };
    std::sort(streamed.begin(), streamed.end(), key);
    std::sort(materialized.begin(), materialized.end(), key);
    CHECK(streamed == materialized);
  }
}

TEST_CASE("vertices are pairwise distinct and pair with their tuples") {
  for (i64 n = 1; n <= 20; ++n) {
    const auto pairs = symbell::vertices_with_counts(n);
    std::set<SymmetricVector> seen;
    for (const auto& [t, v] : pairs) {
      CHECK(symbell::phi(t) == v);
      CHECK(seen.insert(v).second);
    }
    CHECK(static_cast<i64>(seen.size()) == symbell::vertex_count(n));
  }
}

TEST_CASE("inequality ordering is lexicographic over all six entries") {
  const BellInequality a{5, 0, 0, 1, 1, -1, 2};
  const BellInequality b{5, 0, 0, 1, 1, -1, 3};
  const BellInequality c{5, 0, 1, 0, 0, 0, 0};
  CHECK(a < b);
  CHECK(a < c);
  CHECK_FALSE(b < a);
}
