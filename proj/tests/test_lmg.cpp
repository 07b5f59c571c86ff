// LMG module. The oracle Hamiltonian here is assembled in the test from
// explicit 4x4 two-site blocks (sigma_x sigma_x + sigma_y sigma_y is real),
// independent of the library's bit-twiddling construction.
#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <vector>

#include "symbell/lmg.hpp"
#include "symbell/types.hpp"

namespace {

using symbell::i64;
using symbell::LMGParams;

// sigma_x sigma_x + sigma_y sigma_y on a pair of qubits, basis {00,01,10,11}.
Eigen::Matrix4d flip_flop_block() {
  Eigen::Matrix4d b = Eigen::Matrix4d::Zero();
  b(1, 2) = b(2, 1) = 2.0;
  return b;
}

Eigen::MatrixXd oracle_hamiltonian(const LMGParams& p) {
  const i64 dim = i64{1} << p.n;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  const Eigen::Matrix4d ff = flip_flop_block();
  for (i64 i = 0; i < p.n; ++i)
    for (i64 j = i + 1; j < p.n; ++j)
      for (i64 s = 0; s < dim; ++s) {
        const int bi = static_cast<int>((s >> i) & 1);
        const int bj = static_cast<int>((s >> j) & 1);
        for (int ti = 0; ti < 2; ++ti)
          for (int tj = 0; tj < 2; ++tj) {
            const double w = ff(2 * ti + tj, 2 * bi + bj);
            if (w == 0.0) continue;
            i64 t = s;
            t = (t & ~(i64{1} << i)) | (i64{ti} << i);
            t = (t & ~(i64{1} << j)) | (i64{tj} << j);
            h(t, s) += -(p.lambda / static_cast<double>(p.n)) * w;
          }
      }
  for (i64 s = 0; s < dim; ++s) {
    const int ones = __builtin_popcountll(static_cast<unsigned long long>(s));
    h(s, s) += -p.h * static_cast<double>(p.n - 2 * ones);  // bit=1 <-> sz=-1
  }
  return h;
}

}  // namespace

TEST_CASE("sector energies match Dicke expectations of the oracle Hamiltonian") {
  for (i64 n = 2; n <= 7; ++n)
    for (double lambda : {0.7, 1.0})
      for (double h : {0.0, 0.05, 0.5, 3.0}) {
        const LMGParams p{lambda, h, n};
        const Eigen::MatrixXd oracle = oracle_hamiltonian(p);
        for (i64 k = 0; k <= n; ++k) {
          const Eigen::VectorXd v = symbell::dicke_vector_full(n, k);
          CHECK(symbell::lmg_energy(p, k) ==
                doctest::Approx(v.dot(oracle * v)).epsilon(1e-12));
        }
      }
}

TEST_CASE("ground state selection within the symmetric sector") {
  for (i64 n = 2; n <= 30; ++n)
    for (double h : {0.0, 0.01, 0.3, 2.0, 50.0}) {
      const LMGParams p{1.0, h, n};
      const symbell::LMGGroundState g = symbell::lmg_ground_state(p);
      // Reported energy is the minimum over all sector labels.
      double emin = 1e300;
      for (i64 k = 0; k <= n; ++k) emin = std::min(emin, symbell::lmg_energy(p, k));
      CHECK(g.energy == doctest::Approx(emin).epsilon(1e-12));
      CHECK(g.degeneracy == static_cast<int>(g.ks.size()));
      REQUIRE(!g.ks.empty());
      CHECK(std::is_sorted(g.ks.begin(), g.ks.end()));
      for (i64 k : g.ks)
        CHECK(symbell::lmg_energy(p, k) == doctest::Approx(emin).epsilon(1e-12));
      // State vector is the basis vector of the lowest ground label.
      REQUIRE(g.state.size() == n + 1);
      CHECK(g.state(g.ks.front()) == 1.0);
      CHECK(g.state.norm() == doctest::Approx(1.0));
      CHECK(g.weak_field == (h <= 1.0 / static_cast<double>(n)));
    }
}

TEST_CASE("weak field pins the half-filled Dicke label") {
  for (i64 n = 2; n <= 40; ++n) {
    const symbell::LMGGroundState g = symbell::lmg_ground_state({1.0, 0.4 / n, n});
    CHECK(g.weak_field);
    CHECK(g.degeneracy == 1);
    CHECK(g.ks.front() == (n + 1) / 2);
  }
}

TEST_CASE("zero field: odd n is two-fold degenerate, even n unique") {
  for (i64 n = 2; n <= 25; ++n) {
    const symbell::LMGGroundState g = symbell::lmg_ground_state({1.0, 0.0, n});
    if (n % 2 == 1) {
      CHECK(g.degeneracy == 2);
      CHECK(g.ks == std::vector<i64>{(n - 1) / 2, (n + 1) / 2});
    } else {
      CHECK(g.degeneracy == 1);
      CHECK(g.ks == std::vector<i64>{n / 2});
    }
  }
}

TEST_CASE("strong field fully polarizes along it") {
  for (i64 n : {3, 6, 11}) {
    const symbell::LMGGroundState g = symbell::lmg_ground_state({1.0, 10.0, n});
    CHECK(g.ks == std::vector<i64>{n});
    CHECK_FALSE(g.weak_field);
  }
}

TEST_CASE("level crossings at h = lambda(2m+1)/n") {
  // E(m) = (2 lambda/n) m^2 - 2hm + const on the magnetization ladder, so
  // consecutive labels tie exactly at those fields.
  const i64 n = 8;
  const double lambda = 1.0;
  for (i64 m = 0; m + 1 <= n / 2; ++m) {
    const double h_cross = lambda * static_cast<double>(2 * m + 1) / n;
    const symbell::LMGGroundState at = symbell::lmg_ground_state({lambda, h_cross, n});
    CHECK(at.degeneracy == 2);
    CHECK(at.ks == std::vector<i64>{n / 2 + m, n / 2 + m + 1});
    const symbell::LMGGroundState below =
        symbell::lmg_ground_state({lambda, h_cross - 0.01, n});
    CHECK(below.ks == std::vector<i64>{n / 2 + m});
    const symbell::LMGGroundState above =
        symbell::lmg_ground_state({lambda, h_cross + 0.01, n});
    CHECK(above.ks == std::vector<i64>{n / 2 + m + 1});
  }
}

TEST_CASE("full-space diagonalization confirms the sector ground state") {
  for (i64 n = 2; n <= 8; ++n)
    for (double h : {0.0, 0.05, 1.0 / n, 0.9, 4.0}) {
      const LMGParams p{1.0, h, n};
      const symbell::LMGFullResult full = symbell::lmg_ground_state_full(p);
      const symbell::LMGGroundState sector = symbell::lmg_ground_state(p);
      // Ferromagnetic coupling keeps the global ground state in the
      // maximal-spin sector.
      CHECK(full.energy ==
            doctest::Approx(sector.energy).epsilon(1e-11));
      CHECK(full.fidelity_with_sector_ground == doctest::Approx(1.0).epsilon(1e-10));
      // Independent cross-check against the in-test Hamiltonian.
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(oracle_hamiltonian(p));
      CHECK(full.energy == doctest::Approx(es.eigenvalues()(0)).epsilon(1e-11));
    }
  // Zero field, odd n: the full ground space is exactly two-dimensional.
  const symbell::LMGFullResult deg = symbell::lmg_ground_state_full({1.0, 0.0, 5});
  CHECK(deg.degeneracy == 2);
}

TEST_CASE("explicit Dicke vectors in the product basis") {
  for (i64 n = 1; n <= 10; ++n)
    for (i64 k = 0; k <= n; ++k) {
      const Eigen::VectorXd v = symbell::dicke_vector_full(n, k);
      REQUIRE(v.size() == (i64{1} << n));
      CHECK(v.norm() == doctest::Approx(1.0).epsilon(1e-13));
      // Support: k field-aligned spins = n-k one-bits, uniform amplitude.
      int support = 0;
      double first = 0.0;
      for (i64 s = 0; s < v.size(); ++s) {
        const int ones = __builtin_popcountll(static_cast<unsigned long long>(s));
        if (ones == n - k) {
          if (support == 0) first = v(s);
          ++support;
          CHECK(v(s) > 0.0);
          CHECK(v(s) == doctest::Approx(first).epsilon(1e-13));
        } else {
          CHECK(v(s) == 0.0);
        }
      }
      double binom = 1.0;
      for (i64 i = 0; i < k; ++i)
        binom = binom * static_cast<double>(n - i) / static_cast<double>(i + 1);
      CHECK(support == doctest::Approx(binom));
    }
  CHECK(symbell::dicke_vector_full(3, 3)(0) == 1.0);  // fully field-aligned
}

TEST_CASE("LMG preconditions") {
  CHECK_THROWS_AS(symbell::lmg_ground_state({0.0, 0.1, 4}), symbell::precondition_error);
  CHECK_THROWS_AS(symbell::lmg_ground_state({1.0, -0.1, 4}), symbell::precondition_error);
  CHECK_THROWS_AS(symbell::lmg_ground_state({1.0, 0.1, 1}), symbell::precondition_error);
  CHECK_THROWS_AS(symbell::lmg_ground_state_full({1.0, 0.1, 13}),
                  symbell::precondition_error);
  CHECK_THROWS_AS(symbell::lmg_energy({1.0, 0.1, 4}, 5), symbell::precondition_error);
  CHECK_THROWS_AS(symbell::dicke_vector_full(21, 0), symbell::precondition_error);
  CHECK_THROWS_AS(symbell::dicke_vector_full(4, 5), symbell::precondition_error);
}
