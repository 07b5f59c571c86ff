#pragma once
// Isotropic Lipkin-Meshkov-Glick model
//   H = -(lambda/N) Sum_{i<j} (sx_i sx_j + sy_i sy_j) - h Sum_i sz_i,
// lambda > 0 (ferromagnetic), h >= 0. H is permutation invariant and, in
// the maximal-spin sector, diagonal in the Dicke basis:
//   E(k) = -(lambda/N)[2(S(S+1) - m^2) - N] - 2 h m,   S = N/2.
//
// Here k labels the number of field-aligned spins, m = k - N/2, so a weak
// field singles out k = ceil(N/2) at odd N (the half-filled Dicke state);
// the magnetization label is the only difference from the Bell-operator
// module's Dicke convention.

#include <Eigen/Dense>
#include <vector>

#include "symbell/types.hpp"

namespace symbell {

struct LMGParams {
  double lambda = 1.0;  // > 0
  double h = 0.0;       // >= 0
  i64 n = 0;

  bool weak_field() const { return h <= lambda / static_cast<double>(n); }
};

struct LMGGroundState {
  double energy = 0.0;
  int degeneracy = 1;
  std::vector<i64> ks;          // ground Dicke labels, ascending
  Eigen::VectorXd state;        // amplitudes in the Dicke basis (= e_{ks[0]})
  bool weak_field = false;
};

// Symmetric-sector energy of |D^k>.
double lmg_energy(const LMGParams& params, i64 k);

// Ground state within the symmetric sector (which contains the global
// ground state for ferromagnetic coupling; cross-checked against the full
// Hilbert space for n <= 10). Requires lambda > 0, h >= 0, n >= 2.
LMGGroundState lmg_ground_state(const LMGParams& params);

struct LMGFullResult {
  double energy = 0.0;
  int degeneracy = 1;
  // Squared overlap of the ground space with the symmetric-sector ground
  // state(s); 1 when the global ground state is the predicted Dicke state.
  double fidelity_with_sector_ground = 0.0;
};

// Dense 2^n diagonalization of H (oracle). Requires 2 <= n <= 12.
LMGFullResult lmg_ground_state_full(const LMGParams& params);

// Explicit Dicke vector in the 2^n product basis with k field-aligned
// spins; used by the oracle and by symmetric-state reductions in tests.
Eigen::VectorXd dicke_vector_full(i64 n, i64 k);

}  // namespace symbell
