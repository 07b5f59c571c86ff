#pragma once
// Core domain types for symmetric two-body Bell inequalities of N parties.
//
// Conventions used throughout:
//   * a deterministic local strategy assigns each party a pair of outcomes
//     (x_i, y_i) in {+1,-1}^2 for the two measurements; (a,b,c,d) count the
//     parties using {1,1}, {1,-1}, {-1,1}, {-1,-1} respectively;
//   * correlators are symmetrized over parties:
//       S_k  = sum_i <M_k^(i)>,   S_kl = sum_{i != j} <M_k^(i) M_l^(j)>;
//   * a symmetric Bell expression is
//       I = alpha*S0 + beta*S1 + (gamma/2)*S00 + delta*S01 + (epsilon/2)*S11
//     and the inequality reads I + beta_c >= 0 on every local model.
//
// All polytope-side arithmetic is exact. Coefficients are stored as the
// integers (alpha..epsilon) of the expression above; because gamma and
// epsilon enter halved, I can be a half-integer, so evaluation returns an
// exact half-integer value.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace symbell {

// Thrown when a documented precondition is not met (CLI exit code 2).
class precondition_error : public std::runtime_error {
 public:
  explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an internal consistency check fails, e.g. an analytic bound
// disagreeing with the exact one (CLI exit code 3). Always indicates a bug.
class internal_error : public std::runtime_error {
 public:
  explicit internal_error(const std::string& what) : std::runtime_error(what) {}
};

using i64 = long long;
using i128 = __int128;

// Counts of the four deterministic local strategies; a+b+c+d == n.
struct StrategyCounts {
  i64 a = 0, b = 0, c = 0, d = 0;
  i64 n = 0;

  bool on_boundary() const { return a == 0 || b == 0 || c == 0 || d == 0; }
  void validate() const;

  friend bool operator==(const StrategyCounts&, const StrategyCounts&) = default;
  friend auto operator<=>(const StrategyCounts& l, const StrategyCounts& r) {
    if (auto c0 = l.a <=> r.a; c0 != 0) return c0;
    if (auto c1 = l.b <=> r.b; c1 != 0) return c1;
    if (auto c2 = l.c <=> r.c; c2 != 0) return c2;
    return l.d <=> r.d;
  }
};

inline StrategyCounts make_counts(i64 a, i64 b, i64 c, i64 d) {
  StrategyCounts p{a, b, c, d, a + b + c + d};
  p.validate();
  return p;
}

// Symmetrized correlator vector (S0, S1, S00, S01, S11).
struct SymmetricVector {
  i64 s0 = 0, s1 = 0, s00 = 0, s01 = 0, s11 = 0;

  friend bool operator==(const SymmetricVector&, const SymmetricVector&) = default;
  friend auto operator<=>(const SymmetricVector&, const SymmetricVector&) = default;
};

// Integer-coefficient symmetric Bell inequality I + beta_c >= 0.
// Canonical form: gcd(alpha,beta,gamma,delta,epsilon,beta_c) == 1 and the
// inequality holds on every vertex of the local polytope.
struct BellInequality {
  i64 n = 0;
  i64 alpha = 0, beta = 0, gamma = 0, delta = 0, epsilon = 0;
  i64 beta_c = 0;

  friend bool operator==(const BellInequality&, const BellInequality&) = default;
  // Lexicographic tie-break order used for canonical facet lists.
  friend auto operator<=>(const BellInequality& l, const BellInequality& r) {
    if (auto c = l.alpha <=> r.alpha; c != 0) return c;
    if (auto c = l.beta <=> r.beta; c != 0) return c;
    if (auto c = l.gamma <=> r.gamma; c != 0) return c;
    if (auto c = l.delta <=> r.delta; c != 0) return c;
    if (auto c = l.epsilon <=> r.epsilon; c != 0) return c;
    return l.beta_c <=> r.beta_c;
  }
};

// Exact half-integer: value() == twice/2. Bell expressions with odd gamma or
// epsilon evaluate to these; everything else stays integral.
struct HalfInt {
  i64 twice = 0;

  bool is_integer() const { return twice % 2 == 0; }
  i64 integer() const;                 // throws unless is_integer()
  double value() const { return 0.5 * static_cast<double>(twice); }
  std::string str() const;             // "7" or "7/2"

  friend bool operator==(const HalfInt&, const HalfInt&) = default;
  friend auto operator<=>(const HalfInt&, const HalfInt&) = default;
};

// phi: strategy counts -> symmetrized correlator vector, exact:
//   S0 = a+b-c-d, S1 = a-b+c-d, S00 = S0^2-n, S11 = S1^2-n,
//   S01 = S0*S1 - (a-b-c+d).
SymmetricVector phi(const StrategyCounts& p);

// Exact evaluation of I at v. Throws precondition_error when ineq.n mismatches n.
HalfInt evaluate(const BellInequality& ineq, const SymmetricVector& v, i64 n);

// gcd of the six entries; 0 for the all-zero inequality.
i64 coefficient_gcd(const BellInequality& ineq);

// Divide all six entries by their gcd (no-op on the all-zero inequality).
BellInequality canonicalize(const BellInequality& ineq);

std::string to_string(const StrategyCounts& p);
std::string to_string(const SymmetricVector& v);
std::string to_string(const BellInequality& q);

}  // namespace symbell
