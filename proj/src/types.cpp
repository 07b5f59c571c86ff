#include "symbell/types.hpp"

#include <numeric>
#include <sstream>

namespace symbell {

void StrategyCounts::validate() const {
  if (a < 0 || b < 0 || c < 0 || d < 0)
    throw precondition_error("strategy counts must be non-negative: " + to_string(*this));
  if (a + b + c + d != n)
    throw precondition_error("strategy counts must sum to n: " + to_string(*this));
  if (n < 1) throw precondition_error("strategy counts require n >= 1");
}

i64 HalfInt::integer() const {
  if (!is_integer()) throw internal_error("half-integer " + str() + " used where an integer is required");
  return twice / 2;
}

std::string HalfInt::str() const {
  if (is_integer()) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

SymmetricVector phi(const StrategyCounts& p) {
  p.validate();
  const i64 s0 = p.a + p.b - p.c - p.d;
  const i64 s1 = p.a - p.b + p.c - p.d;
  return SymmetricVector{s0, s1, s0 * s0 - p.n, s0 * s1 - (p.a - p.b - p.c + p.d),
                         s1 * s1 - p.n};
}

HalfInt evaluate(const BellInequality& ineq, const SymmetricVector& v, i64 n) {
  if (ineq.n != n)
    throw precondition_error("inequality for n=" + std::to_string(ineq.n) +
                             " evaluated on a vector for n=" + std::to_string(n));
  // 2I is always integral; accumulate in 128 bits and check the result fits.
  const i128 twice = 2 * (i128(ineq.alpha) * v.s0 + i128(ineq.beta) * v.s1 +
                          i128(ineq.delta) * v.s01) +
                     i128(ineq.gamma) * v.s00 + i128(ineq.epsilon) * v.s11;
  if (twice > INT64_MAX || twice < INT64_MIN)
    throw internal_error("Bell expression value exceeds 64-bit range");
  return HalfInt{static_cast<i64>(twice)};
}

i64 coefficient_gcd(const BellInequality& q) {
  i64 g = 0;
  for (i64 v : {q.alpha, q.beta, q.gamma, q.delta, q.epsilon, q.beta_c})
    g = std::gcd(g, v < 0 ? -v : v);
  return g;
}

BellInequality canonicalize(const BellInequality& q) {
  const i64 g = coefficient_gcd(q);
  if (g <= 1) return q;
  return BellInequality{q.n,       q.alpha / g, q.beta / g,  q.gamma / g,
                        q.delta / g, q.epsilon / g, q.beta_c / g};
}

std::string to_string(const StrategyCounts& p) {
  std::ostringstream os;
  os << "(" << p.a << "," << p.b << "," << p.c << "," << p.d << "; n=" << p.n << ")";
  return os.str();
}

std::string to_string(const SymmetricVector& v) {
  std::ostringstream os;
  os << "(" << v.s0 << "," << v.s1 << "," << v.s00 << "," << v.s01 << "," << v.s11 << ")";
  return os.str();
}

std::string to_string(const BellInequality& q) {
  std::ostringstream os;
  os << "[n=" << q.n << " alpha=" << q.alpha << " beta=" << q.beta
     << " gamma=" << q.gamma << " delta=" << q.delta << " epsilon=" << q.epsilon
     << " beta_c=" << q.beta_c << "]";
  return os.str();
}

}  // namespace symbell
