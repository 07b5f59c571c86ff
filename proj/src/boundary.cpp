#include "symbell/boundary.hpp"

#include <algorithm>

namespace symbell {

i64 vertex_count(i64 n) {
  if (n < 1) throw precondition_error("vertex count requires n >= 1");
  return 2 * (n * n + 1);
}

std::vector<StrategyCounts> enumerate_boundary_counts(i64 n) {
  std::vector<StrategyCounts> out;
  out.reserve(static_cast<std::size_t>(vertex_count(n)));
  for_each_boundary_count(n, [&](const StrategyCounts& p) { out.push_back(p); });
  if (static_cast<i64>(out.size()) != vertex_count(n))
    throw internal_error("boundary enumeration count mismatch at n=" + std::to_string(n));
  return out;
}

std::vector<SymmetricVector> vertices(i64 n) {
  std::vector<SymmetricVector> out;
  out.reserve(static_cast<std::size_t>(vertex_count(n)));
  for_each_boundary_count(n, [&](const StrategyCounts& p) { out.push_back(phi(p)); });
  return out;
}

std::vector<std::pair<StrategyCounts, SymmetricVector>> vertices_with_counts(i64 n) {
  std::vector<std::pair<StrategyCounts, SymmetricVector>> out;
  out.reserve(static_cast<std::size_t>(vertex_count(n)));
  for_each_boundary_count(n, [&](const StrategyCounts& p) { out.emplace_back(p, phi(p)); });
  return out;
}

}  // namespace symbell
