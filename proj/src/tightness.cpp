#include "symbell/polytope.hpp"

#include <algorithm>
#include <array>
#include <vector>

#include "symbell/boundary.hpp"

namespace symbell {
namespace {

// Rank over Q of integer 5-vectors, fraction-free (Bareiss): intermediates
// are minors, bounded by 5^{5/2} (4 n^2)^5 and thus exact in i128 for every
// n this library accepts.
int rank5(std::vector<std::array<i128, 5>>& a) {
  const int rows = static_cast<int>(a.size());
  int rank = 0;
  i128 prev = 1;
  for (int col = 0; col < 5 && rank < rows; ++col) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (a[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[rank], a[piv]);
    for (int r = rank + 1; r < rows; ++r) {
      for (int c = col + 1; c < 5; ++c)
        a[r][c] = (a[rank][col] * a[r][c] - a[r][col] * a[rank][c]) / prev;
      a[r][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

}  // namespace

TightnessReport is_tight(const BellInequality& ineq) {
  TightnessReport rep;
  const i64 n = ineq.n;
  if (n < 1) throw precondition_error("is_tight requires n >= 1");

  if (ineq.alpha == 0 && ineq.beta == 0 && ineq.gamma == 0 && ineq.delta == 0 &&
      ineq.epsilon == 0) {
    rep.improper = true;
    if (ineq.beta_c < 0) {
      rep.status = Tightness::invalid;
      rep.witness = make_counts(n, 0, 0, 0);
    } else {
      rep.status = Tightness::not_tight;
    }
    return rep;
  }

  const i64 target2 = -2 * ineq.beta_c;  // saturation: 2*I == -2*beta_c
  bool violated = false;
  StrategyCounts bad{};
  for_each_boundary_count(n, [&](const StrategyCounts& t) {
    if (violated) return;
    const HalfInt val = evaluate(ineq, phi(t), n);
    if (val.twice < target2) {
      violated = true;
      bad = t;
    } else if (val.twice == target2) {
      rep.saturating_counts.push_back(t);
    }
  });
  if (violated) {
    rep.status = Tightness::invalid;
    rep.saturating_counts.clear();
    rep.witness = bad;
    return rep;
  }

  std::sort(rep.saturating_counts.begin(), rep.saturating_counts.end());
  rep.saturating_vertices.reserve(rep.saturating_counts.size());
  for (const StrategyCounts& t : rep.saturating_counts)
    rep.saturating_vertices.push_back(phi(t));

  if (rep.saturating_counts.empty()) {
    rep.status = Tightness::not_tight;
    return rep;
  }

  const SymmetricVector& base = rep.saturating_vertices.front();
  std::vector<std::array<i128, 5>> diffs;
  diffs.reserve(rep.saturating_vertices.size() - 1);
  for (std::size_t i = 1; i < rep.saturating_vertices.size(); ++i) {
    const SymmetricVector& v = rep.saturating_vertices[i];
    diffs.push_back({v.s0 - base.s0, v.s1 - base.s1, v.s00 - base.s00,
                     v.s01 - base.s01, v.s11 - base.s11});
  }
  rep.affine_dimension = rank5(diffs);
  rep.status = rep.affine_dimension == 4 ? Tightness::tight : Tightness::not_tight;
  return rep;
}

bool facet_list_contains(const FacetList& fl, const BellInequality& ineq) {
  if (ineq.n != fl.n) return false;
  const BellInequality canon = canonicalize(ineq);
  return std::binary_search(fl.facets.begin(), fl.facets.end(), canon);
}

}  // namespace symbell
