#pragma once

#include <map>
#include <vector>

#include "affvoa/pbw.hpp"

namespace affvoa::testing {

// True iff a == c b for some nonzero rational c.
inline bool proportional(const PBWVector& a, const PBWVector& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  const auto& [m, c] = *a.terms().begin();
  auto it = b.terms().find(m);
  if (it == b.terms().end()) return false;
  return a == (c / it->second) * b;
}

// Random homogeneous vector: a combination of up to `terms` basis monomials of one
// (depth, weight) space.
inline PBWVector random_homogeneous(VacuumModule& module, Rng& rng, int depth, const std::vector<int>& weight,
                                    int terms = 4) {
  const auto& basis = module.weight_space_basis(depth, weight);
  PBWVector v;
  if (basis.empty()) return v;
  for (int i = 0; i < terms; ++i)
    v.add(basis[static_cast<std::size_t>(rng.integer(0, static_cast<long>(basis.size()) - 1))],
          rng.nonzero_rational(5, 3));
  return v;
}

// Column coordinates of vectors inside one weight space, for rank computations.
inline std::map<int, Rational> coordinates(VacuumModule& module, const PBWVector& v) {
  std::map<int, Rational> out;
  for (const auto& [m, c] : v.terms()) out[module.index_in_weight_space(m)] = c;
  return out;
}

// u^1 and u^2 of V^{-1}(sl_3) in the published normalization.
inline PBWVector level_minus_one_u1(const VacuumModule& module) {
  PBWVector u;
  u.add(module.parse_monomial("E[1,2](-1)^2 E[2,3](-1)"), -1);
  u.add(module.parse_monomial("E[1,2](-1) E[1,3](-1) H[2](-1)"), 1);
  u.add(module.parse_monomial("E[1,3](-1)^2 F[2,3](-1)"), 1);
  return u;
}

inline PBWVector level_minus_one_u2(const VacuumModule& module) {
  PBWVector u;
  u.add(module.parse_monomial("E[1,2](-1) E[2,3](-1)^2"), 1);
  u.add(module.parse_monomial("E[2,3](-1) E[1,3](-1) H[1](-1)"), 1);
  u.add(module.parse_monomial("E[2,3](-1) E[1,3](-2)"), -2);
  u.add(module.parse_monomial("E[1,3](-1)^2 F[1,2](-1)"), -1);
  return u;
}

}  // namespace affvoa::testing
