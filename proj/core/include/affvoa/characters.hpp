#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "affvoa/affine_weyl.hpp"
#include "affvoa/pbw.hpp"
#include "affvoa/rational.hpp"

namespace affvoa {

/// Multiplicities of the vacuum character, keyed by (depth, weight in simple-root coordinates).
/// Missing keys are zero.
struct CharacterTable {
  int n = 0;
  Rational level;
  int depth = 0;
  std::map<std::pair<int, std::vector<int>>, long long> entries;
  /// Weights covered by the table; empty means every weight.
  std::vector<std::vector<int>> window;

  long long at(int d, const std::vector<int>& mu) const;
  /// Rows "d c1 ... c_{n-1} multiplicity", one per nonzero entry, in key order.
  std::string to_text() const;
};

/// Positive integer q with (k + n) q = n - 1 and gcd(q, n - 1) = 1, or nullopt when k is
/// outside the non-admissible family handled here.
std::optional<int> level_denominator(const Rational& k, int n);

struct NumeratorTerm {
  int sign = 1;
  AffineWeight weight;
  std::vector<int> gamma;        // simple-root coordinates of gamma
  std::vector<int> permutation;  // w in S_n, as the image of 0..n-1
  int depth = 0;                 // delta-depth of the term
};

/// All w t_{q gamma} o k Lambda_0 with w in the finite Weyl group, gamma in the root lattice
/// with nonnegative alpha_1 and alpha_{n-1} coordinates, and delta-depth at most D.
/// Throws std::invalid_argument for k outside the family.
std::vector<NumeratorTerm> numerator_terms(const Rational& k, int n, int D);

/// Candidate box for gamma: every gamma with delta-depth <= D has all |c_i| <= bound. Derived
/// from depth >= q((n-1)/2 |gamma|^2 - |rho| |gamma|) and |c_i| <= |gamma| |Lambda_i|.
int gamma_coordinate_bound(int n, int q, int D);

/// Signed multiplicities of the finite Weyl numerator for highest weight lambda (root
/// coordinates, lambda + rho need not be dominant), by Kostant's formula.
std::map<std::vector<int>, long long> finite_character(int n, const std::vector<int>& lambda);

/// Generating function prod_{j>=1} prod_b (1 - x^j e^{wt b})^{-1} of V^k(sl_n), through depth D.
CharacterTable vacuum_table(int n, const Rational& k, int D);

/// Character of L_k(sl_n) through depth D from the closed translation formula. Throws
/// std::logic_error if any multiplicity comes out negative.
CharacterTable character_table(const Rational& k, int n, int D);

/// Quotient dimensions dim V_(d,mu) - dim I_(d,mu) for the ideal generated by `gens`, over
/// every weight with d <= D (or only the listed weights when `window` is nonempty).
CharacterTable brute_force_character(VacuumModule& module, const std::vector<PBWVector>& gens, int D,
                                     const std::vector<std::vector<int>>& window = {});

struct CharacterDiffEntry {
  int depth;
  std::vector<int> weight;
  long long left;
  long long right;
};

/// Entries that differ on the shared depth range, restricted to weights inside both windows.
std::vector<CharacterDiffEntry> compare(const CharacterTable& a, const CharacterTable& b);

}  // namespace affvoa
