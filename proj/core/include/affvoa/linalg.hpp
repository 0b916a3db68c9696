#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "affvoa/rational.hpp"

namespace affvoa {

/// Sparse row: strictly increasing column indices, no zero entries.
using SparseRow = std::vector<std::pair<int, Rational>>;

/// Rows of a linear system M x = 0 over the rationals.
struct SparseSystem {
  int cols = 0;
  std::vector<SparseRow> rows;

  /// Appends a row given as a column -> value map (zeros dropped).
  void add_row(const std::map<int, Rational>& row);
  bool is_solution(const std::vector<Rational>& x) const;
};

/// Kernel basis in reduced echelon form: each vector has a leading column where it is 1
/// and where every other basis vector is 0. The basis is canonical for the subspace.
struct Nullspace {
  std::vector<std::vector<Rational>> basis;
  std::vector<int> leading_columns;
  int primes_used = 0;  // 0 for the direct exact path
};

/// Exact kernel by fraction-free Gauss-Jordan elimination over the integers
/// (rows scaled to primitive integer vectors, pivots chosen left to right).
Nullspace nullspace_exact(const SparseSystem& system);

/// Kernel by sparse elimination modulo several 62-bit primes, Chinese remaindering and
/// rational reconstruction. The candidate basis is accepted only after it reproduces
/// itself on a fresh prime and satisfies M x = 0 exactly. Since the nullity over F_p
/// bounds the nullity over Q from above, the returned basis is a certified basis of the
/// rational kernel. Throws std::runtime_error if no certificate is reached within
/// `max_primes` primes.
Nullspace nullspace_multimodular(const SparseSystem& system, int max_primes = 24);

/// Chooses the exact path for small systems and the multimodular path otherwise.
Nullspace nullspace(const SparseSystem& system);

/// Rank of a set of sparse rational vectors.
int rank_of(const std::vector<std::map<int, Rational>>& vectors);

/// Incremental row-echelon basis over Q for sparse vectors keyed by column.
class EchelonBasis {
 public:
  /// Reduces v against the basis; if a nonzero remainder is left it is added and the
  /// method returns true.
  bool insert(std::map<int, Rational> v);
  bool contains(std::map<int, Rational> v) const;
  int size() const { return static_cast<int>(rows_.size()); }

 private:
  void reduce(std::map<int, Rational>& v) const;
  std::map<int, std::map<int, Rational>> rows_;  // keyed by pivot column, pivot entry 1
};

/// Rational reconstruction of `a` modulo `m`: returns true and sets r = num/den with
/// |num|, den <= sqrt(m/2) when such a fraction exists.
bool rational_reconstruct(const Integer& a, const Integer& m, Rational& r);

}  // namespace affvoa
