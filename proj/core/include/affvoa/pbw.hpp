#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "affvoa/lie.hpp"
#include "affvoa/param_poly.hpp"
#include "affvoa/rational.hpp"

namespace affvoa {

/// One creation mode b(-m), m >= 1, packed as basis * 64 + (m - 1). Sorting codes puts
/// generators in basis order and, within a generator, mode -1 before -2 before -3, which
/// is exactly the normal form z(+) z(-) z(0) used for vacuum-module vectors.
using ModeCode = std::uint16_t;
constexpr int kMaxModeDepth = 64;

inline ModeCode mode_code(int basis, int depth) {
  return static_cast<ModeCode>(basis * kMaxModeDepth + depth - 1);
}
inline int code_basis(ModeCode c) { return c / kMaxModeDepth; }
inline int code_depth(ModeCode c) { return c % kMaxModeDepth + 1; }

/// Normal-ordered monomial applied to the vacuum: nondecreasing mode codes.
using Monomial = std::vector<ModeCode>;

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// Sparse rational combination of normal-ordered monomials. Zero coefficients are never
/// stored; iteration follows the lexicographic order of the code sequences.
class PBWVector {
 public:
  using TermMap = std::map<Monomial, Rational>;

  PBWVector() = default;
  static PBWVector vacuum();
  static PBWVector monomial(Monomial m, const Rational& c = Rational(1));

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coeff(const Monomial& m) const;

  void add(const Monomial& m, const Rational& c);
  void add_scaled(const PBWVector& v, const Rational& c);
  PBWVector& operator+=(const PBWVector& o);
  PBWVector& operator-=(const PBWVector& o);
  PBWVector& operator*=(const Rational& c);
  friend PBWVector operator+(PBWVector a, const PBWVector& b) { return a += b; }
  friend PBWVector operator-(PBWVector a, const PBWVector& b) { return a -= b; }
  friend PBWVector operator*(const Rational& c, PBWVector a) { return a *= c; }
  bool operator==(const PBWVector& o) const { return terms_ == o.terms_; }

 private:
  TermMap terms_;
};

/// The vacuum module V^k(sl_n) with its mode action.
///
/// Mode products are computed by straightening against the affine commutation relations
///   [x(m), y(p)] = [x,y](m+p) + m (x|y) delta_{m+p,0} k,   x(m) 1 = 0 for m >= 0,
/// and every intermediate result is memoized. The caches make an instance unsuitable for
/// concurrent use; give each thread its own module.
class VacuumModule {
 public:
  VacuumModule(int n, Rational level);
  VacuumModule(const VacuumModule&) = delete;
  VacuumModule& operator=(const VacuumModule&) = delete;

  const SlN& g() const { return g_; }
  int n() const { return g_.n(); }
  const Rational& level() const { return level_; }

  /// Conformal depth: sum of |mode|.
  static int depth(const Monomial& m);
  /// Li-filtration depth: sum of (|mode| - 1).
  static int li_depth(const Monomial& m);
  /// h-weight in simple-root coordinates.
  std::vector<int> weight(const Monomial& m) const;

  /// Canonical monomials of conformal depth d and weight mu, in lexicographic code order.
  const std::vector<Monomial>& weight_space_basis(int d, const std::vector<int>& mu);
  /// Position of m inside weight_space_basis(depth(m), weight(m)).
  int index_in_weight_space(const Monomial& m);

  /// b(mode) applied to v, for any integer mode.
  PBWVector apply_mode(int basis, int mode, const PBWVector& v);
  PBWVector apply_mode(const LieElement& x, int mode, const PBWVector& v);
  /// x(0) for x in g.
  PBWVector zero_mode(const LieElement& x, const PBWVector& v) { return apply_mode(x, 0, v); }
  /// Normal-ordered product b(-m) * M for a single creation mode.
  const PBWVector& create(ModeCode c, const Monomial& m);

  /// Kernel of e_{alpha_i}(0) (1 <= i < n) and f_theta(1) on the (d, mu) weight space.
  /// Every returned vector is re-checked against all x(p), 1 <= p <= d, for every basis
  /// element x, and against e_alpha(0) for every positive root; a failure throws
  /// std::logic_error. Basis vectors come in reduced echelon form over the weight-space
  /// basis order.
  std::vector<PBWVector> singular_vectors(int d, const std::vector<int>& mu);
  /// True iff v is killed by every x(p), 1 <= p <= max_mode, and every e_alpha(0).
  bool is_singular(const PBWVector& v, int max_mode);

  /// Sugawara L_0 computed from the truncated normal-ordered sum
  ///   L_0 = 1/(2(k+n)) [ sum_i x_i(0) x^i(0) + 2 sum_{m>=1} x_i(-m) x^i(m) ].
  PBWVector sugawara_L0(const PBWVector& v);

  /// Text of a monomial, e.g. "E[1,2](-1)^2 E[1,3](-1) H[1](-1)^3"; the vacuum is "1".
  std::string to_string(const Monomial& m) const;
  Monomial parse_monomial(const std::string& text) const;
  /// List of (monomial text, rational text) pairs in canonical term order.
  std::vector<std::pair<std::string, std::string>> serialize(const PBWVector& v) const;
  PBWVector deserialize(const std::vector<std::pair<std::string, std::string>>& pairs) const;

  /// Builds the monomial of a list of (basis element, depth) factors in any order.
  Monomial make_monomial(const std::vector<std::pair<BasisElement, int>>& factors) const;

 private:
  const PBWVector& annihilate(int basis, int mode, const Monomial& m);

  SlN g_;
  Rational level_;
  std::unordered_map<Monomial, PBWVector, MonomialHash> create_cache_;
  std::unordered_map<Monomial, PBWVector, MonomialHash> annihilate_cache_;
  std::map<std::pair<int, std::vector<int>>, std::vector<Monomial>> basis_cache_;
  std::map<std::pair<int, std::vector<int>>, std::unordered_map<Monomial, int, MonomialHash>> index_cache_;
};

/// c = k dim(g) / (k + n). Throws at the critical level k = -n.
Rational central_charge(const Rational& k, int n);

/// Total dimension of depth-d of V^k(sl_n): coefficient of x^d in prod_j (1-x^j)^{-(n^2-1)}.
long long vacuum_depth_dimension(int n, int d);

/// Ideal of V^k(sl_n) generated by singular vectors, graded by (depth, weight).
///
/// Because the generators are singular, the ideal is U(n_-) U(g) applied to them, so the
/// depth-d piece is the g-module spanned by the generators of depth d plus all
/// x(-p) I_{d-p}, p >= 1. That recursion is what this class evaluates.
class IdealTower {
 public:
  /// Throws std::invalid_argument unless every generator is a homogeneous singular vector.
  IdealTower(VacuumModule& module, std::vector<PBWVector> generators);

  /// Spanning basis (linearly independent) of the ideal in weight space (d, mu).
  const std::vector<PBWVector>& slice(int d, const std::vector<int>& mu);
  int dimension(int d, const std::vector<int>& mu) { return static_cast<int>(slice(d, mu).size()); }
  /// dim V_(d,mu) - dim I_(d,mu).
  int quotient_dimension(int d, const std::vector<int>& mu);

 private:
  using Slices = std::map<std::vector<int>, std::vector<PBWVector>>;
  const Slices& level(int d);

  VacuumModule& module_;
  std::vector<PBWVector> generators_;
  std::vector<int> generator_depths_;
  std::map<int, Slices> levels_;
};

/// Named coefficients of a weight (3(2m+1), 2 alpha_1 + alpha_2) vector of V^k(sl_3),
/// read against the ansatz
///   sum a_i  e1 eT h1^i h2^{6m+1-i}
///   + sum [x_i e1^2 e2 + y_i eT^2 f2 + b_i e1(-2) eT + c_i e1 eT(-2)] h1^i h2^{6m-i}
///   + sum [d_i eT eT(-2) f2 + z_i e1 e2 eT f2 + l_i e1^2 eT f1 + n_i e1(-2) eT(-2)
///          + k_i e1^2 e2(-2) + g_i e1 e1(-2) e2 + p_i eT^2 f2(-2) + q_i e1 eT^2 fT
///          + m_i e1 eT(-3) + r_i e1(-3) eT] h1^i h2^{6m-1-i}
/// where e1 = e_{alpha_1}, e2 = e_{alpha_2}, eT = e_theta, all modes -1 unless shown.
struct CoefficientReport {
  int m = 0;
  std::map<std::string, std::vector<Rational>> families;
  /// v minus all named terms.
  PBWVector residual;

  /// Coefficient with index i; indices outside the family's range read as 0.
  Rational get(const std::string& family, int i) const;
};

/// Monomial carrying coefficient `family`_i in the ansatz above.
Monomial ansatz_monomial(const VacuumModule& module, const std::string& family, int i, int m);
/// Family names in display order.
const std::vector<std::string>& ansatz_families();
/// Index range [0, top] of a family for the given m.
int ansatz_top_index(const std::string& family, int m);

CoefficientReport coefficient_report(const VacuumModule& module, const PBWVector& v, int m);
/// Rescales v so that a_{2m} = 1. Throws std::domain_error if a_{2m} = 0.
PBWVector normalize(const VacuumModule& module, const PBWVector& v, int m);
/// True iff every monomial of the residual lies in the span V^1: h-part of degree at
/// most 6m-2 or of positive Li depth.
bool residual_in_v1(const CoefficientReport& report);

struct RelationCheck {
  std::string relation;  // name of the relation family, e.g. "a_minus_y"
  int index = 0;
  Rational value;        // left-hand side; the relation holds iff value == 0
};

/// Every instance of the ten coefficient relation families, evaluated on the report.
std::vector<RelationCheck> coefficient_relations(const CoefficientReport& report);

/// Pure-Cartan part (all modes -1) of v as a polynomial in variables "h1".."h_{n-1}".
ParamPoly cartan_part(const VacuumModule& module, const PBWVector& v);

}  // namespace affvoa
