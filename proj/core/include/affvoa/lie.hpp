#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "affvoa/param_poly.hpp"
#include "affvoa/rational.hpp"

namespace affvoa {

/// Chevalley basis label of sl_n. Roots are intervals (i, j), 1 <= i < j <= n, standing for
/// alpha_i + ... + alpha_{j-1}; H(i) is the simple coroot h_i.
struct BasisElement {
  enum class Kind { E, F, H };
  Kind kind;
  int i;
  int j;  // for H this is i + 1

  static BasisElement e(int i, int j) { return {Kind::E, i, j}; }
  static BasisElement f(int i, int j) { return {Kind::F, i, j}; }
  static BasisElement h(int i) { return {Kind::H, i, i + 1}; }

  /// "E[1,2]", "F[1,3]", "H[2]".
  std::string to_string() const;
  /// Lower-case variable name used for symbols: "e12", "f13", "h2" (indices joined with '_' past 9).
  std::string variable_name() const;
  bool operator==(const BasisElement&) const = default;
};

/// Parses the output of BasisElement::to_string.
BasisElement parse_basis_element(const std::string& text);

/// Dense rational matrix.
struct QMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Rational> a;

  QMatrix() = default;
  QMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}
  static QMatrix identity(int n);
  Rational& operator()(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  const Rational& operator()(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
  bool operator==(const QMatrix&) const = default;
};

QMatrix operator*(const QMatrix& x, const QMatrix& y);
QMatrix operator+(const QMatrix& x, const QMatrix& y);
QMatrix operator-(const QMatrix& x, const QMatrix& y);
QMatrix operator*(const Rational& c, const QMatrix& x);
Rational trace(const QMatrix& x);
int rank(QMatrix x);

/// Model of sl_n in the Chevalley basis with e_(i,j) = E_ij, f_(i,j) = E_ji,
/// h_i = E_ii - E_{i+1,i+1}. Basis order: positive roots by (height, i) for E, the same
/// for F, then H_1..H_{n-1}. For n = 3 this is e_a1, e_a2, e_theta, f_a1, f_a2, f_theta, h1, h2.
/// Brackets and the normalized form (x|y) = tr(xy) are tabulated once at construction.
class SlN {
 public:
  explicit SlN(int n);

  int n() const { return n_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const BasisElement& basis(int idx) const { return basis_[idx]; }
  const std::vector<BasisElement>& basis() const { return basis_; }
  int index_of(const BasisElement& b) const;
  int num_positive_roots() const { return num_pos_; }

  int e(int i, int j) const { return index_of(BasisElement::e(i, j)); }
  int f(int i, int j) const { return index_of(BasisElement::f(i, j)); }
  int h(int i) const { return index_of(BasisElement::h(i)); }
  int e_simple(int i) const { return e(i, i + 1); }
  int f_simple(int i) const { return f(i, i + 1); }
  int e_theta() const { return e(1, n_); }
  int f_theta() const { return f(1, n_); }

  /// [b_a, b_c] as a sparse integer combination of basis indices.
  const std::vector<std::pair<int, long>>& bracket(int a, int c) const { return bracket_[a * dim() + c]; }
  long form(int a, int c) const { return form_[a * dim() + c]; }
  /// Root-lattice weight (coordinates over alpha_1..alpha_{n-1}).
  const std::vector<int>& weight(int a) const { return weight_[a]; }
  /// (alpha_i | alpha_j).
  int cartan(int i, int j) const;
  /// Matrix E_ij etc. for basis element a.
  const QMatrix& matrix(int a) const { return matrix_[a]; }

 private:
  int n_;
  int num_pos_ = 0;
  std::vector<BasisElement> basis_;
  std::vector<std::vector<std::pair<int, long>>> bracket_;
  std::vector<long> form_;
  std::vector<std::vector<int>> weight_;
  std::vector<QMatrix> matrix_;
};

/// Sparse exact combination of basis elements of sl_n.
class LieElement {
 public:
  explicit LieElement(int n) : n_(n) {}
  static LieElement basis(const SlN& g, int idx, const Rational& c = Rational(1));
  static LieElement basis(const SlN& g, const BasisElement& b, const Rational& c = Rational(1));

  int n() const { return n_; }
  const std::map<int, Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int idx) const;
  bool is_zero() const { return coeffs_.empty(); }
  void add(int idx, const Rational& c);

  LieElement& operator+=(const LieElement& o);
  LieElement& operator-=(const LieElement& o);
  LieElement& operator*=(const Rational& c);
  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
  friend LieElement operator*(const Rational& c, LieElement a) { return a *= c; }
  bool operator==(const LieElement& o) const { return n_ == o.n_ && coeffs_ == o.coeffs_; }

  std::string to_string(const SlN& g) const;

 private:
  void check_rank(const LieElement& o) const;
  int n_;
  std::map<int, Rational> coeffs_;
};

LieElement bracket(const SlN& g, const LieElement& x, const LieElement& y);
Rational normalized_form(const SlN& g, const LieElement& x, const LieElement& y);

/// Pairs (x_i, x^i) with (x_i | x^j) = delta_ij, x_i running over the Chevalley basis.
std::vector<std::pair<LieElement, LieElement>> dual_basis(const SlN& g);

/// n x n matrix with polynomial entries in a declared parameter set.
class MatrixRep {
 public:
  MatrixRep(int n, VarsPtr vars);
  int n() const { return n_; }
  const VarsPtr& vars() const { return vars_; }
  ParamPoly& operator()(int r, int c) { return entries_[static_cast<std::size_t>(r) * n_ + c]; }
  const ParamPoly& operator()(int r, int c) const { return entries_[static_cast<std::size_t>(r) * n_ + c]; }

  ParamPoly trace() const;
  QMatrix evaluate(const std::map<std::string, Rational>& point) const;
  MatrixRep operator*(const MatrixRep& o) const;
  MatrixRep operator+(const MatrixRep& o) const;
  MatrixRep operator-(const MatrixRep& o) const;
  bool operator==(const MatrixRep& o) const;
  bool is_zero() const;

  static MatrixRep from_rational(const QMatrix& m, VarsPtr vars);

 private:
  int n_;
  VarsPtr vars_;
  std::vector<ParamPoly> entries_;
};

/// Adds x as a (constant) summand scaled by the polynomial `coef`.
void add_scaled(MatrixRep& target, const SlN& g, const LieElement& x, const ParamPoly& coef);

MatrixRep to_matrix(const SlN& g, const LieElement& x, VarsPtr vars);
QMatrix to_qmatrix(const SlN& g, const LieElement& x);
/// Inverse of to_qmatrix on traceless matrices; throws if the trace is nonzero.
LieElement from_qmatrix(const SlN& g, const QMatrix& m);

/// (X | b) = tr(X b) for every basis element b, as polynomials in X's parameters.
std::vector<ParamPoly> pairings_with_basis(const SlN& g, const MatrixRep& x);

/// det(lambda I - M) over the VarSet of M extended by "lambda" (appended last).
ParamPoly char_poly(const MatrixRep& m);
VarsPtr with_lambda(const VarsPtr& vars);

/// Conjugates x by a product of unipotents exp(t E_ij) (i != j) with random rational t.
/// The conjugator is drawn from `seed` only.
MatrixRep adjoint_orbit_sample(const MatrixRep& x, std::uint64_t seed, int factors = 6);

}  // namespace affvoa
