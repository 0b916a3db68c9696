#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "affvoa/rational.hpp"

namespace affvoa {

/// A closed, ordered list of parameter names. Polynomials only combine when their
/// variable sets agree by name.
class VarSet {
 public:
  explicit VarSet(std::vector<std::string> names);

  const std::vector<std::string>& names() const { return names_; }
  std::size_t size() const { return names_.size(); }
  /// Index of `name`; throws std::out_of_range if undeclared.
  std::size_t index_of(const std::string& name) const;
  bool contains(const std::string& name) const;
  bool operator==(const VarSet& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
};

using VarsPtr = std::shared_ptr<const VarSet>;
VarsPtr make_vars(std::vector<std::string> names);

using Exponents = std::vector<int>;

/// Graded lexicographic order, largest total degree first.
struct GradedLexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Multivariate polynomial over Rational in a declared VarSet. Zero is the empty sum and
/// no zero coefficient is ever stored.
class ParamPoly {
 public:
  using TermMap = std::map<Exponents, Rational, GradedLexGreater>;

  explicit ParamPoly(VarsPtr vars);
  static ParamPoly constant(VarsPtr vars, const Rational& c);
  static ParamPoly variable(VarsPtr vars, const std::string& name);
  static ParamPoly monomial(VarsPtr vars, Exponents exps, const Rational& c);

  const VarsPtr& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (zero if absent).
  Rational constant_term() const;
  int total_degree() const;
  int degree_in(const std::string& name) const;

  void add_term(const Exponents& exps, const Rational& c);

  ParamPoly operator-() const;
  ParamPoly& operator+=(const ParamPoly& other);
  ParamPoly& operator-=(const ParamPoly& other);
  ParamPoly& operator*=(const Rational& c);
  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  friend ParamPoly operator*(ParamPoly a, const Rational& c) { return a *= c; }
  friend ParamPoly operator*(const Rational& c, ParamPoly a) { return a *= c; }
  bool operator==(const ParamPoly& other) const;
  bool operator!=(const ParamPoly& other) const { return !(*this == other); }

  ParamPoly pow(int e) const;

  /// Coefficient of name^power, as a polynomial over the same VarSet (not containing name).
  ParamPoly coefficient(const std::string& name, int power) const;
  ParamPoly derivative(const std::string& name) const;

  /// Exact value; every variable must be assigned.
  Rational evaluate(const std::map<std::string, Rational>& point) const;
  /// Assigns some variables, keeping the VarSet.
  ParamPoly partial_evaluate(const std::map<std::string, Rational>& point) const;
  /// Replaces variable i by images[i]; all images share one target VarSet.
  ParamPoly substitute(const std::vector<ParamPoly>& images) const;
  /// Same polynomial viewed over a larger VarSet (matched by name).
  ParamPoly embed(const VarsPtr& target) const;

  /// Canonical text, e.g. "b*c - 2*a^3 + 3/2*mu". Zero prints as "0".
  std::string to_string() const;

 private:
  void check_same(const ParamPoly& other) const;

  VarsPtr vars_;
  TermMap terms_;
};

}  // namespace affvoa
