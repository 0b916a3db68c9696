#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "affvoa/lie.hpp"
#include "affvoa/param_poly.hpp"
#include "affvoa/pbw.hpp"

namespace affvoa {

/// Polynomial ring C[g*] of the C2-algebra, one variable per Chevalley basis element in
/// basis order, named by BasisElement::variable_name ("e12", "f23", "h1", ...).
VarsPtr symbol_vars(const SlN& g);

/// Image of v in R_V: monomials containing any mode of depth >= 2 are dropped and every
/// b(-1) becomes the variable b.
ParamPoly symbol(const VacuumModule& module, const PBWVector& v);

/// Kirillov-Kostant bracket {a, b} = sum_{i,j} da/dx_i db/dx_j [x_i, x_j]. For linear a
/// this is symbol(x(0) v) when a = symbol(x(-1)1) and b = symbol(v).
ParamPoly poisson_bracket(const SlN& g, const ParamPoly& a, const ParamPoly& b);

/// p evaluated at a matrix X: the variable b takes the value tr(X b).
ParamPoly evaluate_symbol(const SlN& g, const ParamPoly& p, const MatrixRep& x);

/// The four symbols used to cut out the associated variety of L_{-1}(sl_3):
/// symbol(u1), symbol(u2), symbol(f_a1(0) u1) and symbol(f_a1(0) f_theta(0) u1).
std::vector<ParamPoly> level_minus_one_symbols(VacuumModule& module, const PBWVector& u1, const PBWVector& u2);

/// Representatives of the six Jordan classes of sl_3, lambda = h1 - h2.
struct ClassRep {
  std::string tag;
  MatrixRep matrix;
  /// Free class parameters (t for the sheets, a and b for the generic Cartan family).
  int parameters = 0;
};
std::vector<ClassRep> sl3_class_reps();

enum class Sl3Variety { NilpotentCone, MinimalOrbitClosure, SemisimpleSheetClosure, MixedSheetClosure };
std::string to_string(Sl3Variety v);

struct Membership {
  bool member = false;
  std::string witness;  // e.g. "t=2/3", or the failed condition
};

/// Membership of a traceless 3x3 rational matrix in the closed G-stable varieties, decided
/// from the characteristic polynomial lambda^3 + p lambda + q and rank conditions:
///   nilpotent cone          p = q = 0
///   minimal orbit closure   X^2 = 0
///   closure of G.C*lambda   char poly (lambda-t)^2 (lambda+2t) for some t, rank(X - t) <= 1
///   closure of G.(C*lambda + f_theta)   4p^3 + 27q^2 = 0
Membership membership(const QMatrix& x, Sl3Variety target);

/// 4p^3 + 27q^2 for the characteristic polynomial of a parametrized traceless 3x3 matrix.
ParamPoly sl3_discriminant(const MatrixRep& x);

/// Dimension of the union of G-orbits swept by the class family: (n^2 - 1) - dim ker ad(x)
/// at a random parameter value, plus the number of free parameters.
int class_dimension(const SlN& g, const ClassRep& rep, std::uint64_t seed);

struct ClassVerdict {
  std::string tag;
  bool vanishes = false;
  /// Index into the certificate's generator list and the evaluated polynomial, when nonvanishing.
  int witness_index = -1;
  std::string witness;
  /// Seeds of the conjugate samples checked for a vanishing class.
  std::vector<std::uint64_t> sample_seeds;
  bool samples_vanish = true;
};

struct VarietyCertificate {
  std::vector<ParamPoly> generators;  // g-closure of the symbols, linearly independent
  std::vector<ClassVerdict> classes;
  bool consistent() const;
};

/// g-span of the symbols under repeated brackets with the linear generators, returned as a
/// linearly independent list.
std::vector<ParamPoly> adjoint_closure(const SlN& g, const std::vector<ParamPoly>& seeds);

/// Evaluates the adjoint closure of symbol(gens) on every class representative and, for
/// each class where everything vanishes, on `samples` random conjugates of random members.
VarietyCertificate variety_certificate(const VacuumModule& module, const std::vector<PBWVector>& gens,
                                       std::uint64_t seed, int samples = 20);

}  // namespace affvoa
