#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "affvoa/c2.hpp"
#include "affvoa/lie.hpp"
#include "affvoa/param_poly.hpp"

namespace affvoa {

/// (e, h, f) with [h,e] = 2e, [h,f] = -2f, [e,f] = h; the constructor throws
/// std::invalid_argument otherwise.
class Sl2Triple {
 public:
  Sl2Triple(const SlN& g, LieElement e, LieElement h, LieElement f);
  const LieElement& e() const { return e_; }
  const LieElement& h() const { return h_; }
  const LieElement& f() const { return f_; }

 private:
  LieElement e_, h_, f_;
};

/// Exact basis of ker ad(e), in reduced echelon form over the Chevalley basis.
std::vector<LieElement> centralizer(const SlN& g, const LieElement& e);

/// f + sum_i params[i] * directions[i], with every direction in the centralizer of e.
struct SliceFamily {
  std::string name;
  Sl2Triple triple;
  std::vector<LieElement> directions;
  std::vector<std::string> params;
  MatrixRep matrix;
};

/// Builds the family and checks that each direction commutes with e.
SliceFamily make_slice(const SlN& g, std::string name, const Sl2Triple& triple, std::vector<LieElement> directions,
                       std::vector<std::string> params);

/// f_theta + a(h1 - h2) + b e12 + c e23 + d e13, i.e. [[a,b,d],[0,-2a,c],[1,0,a]].
SliceFamily minimal_slice(const SlN& g);
/// f + a e + b e13 for e = e12 + e23, f = 2 f12 + 2 f23, i.e. [[0,a,b],[2,0,a],[0,2,0]].
SliceFamily regular_slice(const SlN& g);

/// mu (h1 - h2) + f_theta = diag(mu, -2mu, mu) + E31, over the variable "mu".
MatrixRep mixed_sheet_target(const SlN& g);

struct SliceConstraints {
  VarsPtr vars;  // slice parameters followed by the target's parameters
  std::vector<ParamPoly> constraints;
  /// Variables solved linearly during elimination, in order.
  std::vector<std::string> eliminated;
  bool empty_variety = false;
};

/// Points of the slice whose characteristic polynomial equals that of the target for some
/// target parameter value. For the closure of a sheet of sl_3 whose members all share the
/// characteristic polynomial shape, this is the intersection of the slice with the closure.
/// Slice parameters that occur linearly with a constant coefficient are solved and
/// substituted; `reverse` scans the equations and variables in the opposite order.
SliceConstraints intersect_with_class(const SliceFamily& slice, const MatrixRep& target, bool reverse = false);

/// Random rational point on the constraint set. Each constraint in turn fixes one variable
/// of degree one whose coefficient is nonzero after the other variables are drawn.
std::map<std::string, Rational> random_solution(const SliceConstraints& c, Rng& rng);

/// Both constraint sets vanish on each other's random solutions at `points` points.
bool same_solution_set(const SliceConstraints& x, const SliceConstraints& y, std::uint64_t seed, int points = 50);

/// Number of variables minus the Jacobian rank at a random solution, majority over `trials`
/// seeds. Throws std::runtime_error if no value wins a strict majority.
int variety_dimension(const SliceConstraints& c, std::uint64_t seed, int trials = 5);

/// Slice matrix at a point of the constraint variables (target parameters are ignored).
QMatrix slice_point(const SliceFamily& slice, const std::map<std::string, Rational>& point);

}  // namespace affvoa
