#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "affvoa/lie.hpp"
#include "affvoa/param_poly.hpp"
#include "affvoa/pbw.hpp"

namespace affvoa {

/// A PBW word of U(sl_n): basis indices sorted by the order n^- < h < n^+ (see
/// EnvelopingAlgebra::order_key), repetitions allowed.
using Word = std::vector<int>;

/// Sparse combination of PBW words.
struct EnvelopingElement {
  std::map<Word, Rational> terms;

  bool is_zero() const { return terms.empty(); }
  void add(const Word& w, const Rational& c);
  void add_scaled(const EnvelopingElement& o, const Rational& c);
  int degree() const;
  bool operator==(const EnvelopingElement& o) const { return terms == o.terms; }
};

/// U(sl_n) with exact PBW straightening xy = yx + [x,y]. Products are memoized, so an
/// instance is not safe for concurrent use.
class EnvelopingAlgebra {
 public:
  explicit EnvelopingAlgebra(int n);
  const SlN& g() const { return g_; }

  /// Position of a basis element in the PBW order: F's, then H's, then E's.
  int order_key(int basis) const;
  EnvelopingElement one() const;
  EnvelopingElement generator(int basis) const;
  EnvelopingElement multiply(const EnvelopingElement& a, const EnvelopingElement& b);
  /// ad(x) u = x u - u x.
  EnvelopingElement adjoint(int basis, const EnvelopingElement& u);
  /// Common weight (simple-root coordinates); throws std::invalid_argument if u is not
  /// homogeneous or is zero.
  std::vector<int> weight(const EnvelopingElement& u) const;
  std::string to_string(const EnvelopingElement& u) const;

 private:
  const EnvelopingElement& left_multiply(int basis, const Word& w);

  SlN g_;
  std::vector<int> order_;
  std::unordered_map<Monomial, EnvelopingElement, MonomialHash> cache_;
};

/// The isomorphism A(V^k(g)) -> U(g), [x(-1)1] -> x, evaluated by the recursion
///   [x(-n) W] = (-1)^{n-1} ( x [W] - [x(0) W] ),
/// which follows from a(-n)W + a(-n+1)W in O(V) for n >= 2 and
/// x(-1)1 * W = x(-1)W + x(0)W.
class ZhuMap {
 public:
  ZhuMap(VacuumModule& module, EnvelopingAlgebra& algebra);

  EnvelopingElement image(const PBWVector& v);
  const EnvelopingElement& image(const Monomial& m);

  /// Same map computed along a different route: the deepest mode is moved to the front
  /// first and reduced there. Used to check that the reduction does not depend on order.
  EnvelopingElement image_deepest_first(const PBWVector& v);

 private:
  const EnvelopingElement& deepest_first(const Monomial& m);
  // x(-n) W for a vector W, given the images of W and x(0) W.
  EnvelopingElement front_reduction(int basis, int depth, const PBWVector& w, bool deepest);

  VacuumModule& module_;
  EnvelopingAlgebra& algebra_;
  std::unordered_map<Monomial, EnvelopingElement, MonomialHash> cache_;
  std::unordered_map<Monomial, EnvelopingElement, MonomialHash> deep_cache_;
};

/// Closed form for a monomial x1(-n1) ... xr(-nr)1: (-1)^{sum(n_i - 1)} x_r ... x_1.
EnvelopingElement zhu_closed_form(const VacuumModule& module, EnvelopingAlgebra& algebra, const Monomial& m);

/// a * b for a = x(-1)1: x(-1)b + x(0)b.
PBWVector star_current(VacuumModule& module, int x, const PBWVector& b);
/// a * b for a = x(-1)y(-1)1 (conformal weight 2): sum_j binom(2,j) a_(j-1) b with the
/// normal-ordered product modes
///   a_(n) = sum_{j<0} x(j) y(n-1-j) + sum_{j>=0} y(n-1-j) x(j).
PBWVector star_pair(VacuumModule& module, int x, int y, const PBWVector& b);

/// Harish-Chandra projection of a weight-zero element: the pure-Cartan words read as a
/// polynomial in l1..l_{n-1}, where l_i = lambda(h_i). Throws std::invalid_argument on
/// nonzero weight.
ParamPoly hc_projection(const EnvelopingAlgebra& algebra, const EnvelopingElement& u);

/// Products m r with r in the ad-closure of the seeds and m a PBW word with
/// deg m + deg r <= cap and weight(m) = -weight(r). All outputs have weight zero.
std::vector<EnvelopingElement> weight_zero_elements(EnvelopingAlgebra& algebra,
                                                    const std::vector<EnvelopingElement>& seeds, int cap);

/// One conjectured line in fundamental-weight coordinates (lambda(h1), lambda(h2)) as
/// functions of t.
struct WeightFamily {
  std::string name;
  int i = 0;
  ParamPoly l1, l2;  // polynomials in "t"
};
/// t L1 - s L2, t L2 - s L1 and t L1 - (t + s + 1) L2 with s = 2i/(2m+1), i = 0..2m.
std::vector<WeightFamily> conjectured_families(int m);

struct FamilyVerdict {
  std::string name;
  int i = 0;
  bool vanishes = false;
  int witness_index = -1;
};

struct OffFamilyWitness {
  Rational l1, l2;
  int witness_index = -1;  // -1: every polynomial vanished
};

struct CharacteristicVarietyReport {
  int m = 0;
  std::vector<FamilyVerdict> families;
  std::vector<OffFamilyWitness> off_family;
  bool all_families_vanish() const;
  bool all_off_family_witnessed() const;
};

/// Checks every polynomial on every family (identically in t) and looks for a
/// nonvanishing polynomial at `samples` random rational weights lying on no family.
CharacteristicVarietyReport characteristic_variety_test(const std::vector<ParamPoly>& polys, int m,
                                                        std::uint64_t seed, int samples = 50);

}  // namespace affvoa
