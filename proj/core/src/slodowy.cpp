#include "affvoa/slodowy.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "affvoa/linalg.hpp"

namespace affvoa {
namespace {

// Coefficients of lambda^0 .. lambda^{n-1} of char_poly(m), re-expressed over `target`.
std::vector<ParamPoly> char_coefficients(const MatrixRep& m, const VarsPtr& target) {
  ParamPoly cp = char_poly(m);
  std::vector<ParamPoly> out;
  for (int k = 0; k < m.n(); ++k) {
    ParamPoly c = cp.coefficient("lambda", k);
    ParamPoly r(m.vars());
    for (const auto& [e, x] : c.terms()) r.add_term(Exponents(e.begin(), e.end() - 1), x);
    out.push_back(r.embed(target));
  }
  return out;
}

// Sign convention for unsolved constraints: the term touching the most slice parameters
// (ties broken by the polynomial order) gets a positive coefficient.
ParamPoly orient(const ParamPoly& p, const std::vector<std::size_t>& slice_vars) {
  int best = -1;
  Rational sign = 1;
  for (const auto& [e, c] : p.terms()) {
    int touched = 0;
    for (std::size_t v : slice_vars) touched += e[v] > 0;
    if (touched > best) {
      best = touched;
      sign = c > 0 ? 1 : -1;
    }
  }
  return sign * p;
}

}  // namespace

Sl2Triple::Sl2Triple(const SlN& g, LieElement e, LieElement h, LieElement f)
    : e_(std::move(e)), h_(std::move(h)), f_(std::move(f)) {
  if (bracket(g, h_, e_) != Rational(2) * e_ || bracket(g, h_, f_) != Rational(-2) * f_ || bracket(g, e_, f_) != h_)
    throw std::invalid_argument("not an sl_2-triple");
}

std::vector<LieElement> centralizer(const SlN& g, const LieElement& e) {
  SparseSystem system;
  system.cols = g.dim();
  std::vector<std::map<int, Rational>> rows(g.dim());
  for (int j = 0; j < g.dim(); ++j) {
    LieElement image = bracket(g, e, LieElement::basis(g, j));
    for (const auto& [i, c] : image.coeffs()) rows[i][j] = c;
  }
  for (const auto& r : rows) system.add_row(r);
  std::vector<LieElement> out;
  for (const auto& v : nullspace_exact(system).basis) {
    LieElement x(g.n());
    for (int j = 0; j < g.dim(); ++j) x.add(j, v[j]);
    out.push_back(std::move(x));
  }
  return out;
}

SliceFamily make_slice(const SlN& g, std::string name, const Sl2Triple& triple, std::vector<LieElement> directions,
                       std::vector<std::string> params) {
  if (directions.size() != params.size()) throw std::invalid_argument("one parameter per slice direction");
  for (const auto& d : directions)
    if (!bracket(g, triple.e(), d).is_zero()) throw std::invalid_argument("slice direction outside the centralizer of e");
  VarsPtr vars = make_vars(params);
  MatrixRep m = to_matrix(g, triple.f(), vars);
  for (std::size_t i = 0; i < directions.size(); ++i)
    add_scaled(m, g, directions[i], ParamPoly::variable(vars, params[i]));
  return {std::move(name), triple, std::move(directions), std::move(params), std::move(m)};
}

SliceFamily minimal_slice(const SlN& g) {
  auto b = [&](int idx) { return LieElement::basis(g, idx); };
  Sl2Triple triple(g, b(g.e_theta()), b(g.h(1)) + b(g.h(2)), b(g.f_theta()));
  return make_slice(g, "minimal", triple, {b(g.h(1)) - b(g.h(2)), b(g.e(1, 2)), b(g.e(2, 3)), b(g.e_theta())},
                    {"a", "b", "c", "d"});
}

SliceFamily regular_slice(const SlN& g) {
  auto b = [&](int idx) { return LieElement::basis(g, idx); };
  LieElement e = b(g.e(1, 2)) + b(g.e(2, 3));
  Sl2Triple triple(g, e, Rational(2) * (b(g.h(1)) + b(g.h(2))), Rational(2) * (b(g.f(1, 2)) + b(g.f(2, 3))));
  return make_slice(g, "regular", triple, {e, b(g.e_theta())}, {"a", "b"});
}

MatrixRep mixed_sheet_target(const SlN& g) {
  VarsPtr vars = make_vars({"mu"});
  MatrixRep m = to_matrix(g, LieElement::basis(g, g.f_theta()), vars);
  add_scaled(m, g, LieElement::basis(g, g.h(1)) - LieElement::basis(g, g.h(2)), ParamPoly::variable(vars, "mu"));
  return m;
}

SliceConstraints intersect_with_class(const SliceFamily& slice, const MatrixRep& target, bool reverse) {
  std::vector<std::string> names = slice.params;
  for (const auto& t : target.vars()->names()) {
    if (std::find(names.begin(), names.end(), t) != names.end())
      throw std::invalid_argument("target parameter '" + t + "' clashes with a slice parameter");
    names.push_back(t);
  }
  SliceConstraints out;
  out.vars = make_vars(names);
  auto cs = char_coefficients(slice.matrix, out.vars);
  auto ct = char_coefficients(target, out.vars);
  std::vector<ParamPoly> eqs;
  for (std::size_t k = 0; k < cs.size(); ++k) {
    ParamPoly e = cs[k] - ct[k];
    if (!e.is_zero()) eqs.push_back(std::move(e));
  }
  std::vector<std::string> candidates = slice.params;
  if (reverse) {
    std::reverse(eqs.begin(), eqs.end());
    std::reverse(candidates.begin(), candidates.end());
  }

  std::vector<ParamPoly> solved;
  for (bool progress = true; progress;) {
    progress = false;
    for (std::size_t ei = 0; ei < eqs.size() && !progress; ++ei) {
      for (const auto& v : candidates) {
        if (std::find(out.eliminated.begin(), out.eliminated.end(), v) != out.eliminated.end()) continue;
        if (eqs[ei].degree_in(v) != 1) continue;
        ParamPoly coef = eqs[ei].coefficient(v, 1);
        if (!coef.is_constant()) continue;
        ParamPoly value = (Rational(-1) / coef.constant_term()) * eqs[ei].coefficient(v, 0);
        std::vector<ParamPoly> images;
        for (const auto& name : names)
          images.push_back(name == v ? value : ParamPoly::variable(out.vars, name));
        solved.push_back(ParamPoly::variable(out.vars, v) - value);
        out.eliminated.push_back(v);
        std::vector<ParamPoly> next;
        for (std::size_t j = 0; j < eqs.size(); ++j) {
          if (j == ei) continue;
          ParamPoly r = eqs[j].substitute(images);
          if (r.is_zero()) continue;
          if (r.is_constant()) out.empty_variety = true;
          next.push_back(std::move(r));
        }
        eqs = std::move(next);
        progress = true;
        break;
      }
    }
  }
  std::vector<std::size_t> slice_idx;
  for (const auto& p : slice.params) slice_idx.push_back(out.vars->index_of(p));
  out.constraints = std::move(solved);
  for (const auto& e : eqs) out.constraints.push_back(orient(e, slice_idx));
  // Back-substitution keeps earlier solved constraints valid, but a later solve may have
  // introduced its variable into them; reduce them against the later solutions.
  for (std::size_t i = 0; i < out.eliminated.size(); ++i)
    for (std::size_t j = i + 1; j < out.eliminated.size(); ++j) {
      const std::string& v = out.eliminated[j];
      if (out.constraints[i].degree_in(v) == 0) continue;
      ParamPoly value = ParamPoly::variable(out.vars, v) - out.constraints[j];
      std::vector<ParamPoly> images;
      for (const auto& name : names) images.push_back(name == v ? value : ParamPoly::variable(out.vars, name));
      out.constraints[i] = out.constraints[i].substitute(images);
    }
  return out;
}

std::map<std::string, Rational> random_solution(const SliceConstraints& c, Rng& rng) {
  const auto& names = c.vars->names();
  std::map<std::string, Rational> point;
  auto draw = [&] { return rng.nonzero_rational(6, 4); };
  for (const auto& constraint : c.constraints) {
    ParamPoly p = constraint.partial_evaluate(point);
    std::string target;
    for (const auto& v : names)
      if (!point.count(v) && p.degree_in(v) == 1) {
        target = v;
        break;
      }
    if (target.empty()) {
      if (!p.is_zero()) throw std::runtime_error("constraint has no free linear variable: " + constraint.to_string());
      continue;
    }
    bool solved = false;
    for (int attempt = 0; attempt < 50 && !solved; ++attempt) {
      std::map<std::string, Rational> trial = point;
      for (const auto& v : names)
        if (v != target && !trial.count(v) && p.degree_in(v) > 0) trial[v] = draw();
      Rational coef = p.coefficient(target, 1).partial_evaluate(trial).constant_term();
      if (coef == 0) continue;
      Rational rest = p.coefficient(target, 0).partial_evaluate(trial).constant_term();
      trial[target] = -rest / coef;
      point = std::move(trial);
      solved = true;
    }
    if (!solved) throw std::runtime_error("could not sample a regular solution");
  }
  for (const auto& v : names)
    if (!point.count(v)) point[v] = draw();
  return point;
}

bool same_solution_set(const SliceConstraints& x, const SliceConstraints& y, std::uint64_t seed, int points) {
  if (!(*x.vars == *y.vars)) return false;
  Rng rng(seed);
  for (int i = 0; i < points; ++i) {
    auto px = random_solution(x, rng);
    for (const auto& p : y.constraints)
      if (p.evaluate(px) != 0) return false;
    auto py = random_solution(y, rng);
    for (const auto& p : x.constraints)
      if (p.evaluate(py) != 0) return false;
  }
  return true;
}

int variety_dimension(const SliceConstraints& c, std::uint64_t seed, int trials) {
  const auto& names = c.vars->names();
  std::map<int, int> votes;
  for (int t = 0; t < trials; ++t) {
    Rng rng(seed + static_cast<std::uint64_t>(t));
    auto point = random_solution(c, rng);
    QMatrix jac(static_cast<int>(c.constraints.size()), static_cast<int>(names.size()));
    for (std::size_t i = 0; i < c.constraints.size(); ++i)
      for (std::size_t j = 0; j < names.size(); ++j)
        jac(static_cast<int>(i), static_cast<int>(j)) = c.constraints[i].derivative(names[j]).evaluate(point);
    votes[static_cast<int>(names.size()) - rank(jac)] += 1;
  }
  for (const auto& [dim, count] : votes)
    if (2 * count > trials) return dim;
  throw std::runtime_error("no majority dimension across sampled points; try another seed");
}

QMatrix slice_point(const SliceFamily& slice, const std::map<std::string, Rational>& point) {
  std::map<std::string, Rational> restricted;
  for (const auto& p : slice.params) restricted[p] = point.at(p);
  return slice.matrix.evaluate(restricted);
}

}  // namespace affvoa
