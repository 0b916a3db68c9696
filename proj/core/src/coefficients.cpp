// Coefficient bookkeeping for the weight (3(2m+1), 2 alpha_1 + alpha_2) singular vector of
// V^k(sl_3), k = -3 + 2/(2m+1). The ansatz and the relation list are documented in pbw.hpp.

#include <stdexcept>

#include "affvoa/pbw.hpp"

namespace affvoa {
namespace {

struct Factor {
  BasisElement b;
  int depth;
};

const BasisElement kE1 = BasisElement::e(1, 2);
const BasisElement kE2 = BasisElement::e(2, 3);
const BasisElement kET = BasisElement::e(1, 3);
const BasisElement kF1 = BasisElement::f(1, 2);
const BasisElement kF2 = BasisElement::f(2, 3);
const BasisElement kFT = BasisElement::f(1, 3);

// Non-Cartan factors of each family and the offset of its h-degree from 6m.
struct Family {
  std::vector<Factor> factors;
  int h_offset;
};

const std::map<std::string, Family>& family_table() {
  static const std::map<std::string, Family> table{
      {"a", {{{kE1, 1}, {kET, 1}}, 1}},
      {"x", {{{kE1, 1}, {kE1, 1}, {kE2, 1}}, 0}},
      {"y", {{{kET, 1}, {kET, 1}, {kF2, 1}}, 0}},
      {"b", {{{kE1, 2}, {kET, 1}}, 0}},
      {"c", {{{kE1, 1}, {kET, 2}}, 0}},
      {"d", {{{kET, 1}, {kET, 2}, {kF2, 1}}, -1}},
      {"z", {{{kE1, 1}, {kE2, 1}, {kET, 1}, {kF2, 1}}, -1}},
      {"l", {{{kE1, 1}, {kE1, 1}, {kET, 1}, {kF1, 1}}, -1}},
      {"n", {{{kE1, 2}, {kET, 2}}, -1}},
      {"k", {{{kE1, 1}, {kE1, 1}, {kE2, 2}}, -1}},
      {"g", {{{kE1, 1}, {kE1, 2}, {kE2, 1}}, -1}},
      {"p", {{{kET, 1}, {kET, 1}, {kF2, 2}}, -1}},
      {"q", {{{kE1, 1}, {kET, 1}, {kET, 1}, {kFT, 1}}, -1}},
      {"m", {{{kE1, 1}, {kET, 3}}, -1}},
      {"r", {{{kE1, 3}, {kET, 1}}, -1}},
  };
  return table;
}

const Family& family(const std::string& name) {
  auto it = family_table().find(name);
  if (it == family_table().end()) throw std::invalid_argument("unknown coefficient family '" + name + "'");
  return it->second;
}

void require_sl3(const VacuumModule& module) {
  if (module.n() != 3) throw std::invalid_argument("the coefficient ansatz is defined for sl_3 only");
}

}  // namespace

Rational CoefficientReport::get(const std::string& name, int i) const {
  auto it = families.find(name);
  if (it == families.end()) throw std::invalid_argument("unknown coefficient family '" + name + "'");
  if (i < 0 || i >= static_cast<int>(it->second.size())) return 0;
  return it->second[i];
}

const std::vector<std::string>& ansatz_families() {
  static const std::vector<std::string> names{"a", "x", "y", "b", "c", "d", "z", "l",
                                              "n", "k", "g", "p", "q", "m", "r"};
  return names;
}

int ansatz_top_index(const std::string& name, int m) { return 6 * m + family(name).h_offset; }

Monomial ansatz_monomial(const VacuumModule& module, const std::string& name, int i, int m) {
  require_sl3(module);
  const Family& fam = family(name);
  const int degree = 6 * m + fam.h_offset;
  if (i < 0 || i > degree) throw std::out_of_range("ansatz index out of range");
  std::vector<std::pair<BasisElement, int>> factors;
  for (const auto& f : fam.factors) factors.emplace_back(f.b, f.depth);
  for (int t = 0; t < i; ++t) factors.emplace_back(BasisElement::h(1), 1);
  for (int t = 0; t < degree - i; ++t) factors.emplace_back(BasisElement::h(2), 1);
  return module.make_monomial(factors);
}

CoefficientReport coefficient_report(const VacuumModule& module, const PBWVector& v, int m) {
  require_sl3(module);
  if (m < 0) throw std::invalid_argument("m must be nonnegative");
  CoefficientReport report;
  report.m = m;
  report.residual = v;
  for (const auto& name : ansatz_families()) {
    std::vector<Rational> values;
    for (int i = 0; i <= ansatz_top_index(name, m); ++i) {
      Monomial mono = ansatz_monomial(module, name, i, m);
      Rational c = v.coeff(mono);
      values.push_back(c);
      report.residual.add(mono, -c);
    }
    report.families[name] = std::move(values);
  }
  return report;
}

PBWVector normalize(const VacuumModule& module, const PBWVector& v, int m) {
  Rational lead = v.coeff(ansatz_monomial(module, "a", 2 * m, m));
  if (lead == 0) throw std::domain_error("coefficient a_{2m} vanishes; cannot normalize");
  return (1 / lead) * v;
}

bool residual_in_v1(const CoefficientReport& report) {
  const int bound = 6 * report.m - 2;
  for (const auto& [mono, c] : report.residual.terms()) {
    int degree = 0;
    bool deep = false;
    for (ModeCode code : mono) {
      // Cartan basis indices of sl_3 are 6 and 7.
      if (code_basis(code) < 6) continue;
      ++degree;
      if (code_depth(code) > 1) deep = true;
    }
    if (degree > bound && !deep) return false;
  }
  return true;
}

std::vector<RelationCheck> coefficient_relations(const CoefficientReport& r) {
  const int m = r.m;
  const int top = 6 * m;
  const Rational kappa = Rational(-4) + Rational(2) / Rational(2 * m + 1);
  auto a = [&](int i) { return r.get("a", i); };
  auto x = [&](int i) { return r.get("x", i); };
  auto y = [&](int i) { return r.get("y", i); };
  auto b = [&](int i) { return r.get("b", i); };
  auto c = [&](int i) { return r.get("c", i); };
  auto z = [&](int i) { return r.get("z", i); };
  auto l = [&](int i) { return r.get("l", i); };
  auto q = [&](int i) { return r.get("q", i); };

  std::vector<RelationCheck> out;
  auto push = [&](const char* name, int i, Rational value) { out.push_back({name, i, std::move(value)}); };

  for (int i = 0; i <= top; ++i) push("a_minus_y", i, a(i) - y(i));
  push("a_top_vanishes", top + 1, a(top + 1));
  for (int i = 0; i <= top; ++i)
    push("e_alpha1_chain", i, -2 * (i + 1) * a(i + 1) + (top + 1 - i) * a(i) + x(i) + l(i - 1));
  for (int i = 0; i <= top - 1; ++i)
    push("e_alpha2_chain", i, (i + 1) * a(i + 1) - 2 * (top + 1 - i) * a(i) - 2 * x(i) + z(i));
  push("e_alpha2_top", top, (top + 1) * a(top + 1) - 2 * a(top) - 2 * x(top));
  for (int i = 0; i <= top; ++i) push("f_alpha1_b_chain", i, kappa * a(i) + 2 * y(i) - b(i - 1));
  push("f_alpha1_b_top", top + 1, kappa * a(top + 1) - b(top));
  push("f_alpha1_b_bottom", 0, kappa * a(0) + 2 * y(0));
  for (int i = 0; i <= top; ++i) push("f_theta_c_chain", i, kappa * a(i) - 2 * x(i) - c(i - 1) - c(i));
  push("a_bottom_vanishes", 0, a(0));
  push("y_bottom_vanishes", 0, y(0));
  for (int i = 0; i <= top; ++i) push("a_plus_x", i, a(i) + x(i));
  for (int i = 0; i <= top; ++i) push("q_chain", i, -(i + 1) * a(i + 1) - (top - i) * a(i) + q(i) + q(i - 1));
  return out;
}

}  // namespace affvoa
