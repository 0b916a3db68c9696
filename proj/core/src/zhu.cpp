#include "affvoa/zhu.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "affvoa/linalg.hpp"

namespace affvoa {

void EnvelopingElement::add(const Word& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

void EnvelopingElement::add_scaled(const EnvelopingElement& o, const Rational& c) {
  if (c == 0) return;
  for (const auto& [w, x] : o.terms) add(w, c * x);
}

int EnvelopingElement::degree() const {
  int d = 0;
  for (const auto& [w, c] : terms) d = std::max(d, static_cast<int>(w.size()));
  return d;
}

EnvelopingAlgebra::EnvelopingAlgebra(int n) : g_(n), order_(g_.dim()) {
  const int pos = g_.num_positive_roots();
  for (int b = 0; b < g_.dim(); ++b) {
    if (b < pos) order_[b] = b + g_.dim() - pos;  // E's last
    else if (b < 2 * pos) order_[b] = b - pos;      // F's first
    else order_[b] = b - pos;                       // H's in the middle
  }
}

int EnvelopingAlgebra::order_key(int basis) const { return order_.at(basis); }

EnvelopingElement EnvelopingAlgebra::one() const {
  EnvelopingElement e;
  e.add({}, 1);
  return e;
}

EnvelopingElement EnvelopingAlgebra::generator(int basis) const {
  EnvelopingElement e;
  e.add({basis}, 1);
  return e;
}

const EnvelopingElement& EnvelopingAlgebra::left_multiply(int basis, const Word& w) {
  Monomial key;
  key.reserve(w.size() + 1);
  key.push_back(static_cast<ModeCode>(basis));
  for (int b : w) key.push_back(static_cast<ModeCode>(b));
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;

  EnvelopingElement result;
  if (w.empty() || order_key(basis) <= order_key(w.front())) {
    Word out{basis};
    out.insert(out.end(), w.begin(), w.end());
    result.add(out, 1);
  } else {
    const int w0 = w.front();
    const Word rest(w.begin() + 1, w.end());
    const EnvelopingElement& inner = left_multiply(basis, rest);
    for (const auto& [x, c] : inner.terms) result.add_scaled(left_multiply(w0, x), c);
    for (const auto& [t, s] : g_.bracket(basis, w0)) result.add_scaled(left_multiply(t, rest), Rational(s));
  }
  return cache_.emplace(std::move(key), std::move(result)).first->second;
}

EnvelopingElement EnvelopingAlgebra::multiply(const EnvelopingElement& a, const EnvelopingElement& b) {
  EnvelopingElement out;
  for (const auto& [wa, ca] : a.terms) {
    EnvelopingElement acc = b;
    for (auto it = wa.rbegin(); it != wa.rend(); ++it) {
      EnvelopingElement next;
      for (const auto& [w, c] : acc.terms) next.add_scaled(left_multiply(*it, w), c);
      acc = std::move(next);
    }
    out.add_scaled(acc, ca);
  }
  return out;
}

EnvelopingElement EnvelopingAlgebra::adjoint(int basis, const EnvelopingElement& u) {
  EnvelopingElement x = generator(basis);
  EnvelopingElement r = multiply(x, u);
  r.add_scaled(multiply(u, x), -1);
  return r;
}

std::vector<int> EnvelopingAlgebra::weight(const EnvelopingElement& u) const {
  if (u.is_zero()) throw std::invalid_argument("zero element has no weight");
  std::vector<int> first;
  for (const auto& [w, c] : u.terms) {
    std::vector<int> wt(g_.n() - 1, 0);
    for (int b : w)
      for (std::size_t i = 0; i < wt.size(); ++i) wt[i] += g_.weight(b)[i];
    if (first.empty()) first = wt;
    else if (wt != first) throw std::invalid_argument("element is not weight-homogeneous");
  }
  return first;
}

std::string EnvelopingAlgebra::to_string(const EnvelopingElement& u) const {
  if (u.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, c] : u.terms) {
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    first = false;
    Rational mag = abs(c);
    if (w.empty()) {
      out << affvoa::to_string(mag);
      continue;
    }
    if (mag != 1) out << affvoa::to_string(mag) << "*";
    for (std::size_t i = 0; i < w.size();) {
      std::size_t j = i;
      while (j < w.size() && w[j] == w[i]) ++j;
      if (i) out << ' ';
      out << g_.basis(w[i]).to_string();
      if (j - i > 1) out << '^' << (j - i);
      i = j;
    }
  }
  return out.str();
}

ZhuMap::ZhuMap(VacuumModule& module, EnvelopingAlgebra& algebra) : module_(module), algebra_(algebra) {
  if (module.n() != algebra.g().n()) throw std::invalid_argument("rank mismatch between module and algebra");
}

EnvelopingElement ZhuMap::image(const PBWVector& v) {
  EnvelopingElement out;
  for (const auto& [m, c] : v.terms()) out.add_scaled(image(m), c);
  return out;
}

EnvelopingElement ZhuMap::front_reduction(int basis, int depth, const PBWVector& w, bool deepest) {
  auto psi = [&](const PBWVector& v) {
    EnvelopingElement out;
    for (const auto& [m, c] : v.terms()) out.add_scaled(deepest ? deepest_first(m) : image(m), c);
    return out;
  };
  EnvelopingElement r = algebra_.multiply(algebra_.generator(basis), psi(w));
  r.add_scaled(psi(module_.apply_mode(basis, 0, w)), -1);
  if (depth % 2 == 0) {
    EnvelopingElement neg;
    neg.add_scaled(r, -1);
    return neg;
  }
  return r;
}

const EnvelopingElement& ZhuMap::image(const Monomial& m) {
  if (auto it = cache_.find(m); it != cache_.end()) return it->second;
  EnvelopingElement result;
  if (m.empty()) {
    result = algebra_.one();
  } else {
    PBWVector rest = PBWVector::monomial(Monomial(m.begin() + 1, m.end()));
    result = front_reduction(code_basis(m.front()), code_depth(m.front()), rest, false);
  }
  return cache_.emplace(m, std::move(result)).first->second;
}

const EnvelopingElement& ZhuMap::deepest_first(const Monomial& m) {
  if (auto it = deep_cache_.find(m); it != deep_cache_.end()) return it->second;
  EnvelopingElement result;
  if (m.empty()) {
    result = algebra_.one();
  } else {
    std::size_t j = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (code_depth(m[i]) >= code_depth(m[j])) j = i;
    Monomial rest = m;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(j));
    result = front_reduction(code_basis(m[j]), code_depth(m[j]), PBWVector::monomial(rest), true);
    // m = c(-n) rest - (c(-n) rest - m); the correction has one factor fewer.
    PBWVector correction = module_.create(m[j], rest);
    correction.add(m, -1);
    for (const auto& [x, c] : correction.terms()) result.add_scaled(deepest_first(x), -c);
  }
  return deep_cache_.emplace(m, std::move(result)).first->second;
}

EnvelopingElement ZhuMap::image_deepest_first(const PBWVector& v) {
  EnvelopingElement out;
  for (const auto& [m, c] : v.terms()) out.add_scaled(deepest_first(m), c);
  return out;
}

EnvelopingElement zhu_closed_form(const VacuumModule& module, EnvelopingAlgebra& algebra, const Monomial& m) {
  (void)module;
  EnvelopingElement out = algebra.one();
  int exponent = 0;
  for (ModeCode c : m) {
    out = algebra.multiply(algebra.generator(code_basis(c)), out);
    exponent += code_depth(c) - 1;
  }
  if (exponent % 2 != 0) {
    EnvelopingElement neg;
    neg.add_scaled(out, -1);
    return neg;
  }
  return out;
}

PBWVector star_current(VacuumModule& module, int x, const PBWVector& b) {
  return module.apply_mode(x, -1, b) + module.apply_mode(x, 0, b);
}

PBWVector star_pair(VacuumModule& module, int x, int y, const PBWVector& b) {
  int depth = 0;
  for (const auto& [m, c] : b.terms()) depth = std::max(depth, VacuumModule::depth(m));
  auto mode = [&](int n) {
    PBWVector out;
    for (int j = std::min(-1, n - 1 - depth); j < 0; ++j) out += module.apply_mode(x, j, module.apply_mode(y, n - 1 - j, b));
    for (int j = 0; j <= depth; ++j) out += module.apply_mode(y, n - 1 - j, module.apply_mode(x, j, b));
    return out;
  };
  PBWVector r = mode(-1);
  r.add_scaled(mode(0), 2);
  r += mode(1);
  return r;
}

ParamPoly hc_projection(const EnvelopingAlgebra& algebra, const EnvelopingElement& u) {
  const SlN& g = algebra.g();
  std::vector<std::string> names;
  for (int i = 1; i < g.n(); ++i) names.push_back("l" + std::to_string(i));
  ParamPoly p(make_vars(names));
  if (u.is_zero()) return p;
  auto wt = algebra.weight(u);
  if (std::any_of(wt.begin(), wt.end(), [](int c) { return c != 0; }))
    throw std::invalid_argument("Harish-Chandra projection needs a weight-zero element");
  for (const auto& [w, c] : u.terms) {
    Exponents e(names.size(), 0);
    bool cartan = true;
    for (int b : w) {
      const auto& be = g.basis(b);
      if (be.kind != BasisElement::Kind::H) {
        cartan = false;
        break;
      }
      e[be.i - 1] += 1;
    }
    if (cartan) p.add_term(e, c);
  }
  return p;
}

std::vector<EnvelopingElement> weight_zero_elements(EnvelopingAlgebra& algebra,
                                                    const std::vector<EnvelopingElement>& seeds, int cap) {
  const SlN& g = algebra.g();
  std::vector<EnvelopingElement> closure;
  std::map<Word, int> column;
  EchelonBasis echelon;
  auto add = [&](const EnvelopingElement& u) {
    if (u.is_zero()) return false;
    std::map<int, Rational> v;
    for (const auto& [w, c] : u.terms) {
      auto [it, inserted] = column.try_emplace(w, static_cast<int>(column.size()));
      v.emplace(it->second, c);
    }
    if (!echelon.insert(std::move(v))) return false;
    closure.push_back(u);
    return true;
  };
  std::deque<EnvelopingElement> queue;
  for (const auto& s : seeds)
    if (add(s)) queue.push_back(s);
  while (!queue.empty()) {
    EnvelopingElement u = std::move(queue.front());
    queue.pop_front();
    for (int b = 0; b < 2 * g.num_positive_roots(); ++b) {
      EnvelopingElement r = algebra.adjoint(b, u);
      if (add(r)) queue.push_back(std::move(r));
    }
  }

  std::vector<int> letters(g.dim());
  for (int b = 0; b < g.dim(); ++b) letters[b] = b;
  std::sort(letters.begin(), letters.end(), [&](int a, int b) { return algebra.order_key(a) < algebra.order_key(b); });

  std::vector<EnvelopingElement> out;
  for (const auto& r : closure) {
    const int budget = cap - r.degree();
    if (budget < 0) continue;
    std::vector<int> need = algebra.weight(r);
    for (int& c : need) c = -c;
    Word word;
    std::function<void(std::size_t, int)> dfs = [&](std::size_t start, int remaining) {
      if (std::all_of(need.begin(), need.end(), [](int c) { return c == 0; })) {
        EnvelopingElement m;
        m.add(word, 1);
        EnvelopingElement p = algebra.multiply(m, r);
        if (!p.is_zero()) out.push_back(std::move(p));
      }
      if (remaining == 0) return;
      for (std::size_t i = start; i < letters.size(); ++i) {
        const auto& wb = g.weight(letters[i]);
        for (std::size_t t = 0; t < need.size(); ++t) need[t] -= wb[t];
        bool feasible = true;
        for (int c : need) feasible = feasible && std::abs(c) <= remaining - 1;
        if (feasible) {
          word.push_back(letters[i]);
          dfs(i, remaining - 1);
          word.pop_back();
        }
        for (std::size_t t = 0; t < need.size(); ++t) need[t] += wb[t];
      }
    };
    dfs(0, budget);
  }
  return out;
}

std::vector<WeightFamily> conjectured_families(int m) {
  if (m < 0) throw std::invalid_argument("m must be nonnegative");
  VarsPtr vars = make_vars({"t"});
  ParamPoly t = ParamPoly::variable(vars, "t");
  std::vector<WeightFamily> out;
  for (int i = 0; i <= 2 * m; ++i) {
    Rational s = Rational(2 * i, 2 * m + 1);
    s.canonicalize();
    ParamPoly shift = ParamPoly::constant(vars, s);
    out.push_back({"t*L1 - s*L2", i, t, -shift});
    out.push_back({"t*L2 - s*L1", i, -shift, t});
    out.push_back({"t*L1 - (t+s+1)*L2", i, t, -(t + shift + ParamPoly::constant(vars, 1))});
  }
  return out;
}

bool CharacteristicVarietyReport::all_families_vanish() const {
  return std::all_of(families.begin(), families.end(), [](const FamilyVerdict& f) { return f.vanishes; });
}

bool CharacteristicVarietyReport::all_off_family_witnessed() const {
  return std::all_of(off_family.begin(), off_family.end(), [](const OffFamilyWitness& w) { return w.witness_index >= 0; });
}

CharacteristicVarietyReport characteristic_variety_test(const std::vector<ParamPoly>& polys, int m,
                                                        std::uint64_t seed, int samples) {
  CharacteristicVarietyReport report;
  report.m = m;
  auto families = conjectured_families(m);
  for (const auto& fam : families) {
    FamilyVerdict v{fam.name, fam.i, true, -1};
    for (std::size_t j = 0; j < polys.size(); ++j) {
      if (!polys[j].substitute({fam.l1, fam.l2}).is_zero()) {
        v.vanishes = false;
        v.witness_index = static_cast<int>(j);
        break;
      }
    }
    report.families.push_back(v);
  }

  Rng rng(seed);
  auto on_family = [&](const Rational& l1, const Rational& l2) {
    for (int i = 0; i <= 2 * m; ++i) {
      Rational s(2 * i, 2 * m + 1);
      s.canonicalize();
      if (l2 == -s || l1 == -s || l1 + l2 == -(s + 1)) return true;
    }
    return false;
  };
  for (int k = 0; k < samples; ++k) {
    Rational l1, l2;
    do {
      l1 = rng.rational(9, 4);
      l2 = rng.rational(9, 4);
    } while (on_family(l1, l2));
    OffFamilyWitness w{l1, l2, -1};
    for (std::size_t j = 0; j < polys.size(); ++j) {
      const auto& names = polys[j].vars()->names();
      if (polys[j].evaluate({{names.at(0), l1}, {names.at(1), l2}}) != 0) {
        w.witness_index = static_cast<int>(j);
        break;
      }
    }
    report.off_family.push_back(w);
  }
  return report;
}

}  // namespace affvoa
