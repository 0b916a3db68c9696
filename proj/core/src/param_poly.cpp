#include "affvoa/param_poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace affvoa {

VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (names_[i] == names_[j]) throw std::invalid_argument("duplicate parameter " + names_[i]);
}

std::size_t VarSet::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  throw std::out_of_range("undeclared parameter " + name);
}

bool VarSet::contains(const std::string& name) const {
  for (const auto& n : names_)
    if (n == name) return true;
  return false;
}

VarsPtr make_vars(std::vector<std::string> names) {
  return std::make_shared<const VarSet>(std::move(names));
}

bool GradedLexGreater::operator()(const Exponents& a, const Exponents& b) const {
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da > db;
  return a > b;
}

ParamPoly::ParamPoly(VarsPtr vars) : vars_(std::move(vars)) {
  if (!vars_) throw std::invalid_argument("ParamPoly needs a VarSet");
}

ParamPoly ParamPoly::constant(VarsPtr vars, const Rational& c) {
  ParamPoly p(std::move(vars));
  p.add_term(Exponents(p.vars_->size(), 0), c);
  return p;
}

ParamPoly ParamPoly::variable(VarsPtr vars, const std::string& name) {
  ParamPoly p(std::move(vars));
  Exponents e(p.vars_->size(), 0);
  e[p.vars_->index_of(name)] = 1;
  p.add_term(e, Rational(1));
  return p;
}

ParamPoly ParamPoly::monomial(VarsPtr vars, Exponents exps, const Rational& c) {
  ParamPoly p(std::move(vars));
  if (exps.size() != p.vars_->size()) throw std::invalid_argument("exponent length mismatch");
  p.add_term(exps, c);
  return p;
}

bool ParamPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  for (int e : terms_.begin()->first)
    if (e != 0) return false;
  return true;
}

Rational ParamPoly::constant_term() const {
  auto it = terms_.find(Exponents(vars_->size(), 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

int ParamPoly::total_degree() const {
  if (terms_.empty()) return -1;
  const auto& e = terms_.begin()->first;
  return std::accumulate(e.begin(), e.end(), 0);
}

int ParamPoly::degree_in(const std::string& name) const {
  std::size_t idx = vars_->index_of(name);
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[idx]);
  return d;
}

void ParamPoly::add_term(const Exponents& exps, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void ParamPoly::check_same(const ParamPoly& other) const {
  if (vars_ != other.vars_ && !(*vars_ == *other.vars_))
    throw std::invalid_argument("ParamPoly variable sets differ");
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& other) {
  check_same(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& other) {
  check_same(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

ParamPoly& ParamPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  a.check_same(b);
  ParamPoly r(a.vars_);
  Exponents e(a.vars_->size());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

bool ParamPoly::operator==(const ParamPoly& other) const {
  check_same(other);
  return terms_ == other.terms_;
}

ParamPoly ParamPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative power");
  ParamPoly result = constant(vars_, Rational(1));
  ParamPoly base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

ParamPoly ParamPoly::coefficient(const std::string& name, int power) const {
  std::size_t idx = vars_->index_of(name);
  ParamPoly r(vars_);
  for (const auto& [e, c] : terms_)
    if (e[idx] == power) {
      Exponents f = e;
      f[idx] = 0;
      r.add_term(f, c);
    }
  return r;
}

ParamPoly ParamPoly::derivative(const std::string& name) const {
  std::size_t idx = vars_->index_of(name);
  ParamPoly r(vars_);
  for (const auto& [e, c] : terms_)
    if (e[idx] > 0) {
      Exponents f = e;
      f[idx] -= 1;
      r.add_term(f, c * e[idx]);
    }
  return r;
}

namespace {

Rational rational_pow(const Rational& base, int e) {
  Rational r(1);
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

Rational ParamPoly::evaluate(const std::map<std::string, Rational>& point) const {
  std::vector<Rational> values(vars_->size());
  std::vector<bool> needed(vars_->size(), false);
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) needed[i] = true;
  for (std::size_t i = 0; i < vars_->size(); ++i) {
    if (!needed[i]) continue;
    auto it = point.find(vars_->names()[i]);
    if (it == point.end()) throw std::invalid_argument("no value for parameter " + vars_->names()[i]);
    values[i] = it->second;
  }
  Rational total(0);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) term *= rational_pow(values[i], e[i]);
    total += term;
  }
  return total;
}

ParamPoly ParamPoly::partial_evaluate(const std::map<std::string, Rational>& point) const {
  ParamPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    Rational coef = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      auto it = point.find(vars_->names()[i]);
      if (it != point.end() && e[i] > 0) {
        coef *= rational_pow(it->second, e[i]);
        f[i] = 0;
      }
    }
    r.add_term(f, coef);
  }
  return r;
}

ParamPoly ParamPoly::substitute(const std::vector<ParamPoly>& images) const {
  if (images.size() != vars_->size()) throw std::invalid_argument("substitute: image count mismatch");
  if (terms_.empty()) {
    if (images.empty()) throw std::invalid_argument("substitute: cannot infer target VarSet");
    return ParamPoly(images.front().vars());
  }
  if (images.empty()) return *this;
  const VarsPtr& target = images.front().vars();
  // Powers are cached per variable since symbols reuse them heavily.
  std::vector<std::vector<ParamPoly>> powers(images.size());
  auto power_of = [&](std::size_t i, int e) -> const ParamPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(ParamPoly::constant(target, Rational(1)));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  ParamPoly result(target);
  for (const auto& [e, c] : terms_) {
    ParamPoly term = ParamPoly::constant(target, c);
    for (std::size_t i = 0; i < e.size() && !term.is_zero(); ++i)
      if (e[i]) term = term * power_of(i, e[i]);
    result += term;
  }
  return result;
}

ParamPoly ParamPoly::embed(const VarsPtr& target) const {
  std::vector<std::size_t> map(vars_->size());
  for (std::size_t i = 0; i < vars_->size(); ++i) map[i] = target->index_of(vars_->names()[i]);
  ParamPoly r(target);
  for (const auto& [e, c] : terms_) {
    Exponents f(target->size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) f[map[i]] = e[i];
    r.add_term(f, c);
  }
  return r;
}

std::string ParamPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    bool unit_monomial = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (mag != 1 || unit_monomial) {
      out << mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) out << "*";
      out << vars_->names()[i];
      if (e[i] > 1) out << "^" << e[i];
      wrote = true;
    }
  }
  return out.str();
}

}  // namespace affvoa
