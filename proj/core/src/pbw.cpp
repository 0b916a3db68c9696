#include "affvoa/pbw.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "affvoa/linalg.hpp"

namespace affvoa {

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (ModeCode c : m) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h ^ m.size();
}

PBWVector PBWVector::vacuum() { return monomial({}); }

PBWVector PBWVector::monomial(Monomial m, const Rational& c) {
  PBWVector v;
  v.add(m, c);
  return v;
}

Rational PBWVector::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void PBWVector::add(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void PBWVector::add_scaled(const PBWVector& v, const Rational& c) {
  if (c == 0) return;
  for (const auto& [m, x] : v.terms_) add(m, c * x);
}

PBWVector& PBWVector::operator+=(const PBWVector& o) {
  for (const auto& [m, x] : o.terms_) add(m, x);
  return *this;
}

PBWVector& PBWVector::operator-=(const PBWVector& o) {
  for (const auto& [m, x] : o.terms_) add(m, -x);
  return *this;
}

PBWVector& PBWVector::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

VacuumModule::VacuumModule(int n, Rational level) : g_(n), level_(std::move(level)) {
  if (g_.dim() * kMaxModeDepth > 65535) throw std::invalid_argument("rank too large for 16-bit mode codes");
}

int VacuumModule::depth(const Monomial& m) {
  int d = 0;
  for (ModeCode c : m) d += code_depth(c);
  return d;
}

int VacuumModule::li_depth(const Monomial& m) {
  int d = 0;
  for (ModeCode c : m) d += code_depth(c) - 1;
  return d;
}

std::vector<int> VacuumModule::weight(const Monomial& m) const {
  std::vector<int> w(n() - 1, 0);
  for (ModeCode c : m) {
    const auto& wb = g_.weight(code_basis(c));
    for (std::size_t i = 0; i < w.size(); ++i) w[i] += wb[i];
  }
  return w;
}

const std::vector<Monomial>& VacuumModule::weight_space_basis(int d, const std::vector<int>& mu) {
  if (d < 0) throw std::invalid_argument("negative depth");
  if (static_cast<int>(mu.size()) != n() - 1) throw std::invalid_argument("weight must have n-1 coordinates");
  auto key = std::make_pair(d, mu);
  if (auto it = basis_cache_.find(key); it != basis_cache_.end()) return it->second;

  std::vector<ModeCode> codes;
  for (int b = 0; b < g_.dim(); ++b)
    for (int j = 1; j <= d; ++j) codes.push_back(mode_code(b, j));

  std::vector<Monomial> out;
  Monomial current;
  std::vector<int> need = mu;
  // Every factor moves each root coordinate by at most 1 per unit of depth.
  std::function<void(std::size_t, int)> dfs = [&](std::size_t start, int remaining) {
    for (int x : need)
      if (std::abs(x) > remaining) return;
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (std::size_t i = start; i < codes.size(); ++i) {
      int j = code_depth(codes[i]);
      if (j > remaining) continue;
      const auto& wb = g_.weight(code_basis(codes[i]));
      for (std::size_t t = 0; t < need.size(); ++t) need[t] -= wb[t];
      current.push_back(codes[i]);
      dfs(i, remaining - j);
      current.pop_back();
      for (std::size_t t = 0; t < need.size(); ++t) need[t] += wb[t];
    }
  };
  dfs(0, d);
  return basis_cache_.emplace(key, std::move(out)).first->second;
}

int VacuumModule::index_in_weight_space(const Monomial& m) {
  auto key = std::make_pair(depth(m), weight(m));
  auto it = index_cache_.find(key);
  if (it == index_cache_.end()) {
    std::unordered_map<Monomial, int, MonomialHash> idx;
    const auto& basis = weight_space_basis(key.first, key.second);
    for (std::size_t i = 0; i < basis.size(); ++i) idx.emplace(basis[i], static_cast<int>(i));
    it = index_cache_.emplace(key, std::move(idx)).first;
  }
  auto jt = it->second.find(m);
  if (jt == it->second.end()) throw std::logic_error("monomial missing from its weight space");
  return jt->second;
}

const PBWVector& VacuumModule::create(ModeCode c, const Monomial& m) {
  Monomial key;
  key.reserve(m.size() + 1);
  key.push_back(c);
  key.insert(key.end(), m.begin(), m.end());
  if (auto it = create_cache_.find(key); it != create_cache_.end()) return it->second;

  PBWVector result;
  if (m.empty() || c <= m.front()) {
    result.add(key, Rational(1));
  } else {
    // c m0 R = m0 (c R) + [c, m0] R, where both modes are negative so no central term.
    const ModeCode m0 = m.front();
    const Monomial rest(m.begin() + 1, m.end());
    const PBWVector& inner = create(c, rest);
    for (const auto& [x, coef] : inner.terms()) result.add_scaled(create(m0, x), coef);
    const int total = code_depth(c) + code_depth(m0);
    if (total > kMaxModeDepth) throw std::overflow_error("mode depth exceeds the code range");
    for (const auto& [t, s] : g_.bracket(code_basis(c), code_basis(m0)))
      result.add_scaled(create(mode_code(t, total), rest), Rational(s));
  }
  return create_cache_.emplace(std::move(key), std::move(result)).first->second;
}

const PBWVector& VacuumModule::annihilate(int basis, int mode, const Monomial& m) {
  static const PBWVector zero;
  if (m.empty() || mode > depth(m)) return zero;
  Monomial key;
  key.reserve(m.size() + 2);
  key.push_back(static_cast<ModeCode>(basis));
  key.push_back(static_cast<ModeCode>(mode));
  key.insert(key.end(), m.begin(), m.end());
  if (auto it = annihilate_cache_.find(key); it != annihilate_cache_.end()) return it->second;

  // x(p) y1(-m1) R = y1(-m1) x(p) R + [x,y1](p-m1) R + p (x|y1) delta_{p,m1} k R.
  PBWVector result;
  const ModeCode y1 = m.front();
  const int yb = code_basis(y1);
  const int m1 = code_depth(y1);
  const Monomial rest(m.begin() + 1, m.end());
  const PBWVector& inner = annihilate(basis, mode, rest);
  for (const auto& [x, coef] : inner.terms()) result.add_scaled(create(y1, x), coef);
  const int shifted = mode - m1;
  for (const auto& [t, s] : g_.bracket(basis, yb)) {
    if (shifted < 0) result.add_scaled(create(mode_code(t, -shifted), rest), Rational(s));
    else result.add_scaled(annihilate(t, shifted, rest), Rational(s));
  }
  if (mode == m1) {
    if (long f = g_.form(basis, yb)) result.add(rest, Rational(mode * f) * level_);
  }
  return annihilate_cache_.emplace(std::move(key), std::move(result)).first->second;
}

PBWVector VacuumModule::apply_mode(int basis, int mode, const PBWVector& v) {
  if (basis < 0 || basis >= g_.dim()) throw std::out_of_range("basis index out of range");
  PBWVector out;
  for (const auto& [m, c] : v.terms()) {
    if (mode < 0) out.add_scaled(create(mode_code(basis, -mode), m), c);
    else out.add_scaled(annihilate(basis, mode, m), c);
  }
  return out;
}

PBWVector VacuumModule::apply_mode(const LieElement& x, int mode, const PBWVector& v) {
  if (x.n() != n()) throw std::invalid_argument("Lie element rank does not match the module");
  PBWVector out;
  for (const auto& [b, c] : x.coeffs()) out.add_scaled(apply_mode(b, mode, v), c);
  return out;
}

bool VacuumModule::is_singular(const PBWVector& v, int max_mode) {
  for (int b = 0; b < g_.dim(); ++b)
    for (int p = 1; p <= max_mode; ++p)
      if (!apply_mode(b, p, v).is_zero()) return false;
  for (int b = 0; b < g_.num_positive_roots(); ++b)
    if (!apply_mode(b, 0, v).is_zero()) return false;
  return true;
}

std::vector<PBWVector> VacuumModule::singular_vectors(int d, const std::vector<int>& mu) {
  const auto& basis = weight_space_basis(d, mu);
  std::vector<std::pair<int, int>> ops;
  for (int i = 1; i < n(); ++i) ops.emplace_back(g_.e_simple(i), 0);
  ops.emplace_back(g_.f_theta(), 1);

  SparseSystem system;
  system.cols = static_cast<int>(basis.size());
  for (const auto& [b, mode] : ops) {
    std::map<Monomial, std::map<int, Rational>> rows;
    for (std::size_t j = 0; j < basis.size(); ++j)
      for (const auto& [target, c] : annihilate(b, mode, basis[j]).terms()) rows[target][static_cast<int>(j)] += c;
    for (auto& [target, row] : rows) system.add_row(row);
  }
  Nullspace kernel = nullspace(system);

  std::vector<PBWVector> out;
  for (const auto& x : kernel.basis) {
    PBWVector v;
    for (std::size_t j = 0; j < basis.size(); ++j) v.add(basis[j], x[j]);
    if (!is_singular(v, d)) throw std::logic_error("solved vector is not annihilated by all positive modes");
    out.push_back(std::move(v));
  }
  return out;
}

PBWVector VacuumModule::sugawara_L0(const PBWVector& v) {
  Rational shifted = level_ + n();
  if (shifted == 0) throw std::domain_error("Sugawara construction undefined at the critical level");
  int top = 0;
  for (const auto& [m, c] : v.terms()) top = std::max(top, depth(m));
  PBWVector sum;
  for (const auto& [x, xd] : dual_basis(g_)) {
    sum += apply_mode(x, 0, apply_mode(xd, 0, v));
    for (int p = 1; p <= top; ++p) sum.add_scaled(apply_mode(x, -p, apply_mode(xd, p, v)), Rational(2));
  }
  sum *= 1 / (2 * shifted);
  return sum;
}

std::string VacuumModule::to_string(const Monomial& m) const {
  if (m.empty()) return "1";
  std::ostringstream out;
  for (std::size_t i = 0; i < m.size();) {
    std::size_t j = i;
    while (j < m.size() && m[j] == m[i]) ++j;
    if (i) out << ' ';
    out << g_.basis(code_basis(m[i])).to_string() << "(-" << code_depth(m[i]) << ")";
    if (j - i > 1) out << '^' << (j - i);
    i = j;
  }
  return out.str();
}

Monomial VacuumModule::parse_monomial(const std::string& text) const {
  Monomial m;
  std::istringstream in(text);
  std::string token;
  bool saw_one = false;
  while (in >> token) {
    if (token == "1") {
      saw_one = true;
      continue;
    }
    auto close = token.find(']');
    auto open = token.find('(', close);
    auto end = token.find(')', open);
    if (close == std::string::npos || open != close + 1 || end == std::string::npos)
      throw std::invalid_argument("bad monomial factor '" + token + "'");
    int basis = g_.index_of(parse_basis_element(token.substr(0, close + 1)));
    int mode = std::stoi(token.substr(open + 1, end - open - 1));
    if (mode >= 0) throw std::invalid_argument("monomial factors must carry negative modes");
    int power = 1;
    if (end + 1 < token.size()) {
      if (token[end + 1] != '^') throw std::invalid_argument("bad monomial factor '" + token + "'");
      power = std::stoi(token.substr(end + 2));
    }
    for (int i = 0; i < power; ++i) m.push_back(mode_code(basis, -mode));
  }
  if (saw_one && !m.empty()) throw std::invalid_argument("vacuum symbol mixed with factors");
  std::sort(m.begin(), m.end());
  return m;
}

std::vector<std::pair<std::string, std::string>> VacuumModule::serialize(const PBWVector& v) const {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [m, c] : v.terms()) out.emplace_back(to_string(m), affvoa::to_string(c));
  return out;
}

PBWVector VacuumModule::deserialize(const std::vector<std::pair<std::string, std::string>>& pairs) const {
  PBWVector v;
  for (const auto& [m, c] : pairs) v.add(parse_monomial(m), parse_rational(c));
  return v;
}

Monomial VacuumModule::make_monomial(const std::vector<std::pair<BasisElement, int>>& factors) const {
  Monomial m;
  for (const auto& [b, d] : factors) {
    if (d < 1 || d > kMaxModeDepth) throw std::invalid_argument("mode depth out of range");
    m.push_back(mode_code(g_.index_of(b), d));
  }
  std::sort(m.begin(), m.end());
  return m;
}

Rational central_charge(const Rational& k, int n) {
  Rational shifted = k + n;
  if (shifted == 0) throw std::domain_error("central charge undefined at the critical level");
  return k * (n * n - 1) / shifted;
}

long long vacuum_depth_dimension(int n, int d) {
  const int colors = n * n - 1;
  std::vector<long long> series(d + 1, 0);
  series[0] = 1;
  for (int j = 1; j <= d; ++j)
    for (int c = 0; c < colors; ++c)
      for (int t = j; t <= d; ++t) series[t] += series[t - j];
  return series[d];
}

IdealTower::IdealTower(VacuumModule& module, std::vector<PBWVector> generators)
    : module_(module), generators_(std::move(generators)) {
  for (const auto& v : generators_) {
    if (v.is_zero()) throw std::invalid_argument("zero generator");
    const Monomial& first = v.terms().begin()->first;
    int d = VacuumModule::depth(first);
    auto w = module_.weight(first);
    for (const auto& [m, c] : v.terms())
      if (VacuumModule::depth(m) != d || module_.weight(m) != w)
        throw std::invalid_argument("ideal generators must be homogeneous");
    if (!module_.is_singular(v, d)) throw std::invalid_argument("ideal generators must be singular vectors");
    generator_depths_.push_back(d);
  }
}

const IdealTower::Slices& IdealTower::level(int d) {
  if (auto it = levels_.find(d); it != levels_.end()) return it->second;
  Slices out;
  std::map<std::vector<int>, EchelonBasis> echelon;
  auto add = [&](PBWVector v) -> bool {
    if (v.is_zero()) return false;
    std::vector<int> w = module_.weight(v.terms().begin()->first);
    std::map<int, Rational> coords;
    for (const auto& [m, c] : v.terms()) coords.emplace(module_.index_in_weight_space(m), c);
    if (!echelon[w].insert(std::move(coords))) return false;
    out[w].push_back(std::move(v));
    return true;
  };

  const SlN& g = module_.g();
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generator_depths_[i] != d) continue;
    std::deque<PBWVector> queue;
    if (add(generators_[i])) queue.push_back(generators_[i]);
    while (!queue.empty()) {
      PBWVector v = std::move(queue.front());
      queue.pop_front();
      for (int b = 0; b < 2 * g.num_positive_roots(); ++b) {
        PBWVector w = module_.apply_mode(b, 0, v);
        if (add(w)) queue.push_back(std::move(w));
      }
    }
  }
  for (int p = 1; p <= d; ++p) {
    const Slices& lower = level(d - p);
    for (const auto& [w, vecs] : lower)
      for (const auto& v : vecs)
        for (int b = 0; b < g.dim(); ++b) add(module_.apply_mode(b, -p, v));
  }
  return levels_.emplace(d, std::move(out)).first->second;
}

const std::vector<PBWVector>& IdealTower::slice(int d, const std::vector<int>& mu) {
  static const std::vector<PBWVector> empty;
  const Slices& s = level(d);
  auto it = s.find(mu);
  return it == s.end() ? empty : it->second;
}

int IdealTower::quotient_dimension(int d, const std::vector<int>& mu) {
  return static_cast<int>(module_.weight_space_basis(d, mu).size()) - dimension(d, mu);
}

ParamPoly cartan_part(const VacuumModule& module, const PBWVector& v) {
  const SlN& g = module.g();
  std::vector<std::string> names;
  for (int i = 1; i < g.n(); ++i) names.push_back("h" + std::to_string(i));
  VarsPtr vars = make_vars(names);
  ParamPoly p(vars);
  for (const auto& [m, c] : v.terms()) {
    Exponents e(names.size(), 0);
    bool pure = true;
    for (ModeCode code : m) {
      const auto& b = g.basis(code_basis(code));
      if (b.kind != BasisElement::Kind::H || code_depth(code) != 1) {
        pure = false;
        break;
      }
      e[b.i - 1] += 1;
    }
    if (pure) p.add_term(e, c);
  }
  return p;
}

}  // namespace affvoa
