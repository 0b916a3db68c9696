#include "affvoa/characters.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace affvoa {
namespace {

// Weights are handled in doubled simple-root coordinates so that rho (half-integral for
// even n) stays integral. The Weyl group S_n acts on the matching doubled epsilon coordinates.
std::vector<long> doubled_rho(int n) {
  std::vector<long> r(n - 1);
  for (int i = 1; i < n; ++i) r[i - 1] = static_cast<long>(i) * (n - i);
  return r;
}

std::vector<long> to_epsilon(const std::vector<long>& c) {
  const std::size_t n = c.size() + 1;
  std::vector<long> e(n);
  for (std::size_t j = 0; j < n; ++j) e[j] = (j < c.size() ? c[j] : 0) - (j > 0 ? c[j - 1] : 0);
  return e;
}

std::vector<long> from_epsilon(const std::vector<long>& e) {
  std::vector<long> c(e.size() - 1);
  long s = 0;
  for (std::size_t i = 0; i + 1 < e.size(); ++i) c[i] = s += e[i];
  return c;
}

int permutation_sign(const std::vector<int>& p) {
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) sign = -sign;
  return sign;
}

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// w(lambda + rho) - rho in ordinary root coordinates.
std::vector<int> dot_action(const std::vector<int>& perm, const std::vector<int>& lambda) {
  const int n = static_cast<int>(perm.size());
  auto rho2 = doubled_rho(n);
  std::vector<long> lr(n - 1);
  for (int i = 0; i < n - 1; ++i) lr[i] = 2L * lambda[i] + rho2[i];
  auto e = to_epsilon(lr);
  std::vector<long> we(n);
  for (int j = 0; j < n; ++j) we[j] = e[perm[j]];
  auto c = from_epsilon(we);
  std::vector<int> out(n - 1);
  for (int i = 0; i < n - 1; ++i) {
    long v = c[i] - rho2[i];
    if (v % 2 != 0) throw std::logic_error("dot action left the root lattice");
    out[i] = static_cast<int>(v / 2);
  }
  return out;
}

// Kostant partition function of sl_n on the box [0, extent].
class PartitionTable {
 public:
  PartitionTable(int n, std::vector<int> extent) : extent_(std::move(extent)) {
    std::size_t size = 1;
    for (int e : extent_) size *= static_cast<std::size_t>(e + 1);
    values_.assign(size, 0);
    values_[0] = 1;
    for (int i = 1; i < n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        std::vector<int> root(n - 1, 0);
        for (int l = i; l < j; ++l) root[l - 1] = 1;
        // Unbounded knapsack: ascending index order reuses the root any number of times.
        std::vector<int> c(n - 1, 0);
        for (std::size_t idx = 0; idx < values_.size(); ++idx) {
          decode(idx, c);
          bool ok = true;
          for (int t = 0; t < n - 1; ++t) ok = ok && c[t] >= root[t];
          if (!ok) continue;
          for (int t = 0; t < n - 1; ++t) c[t] -= root[t];
          values_[idx] += values_[encode(c)];
        }
      }
  }

  long long operator()(const std::vector<int>& beta) const {
    for (std::size_t t = 0; t < beta.size(); ++t) {
      if (beta[t] < 0) return 0;
      if (beta[t] > extent_[t]) throw std::logic_error("partition box too small");
    }
    return values_[encode(beta)];
  }

 private:
  std::size_t encode(const std::vector<int>& c) const {
    std::size_t idx = 0;
    for (std::size_t t = 0; t < c.size(); ++t) idx = idx * (extent_[t] + 1) + c[t];
    return idx;
  }
  void decode(std::size_t idx, std::vector<int>& c) const {
    for (std::size_t t = c.size(); t-- > 0;) {
      c[t] = static_cast<int>(idx % (extent_[t] + 1));
      idx /= (extent_[t] + 1);
    }
  }

  std::vector<int> extent_;
  std::vector<long long> values_;
};

std::vector<int> add(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

bool in_window(const CharacterTable& t, const std::vector<int>& mu) {
  return t.window.empty() || std::find(t.window.begin(), t.window.end(), mu) != t.window.end();
}

}  // namespace

long long CharacterTable::at(int d, const std::vector<int>& mu) const {
  auto it = entries.find({d, mu});
  return it == entries.end() ? 0 : it->second;
}

std::string CharacterTable::to_text() const {
  std::ostringstream out;
  for (const auto& [key, value] : entries) {
    out << key.first;
    for (int c : key.second) out << ' ' << c;
    out << ' ' << value << '\n';
  }
  return out.str();
}

std::optional<int> level_denominator(const Rational& k, int n) {
  Rational shifted = k + n;
  if (shifted <= 0) return std::nullopt;
  Rational q = Rational(n - 1) / shifted;
  if (!is_integer(q)) return std::nullopt;
  long qi = q.get_num().get_si();
  if (std::gcd(qi, static_cast<long>(n - 1)) != 1) return std::nullopt;
  return static_cast<int>(qi);
}

int gamma_coordinate_bound(int n, int q, int D) {
  const double rho = std::sqrt(n * (static_cast<double>(n) * n - 1) / 12.0);
  const double r = (rho + std::sqrt(rho * rho + 2.0 * (n - 1) * D / q)) / (n - 1);
  return static_cast<int>(std::floor(r * std::sqrt(n) / 2.0)) + 1;
}

namespace {

struct GammaTerm {
  std::vector<int> gamma;
  int depth;
};

std::vector<GammaTerm> translation_terms(const Rational& k, int n, int D) {
  auto q = level_denominator(k, n);
  if (!q) throw std::invalid_argument("level " + to_string(k) + " is not of the form -n + (n-1)/q");
  const int bound = gamma_coordinate_bound(n, *q, D);
  AffineWeight rho = AffineWeight::finite(n, AffineWeight::rho_hat(n).alpha_coeffs());
  std::vector<GammaTerm> out;
  std::vector<int> gamma(n - 1, -bound);
  gamma.front() = 0;
  gamma.back() = 0;
  while (true) {
    std::vector<Rational> coords(gamma.begin(), gamma.end());
    AffineWeight g = AffineWeight::finite(n, coords);
    Rational depth = *q * pair(rho, g) + Rational(n - 1) * *q * pair(g, g) / 2;
    if (!is_integer(depth)) throw std::logic_error("non-integral translation depth");
    if (depth <= D) {
      if (depth < 0) throw std::logic_error("negative translation depth");
      out.push_back({gamma, static_cast<int>(depth.get_num().get_si())});
    }
    // Odometer over the box; the first and last coordinates start at 0.
    std::size_t i = 0;
    for (; i < gamma.size(); ++i) {
      if (gamma[i] < bound) {
        ++gamma[i];
        break;
      }
      gamma[i] = (i == 0 || i + 1 == gamma.size()) ? 0 : -bound;
    }
    if (i == gamma.size()) break;
  }
  return out;
}

}  // namespace

std::vector<NumeratorTerm> numerator_terms(const Rational& k, int n, int D) {
  std::vector<NumeratorTerm> out;
  for (const auto& t : translation_terms(k, n, D)) {
    std::vector<int> top(n - 1);
    for (int i = 0; i < n - 1; ++i) top[i] = (n - 1) * t.gamma[i];
    for (const auto& w : all_permutations(n)) {
      auto fin = dot_action(w, top);
      AffineWeight weight(n, k, Rational(-t.depth), std::vector<Rational>(fin.begin(), fin.end()));
      out.push_back({permutation_sign(w), weight, t.gamma, w, t.depth});
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const NumeratorTerm& a, const NumeratorTerm& b) { return a.depth < b.depth; });
  return out;
}

std::map<std::vector<int>, long long> finite_character(int n, const std::vector<int>& lambda) {
  auto perms = all_permutations(n);
  std::vector<std::vector<int>> tops;
  std::vector<int> lo(n - 1, 0), hi(n - 1, 0);
  for (std::size_t p = 0; p < perms.size(); ++p) {
    tops.push_back(dot_action(perms[p], lambda));
    for (int i = 0; i < n - 1; ++i) {
      lo[i] = p ? std::min(lo[i], tops.back()[i]) : tops.back()[i];
      hi[i] = p ? std::max(hi[i], tops.back()[i]) : tops.back()[i];
    }
  }
  std::vector<int> extent(n - 1);
  for (int i = 0; i < n - 1; ++i) extent[i] = hi[i] - lo[i];
  PartitionTable partitions(n, extent);

  std::map<std::vector<int>, long long> out;
  std::vector<int> mu = lo;
  while (true) {
    long long m = 0;
    for (std::size_t p = 0; p < perms.size(); ++p) {
      std::vector<int> beta(n - 1);
      for (int i = 0; i < n - 1; ++i) beta[i] = tops[p][i] - mu[i];
      m += permutation_sign(perms[p]) * partitions(beta);
    }
    if (m != 0) out[mu] = m;
    std::size_t i = 0;
    for (; i < mu.size(); ++i) {
      if (mu[i] < hi[i]) {
        ++mu[i];
        break;
      }
      mu[i] = lo[i];
    }
    if (i == mu.size()) break;
  }
  return out;
}

CharacterTable vacuum_table(int n, const Rational& k, int D) {
  SlN g(n);
  std::vector<std::map<std::vector<int>, long long>> series(D + 1);
  series[0][std::vector<int>(n - 1, 0)] = 1;
  for (int b = 0; b < g.dim(); ++b)
    for (int j = 1; j <= D; ++j)
      for (int d = j; d <= D; ++d)
        for (const auto& [mu, c] : series[d - j]) series[d][add(mu, g.weight(b))] += c;
  CharacterTable t{n, k, D, {}, {}};
  for (int d = 0; d <= D; ++d)
    for (const auto& [mu, c] : series[d]) t.entries[{d, mu}] = c;
  return t;
}

CharacterTable character_table(const Rational& k, int n, int D) {
  CharacterTable vac = vacuum_table(n, k, D);
  std::map<std::pair<int, std::vector<int>>, long long> sum;
  for (const auto& t : translation_terms(k, n, D)) {
    std::vector<int> top(n - 1);
    for (int i = 0; i < n - 1; ++i) top[i] = (n - 1) * t.gamma[i];
    for (const auto& [nu, mult] : finite_character(n, top))
      for (const auto& [key, dim] : vac.entries) {
        if (key.first + t.depth > D) continue;
        sum[{key.first + t.depth, add(key.second, nu)}] += mult * dim;
      }
  }
  CharacterTable out{n, k, D, {}, {}};
  for (const auto& [key, value] : sum) {
    if (value < 0) throw std::logic_error("negative multiplicity in the character formula");
    if (value != 0) out.entries[key] = value;
  }
  return out;
}

CharacterTable brute_force_character(VacuumModule& module, const std::vector<PBWVector>& gens, int D,
                                     const std::vector<std::vector<int>>& window) {
  const int n = module.n();
  CharacterTable vac = vacuum_table(n, module.level(), D);
  IdealTower tower(module, gens);
  CharacterTable out{n, module.level(), D, {}, window};
  for (const auto& [key, dim] : vac.entries) {
    if (!in_window(out, key.second)) continue;
    long long q = dim - tower.dimension(key.first, key.second);
    if (q != 0) out.entries[key] = q;
  }
  return out;
}

std::vector<CharacterDiffEntry> compare(const CharacterTable& a, const CharacterTable& b) {
  if (a.n != b.n) throw std::invalid_argument("character tables of different rank");
  const int depth = std::min(a.depth, b.depth);
  std::set<std::pair<int, std::vector<int>>> keys;
  for (const auto& [k, v] : a.entries) keys.insert(k);
  for (const auto& [k, v] : b.entries) keys.insert(k);
  std::vector<CharacterDiffEntry> out;
  for (const auto& key : keys) {
    if (key.first > depth || !in_window(a, key.second) || !in_window(b, key.second)) continue;
    long long x = a.at(key.first, key.second), y = b.at(key.first, key.second);
    if (x != y) out.push_back({key.first, key.second, x, y});
  }
  return out;
}

}  // namespace affvoa
