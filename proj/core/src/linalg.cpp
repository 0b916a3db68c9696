#include "affvoa/linalg.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace affvoa {

void SparseSystem::add_row(const std::map<int, Rational>& row) {
  SparseRow r;
  for (const auto& [c, v] : row) {
    if (c < 0 || c >= cols) throw std::out_of_range("column index outside the system");
    if (v != 0) r.emplace_back(c, v);
  }
  if (!r.empty()) rows.push_back(std::move(r));
}

bool SparseSystem::is_solution(const std::vector<Rational>& x) const {
  if (static_cast<int>(x.size()) != cols) return false;
  for (const auto& row : rows) {
    Rational s(0);
    for (const auto& [c, v] : row)
      if (x[c] != 0) s += v * x[c];
    if (s != 0) return false;
  }
  return true;
}

namespace {

using IntRow = std::vector<std::pair<int, Integer>>;

/// Scales a rational row to a primitive integer row with the same kernel.
IntRow primitive_integer_row(const SparseRow& row) {
  Integer lcm(1);
  for (const auto& [c, v] : row) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
  IntRow out;
  out.reserve(row.size());
  Integer g(0);
  for (const auto& [c, v] : row) {
    Integer x = v.get_num() * (lcm / v.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    out.emplace_back(c, std::move(x));
  }
  if (g > 1)
    for (auto& [c, x] : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return out;
}

void make_primitive(std::vector<Integer>& row) {
  Integer g(0);
  for (const auto& x : row)
    if (x != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1)
    for (auto& x : row)
      if (x != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

/// Reduced row echelon form of a small dense rational matrix, in place. Returns pivots.
std::vector<int> rref(std::vector<std::vector<Rational>>& m, int cols) {
  std::vector<int> pivots;
  std::size_t r = 0;
  for (int c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (int j = c; j < cols; ++j)
        if (m[r][j] != 0) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

}  // namespace

Nullspace nullspace_exact(const SparseSystem& system) {
  const int cols = system.cols;
  std::vector<std::vector<Integer>> a;
  a.reserve(system.rows.size());
  for (const auto& row : system.rows) {
    std::vector<Integer> dense(cols);
    for (auto& [c, v] : primitive_integer_row(row)) dense[c] = v;
    a.push_back(std::move(dense));
  }
  std::vector<int> pivot_cols;
  std::size_t r = 0;
  Integer t;
  for (int c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[r], a[p]);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      Integer f = a[i][c];
      const Integer& piv = a[r][c];
      for (int j = 0; j < cols; ++j) {
        if (a[i][j] == 0 && a[r][j] == 0) continue;
        a[i][j] *= piv;
        if (a[r][j] != 0) {
          t = f * a[r][j];
          a[i][j] -= t;
        }
      }
      make_primitive(a[i]);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Rational>> kernel;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(cols);
    x[f] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
      int c = pivot_cols[i];
      if (a[i][f] != 0) {
        Integer num = -a[i][f];
        x[c] = Rational(num, a[i][c]);
        x[c].canonicalize();
      }
    }
    kernel.push_back(std::move(x));
  }
  Nullspace out;
  out.leading_columns = rref(kernel, cols);
  out.basis = std::move(kernel);
  return out;
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

struct ModRow {
  std::vector<std::uint32_t> cols;
  std::vector<u64> vals;
};

struct ModKernel {
  int nullity = 0;
  std::vector<int> leading;
  std::vector<std::vector<u64>> basis;  // reduced echelon form
};

/// Sparse elimination mod p with a greedy sparsest-row / sparsest-column pivot rule.
ModKernel kernel_mod_p(const std::vector<IntRow>& int_rows, int cols, u64 p) {
  std::vector<ModRow> rows;
  rows.reserve(int_rows.size());
  for (const auto& ir : int_rows) {
    ModRow row;
    for (const auto& [c, v] : ir) {
      u64 x = mpz_fdiv_ui(v.get_mpz_t(), p);
      if (x) {
        row.cols.push_back(static_cast<std::uint32_t>(c));
        row.vals.push_back(x);
      }
    }
    rows.push_back(std::move(row));
  }
  const int nrows = static_cast<int>(rows.size());
  std::vector<std::vector<int>> col_rows(cols);
  for (int r = 0; r < nrows; ++r)
    for (auto c : rows[r].cols) col_rows[c].push_back(r);

  using Key = std::pair<std::size_t, int>;
  std::priority_queue<Key, std::vector<Key>, std::greater<>> heap;
  for (int r = 0; r < nrows; ++r) heap.emplace(rows[r].cols.size(), r);
  std::vector<char> alive(nrows, 1);
  std::vector<std::pair<int, int>> pivots;  // (row, column) in elimination order
  std::vector<char> col_done(cols, 0);

  ModRow scratch;
  while (!heap.empty()) {
    auto [len, r] = heap.top();
    heap.pop();
    if (!alive[r] || len != rows[r].cols.size()) continue;
    if (len == 0) {
      alive[r] = 0;
      continue;
    }
    ModRow& pr = rows[r];
    std::size_t best = 0;
    for (std::size_t i = 1; i < pr.cols.size(); ++i)
      if (col_rows[pr.cols[i]].size() < col_rows[pr.cols[best]].size()) best = i;
    const std::uint32_t c = pr.cols[best];
    u64 inv = invmod(pr.vals[best], p);
    for (auto& v : pr.vals) v = mulmod(v, inv, p);
    alive[r] = 0;
    pivots.emplace_back(r, static_cast<int>(c));
    col_done[c] = 1;

    std::vector<int> targets;
    targets.swap(col_rows[c]);
    for (int r2 : targets) {
      if (!alive[r2] || r2 == r) continue;
      ModRow& row2 = rows[r2];
      auto it = std::lower_bound(row2.cols.begin(), row2.cols.end(), c);
      if (it == row2.cols.end() || *it != c) continue;
      u64 f = p - row2.vals[it - row2.cols.begin()];
      scratch.cols.clear();
      scratch.vals.clear();
      std::size_t i = 0, j = 0;
      while (i < row2.cols.size() || j < pr.cols.size()) {
        if (j == pr.cols.size() || (i < row2.cols.size() && row2.cols[i] < pr.cols[j])) {
          scratch.cols.push_back(row2.cols[i]);
          scratch.vals.push_back(row2.vals[i]);
          ++i;
        } else if (i == row2.cols.size() || pr.cols[j] < row2.cols[i]) {
          scratch.cols.push_back(pr.cols[j]);
          scratch.vals.push_back(mulmod(f, pr.vals[j], p));
          col_rows[pr.cols[j]].push_back(r2);
          ++j;
        } else {
          u64 v = (row2.vals[i] + mulmod(f, pr.vals[j], p)) % p;
          if (v) {
            scratch.cols.push_back(row2.cols[i]);
            scratch.vals.push_back(v);
          }
          ++i;
          ++j;
        }
      }
      std::swap(row2.cols, scratch.cols);
      std::swap(row2.vals, scratch.vals);
      heap.emplace(row2.cols.size(), r2);
    }
  }

  ModKernel out;
  std::vector<std::vector<u64>> kernel;
  for (int f = 0; f < cols; ++f) {
    if (col_done[f]) continue;
    std::vector<u64> x(cols, 0);
    x[f] = 1;
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
      const ModRow& row = rows[it->first];
      u64 s = 0;
      for (std::size_t i = 0; i < row.cols.size(); ++i) {
        int cc = static_cast<int>(row.cols[i]);
        if (cc == it->second || x[cc] == 0) continue;
        s = (s + mulmod(row.vals[i], x[cc], p)) % p;
      }
      x[it->second] = s ? p - s : 0;
    }
    kernel.push_back(std::move(x));
  }
  // Canonical reduced echelon form of the kernel.
  std::size_t r = 0;
  for (int c = 0; c < cols && r < kernel.size(); ++c) {
    std::size_t piv = r;
    while (piv < kernel.size() && kernel[piv][c] == 0) ++piv;
    if (piv == kernel.size()) continue;
    std::swap(kernel[r], kernel[piv]);
    u64 inv = invmod(kernel[r][c], p);
    for (auto& v : kernel[r]) v = mulmod(v, inv, p);
    for (std::size_t i = 0; i < kernel.size(); ++i) {
      if (i == r || kernel[i][c] == 0) continue;
      u64 f = p - kernel[i][c];
      for (int j = c; j < cols; ++j)
        if (kernel[r][j]) kernel[i][j] = (kernel[i][j] + mulmod(f, kernel[r][j], p)) % p;
    }
    out.leading.push_back(c);
    ++r;
  }
  out.nullity = static_cast<int>(kernel.size());
  out.basis = std::move(kernel);
  return out;
}

/// Deterministic sequence of primes just below 2^62.
u64 next_prime_below(u64 bound) {
  Integer x(static_cast<unsigned long>(bound));
  do {
    x -= 1;
  } while (mpz_probab_prime_p(x.get_mpz_t(), 30) == 0);
  return x.get_ui();
}

}  // namespace

bool rational_reconstruct(const Integer& a, const Integer& m, Rational& out) {
  Integer bound;
  mpz_fdiv_q_2exp(bound.get_mpz_t(), m.get_mpz_t(), 1);
  mpz_sqrt(bound.get_mpz_t(), bound.get_mpz_t());
  Integer r0 = m, r1, t0 = 0, t1 = 1, q, tmp;
  mpz_fdiv_r(r1.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  while (r1 > bound) {
    mpz_fdiv_q(q.get_mpz_t(), r0.get_mpz_t(), r1.get_mpz_t());
    tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (t1 == 0 || abs(t1) > bound) return false;
  Integer g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return false;
  out = Rational(r1, t1);
  out.canonicalize();
  return true;
}

Nullspace nullspace_multimodular(const SparseSystem& system, int max_primes) {
  const int cols = system.cols;
  std::vector<IntRow> int_rows;
  int_rows.reserve(system.rows.size());
  for (const auto& row : system.rows) int_rows.push_back(primitive_integer_row(row));

  std::vector<int> leading;
  int nullity = -1;
  std::vector<std::vector<Integer>> residues;  // CRT images, per basis vector and column
  Integer modulus(1);
  std::vector<std::vector<Rational>> previous;
  bool have_previous = false;

  u64 prime = u64(1) << 62;
  for (int used = 0; used < max_primes;) {
    prime = next_prime_below(prime);
    ModKernel k = kernel_mod_p(int_rows, cols, prime);
    if (nullity >= 0) {
      if (k.nullity > nullity) continue;  // rank dropped mod p: unlucky prime
      if (k.nullity == nullity && k.leading != leading) continue;
    }
    if (nullity < 0 || k.nullity < nullity) {
      nullity = k.nullity;
      leading = k.leading;
      residues.assign(nullity, std::vector<Integer>(cols));
      modulus = 1;
      have_previous = false;
      used = 0;
    }
    ++used;
    if (nullity == 0) return Nullspace{{}, {}, used};

    // Incremental CRT: x = x + M * ((b - x) * M^{-1} mod p).
    Integer p_int(static_cast<unsigned long>(prime));
    u64 minv = invmod(mpz_fdiv_ui(modulus.get_mpz_t(), prime), prime);
    for (int b = 0; b < nullity; ++b)
      for (int c = 0; c < cols; ++c) {
        Integer& x = residues[b][c];
        u64 xr = mpz_fdiv_ui(x.get_mpz_t(), prime);
        u64 target = k.basis[b][c];
        u64 diff = (target + prime - xr) % prime;
        if (diff == 0) continue;
        u64 h = mulmod(diff, minv, prime);
        x += modulus * Integer(static_cast<unsigned long>(h));
      }
    modulus *= p_int;

    std::vector<std::vector<Rational>> candidate(nullity, std::vector<Rational>(cols));
    bool ok = true;
    for (int b = 0; b < nullity && ok; ++b)
      for (int c = 0; c < cols && ok; ++c)
        if (residues[b][c] != 0) ok = rational_reconstruct(residues[b][c], modulus, candidate[b][c]);
    if (!ok) continue;
    if (have_previous && candidate == previous) {
      bool verified = std::all_of(candidate.begin(), candidate.end(),
                                  [&](const std::vector<Rational>& x) { return system.is_solution(x); });
      if (verified) return Nullspace{std::move(candidate), leading, used};
    }
    previous = std::move(candidate);
    have_previous = true;
  }
  throw std::runtime_error("multimodular nullspace did not stabilize within the prime budget");
}

Nullspace nullspace(const SparseSystem& system) {
  if (system.cols <= 400) return nullspace_exact(system);
  return nullspace_multimodular(system);
}

void EchelonBasis::reduce(std::map<int, Rational>& v) const {
  auto it = v.begin();
  while (it != v.end()) {
    auto rit = rows_.find(it->first);
    if (rit == rows_.end()) {
      ++it;
      continue;
    }
    int key = it->first;
    Rational f = it->second;
    for (const auto& [c, val] : rit->second) {
      auto [slot, inserted] = v.try_emplace(c, 0);
      slot->second -= f * val;
      if (slot->second == 0) v.erase(slot);
    }
    it = v.upper_bound(key);
  }
}

bool EchelonBasis::insert(std::map<int, Rational> v) {
  std::erase_if(v, [](const auto& kv) { return kv.second == 0; });
  reduce(v);
  if (v.empty()) return false;
  Rational inv = 1 / v.begin()->second;
  for (auto& [c, x] : v) x *= inv;
  int key = v.begin()->first;
  rows_.emplace(key, std::move(v));
  return true;
}

bool EchelonBasis::contains(std::map<int, Rational> v) const {
  std::erase_if(v, [](const auto& kv) { return kv.second == 0; });
  reduce(v);
  return v.empty();
}

int rank_of(const std::vector<std::map<int, Rational>>& vectors) {
  EchelonBasis b;
  for (const auto& v : vectors) b.insert(v);
  return b.size();
}

}  // namespace affvoa
