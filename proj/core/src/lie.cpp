#include "affvoa/lie.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace affvoa {

std::string BasisElement::to_string() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::E: out << "E[" << i << "," << j << "]"; break;
    case Kind::F: out << "F[" << i << "," << j << "]"; break;
    case Kind::H: out << "H[" << i << "]"; break;
  }
  return out.str();
}

std::string BasisElement::variable_name() const {
  std::ostringstream out;
  bool wide = i > 9 || j > 9;
  switch (kind) {
    case Kind::E: out << "e" << i << (wide ? "_" : "") << j; break;
    case Kind::F: out << "f" << i << (wide ? "_" : "") << j; break;
    case Kind::H: out << "h" << i; break;
  }
  return out.str();
}

BasisElement parse_basis_element(const std::string& text) {
  auto fail = [&]() -> BasisElement { throw std::invalid_argument("bad basis element '" + text + "'"); };
  if (text.size() < 4 || text[1] != '[' || text.back() != ']') return fail();
  std::string inner = text.substr(2, text.size() - 3);
  try {
    if (text[0] == 'H') {
      std::size_t used = 0;
      int i = std::stoi(inner, &used);
      if (used != inner.size() || i < 1) return fail();
      return BasisElement::h(i);
    }
    auto comma = inner.find(',');
    if (comma == std::string::npos) return fail();
    int i = std::stoi(inner.substr(0, comma));
    int j = std::stoi(inner.substr(comma + 1));
    if (i < 1 || j <= i) return fail();
    if (text[0] == 'E') return BasisElement::e(i, j);
    if (text[0] == 'F') return BasisElement::f(i, j);
  } catch (const std::logic_error&) {
  }
  return fail();
}

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix operator*(const QMatrix& x, const QMatrix& y) {
  if (x.cols != y.rows) throw std::invalid_argument("matrix shape mismatch");
  QMatrix r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      if (x(i, k) == 0) continue;
      for (int j = 0; j < y.cols; ++j) r(i, j) += x(i, k) * y(k, j);
    }
  return r;
}

QMatrix operator+(const QMatrix& x, const QMatrix& y) {
  QMatrix r = x;
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
  return r;
}

QMatrix operator-(const QMatrix& x, const QMatrix& y) {
  QMatrix r = x;
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
  return r;
}

QMatrix operator*(const Rational& c, const QMatrix& x) {
  QMatrix r = x;
  for (auto& v : r.a) v *= c;
  return r;
}

Rational trace(const QMatrix& x) {
  Rational t(0);
  for (int i = 0; i < std::min(x.rows, x.cols); ++i) t += x(i, i);
  return t;
}

int rank(QMatrix x) {
  int r = 0;
  for (int c = 0; c < x.cols && r < x.rows; ++c) {
    int piv = -1;
    for (int i = r; i < x.rows; ++i)
      if (x(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j < x.cols; ++j) std::swap(x(r, j), x(piv, j));
    for (int i = r + 1; i < x.rows; ++i) {
      if (x(i, c) == 0) continue;
      Rational f = x(i, c) / x(r, c);
      for (int j = c; j < x.cols; ++j) x(i, j) -= f * x(r, j);
    }
    ++r;
  }
  return r;
}

SlN::SlN(int n) : n_(n) {
  if (n < 2) throw std::invalid_argument("sl_n needs n >= 2");
  std::vector<std::pair<int, int>> roots;
  for (int height = 1; height < n; ++height)
    for (int i = 1; i + height <= n; ++i) roots.emplace_back(i, i + height);
  num_pos_ = static_cast<int>(roots.size());
  for (auto [i, j] : roots) basis_.push_back(BasisElement::e(i, j));
  for (auto [i, j] : roots) basis_.push_back(BasisElement::f(i, j));
  for (int i = 1; i < n; ++i) basis_.push_back(BasisElement::h(i));

  const int d = dim();
  matrix_.reserve(d);
  weight_.reserve(d);
  for (const auto& b : basis_) {
    QMatrix m(n, n);
    std::vector<int> w(n - 1, 0);
    switch (b.kind) {
      case BasisElement::Kind::E:
        m(b.i - 1, b.j - 1) = 1;
        for (int l = b.i; l < b.j; ++l) w[l - 1] = 1;
        break;
      case BasisElement::Kind::F:
        m(b.j - 1, b.i - 1) = 1;
        for (int l = b.i; l < b.j; ++l) w[l - 1] = -1;
        break;
      case BasisElement::Kind::H:
        m(b.i - 1, b.i - 1) = 1;
        m(b.i, b.i) = -1;
        break;
    }
    matrix_.push_back(std::move(m));
    weight_.push_back(std::move(w));
  }

  bracket_.assign(static_cast<std::size_t>(d) * d, {});
  form_.assign(static_cast<std::size_t>(d) * d, 0);
  for (int a = 0; a < d; ++a)
    for (int c = 0; c < d; ++c) {
      QMatrix comm = matrix_[a] * matrix_[c] - matrix_[c] * matrix_[a];
      LieElement le = from_qmatrix(*this, comm);
      auto& entry = bracket_[a * d + c];
      for (const auto& [idx, coef] : le.coeffs()) entry.emplace_back(idx, coef.get_num().get_si());
      form_[a * d + c] = trace(matrix_[a] * matrix_[c]).get_num().get_si();
    }
}

int SlN::index_of(const BasisElement& b) const {
  for (int i = 0; i < dim(); ++i)
    if (basis_[i] == b) return i;
  throw std::invalid_argument("basis element " + b.to_string() + " not in sl_" + std::to_string(n_));
}

int SlN::cartan(int i, int j) const {
  if (i == j) return 2;
  return std::abs(i - j) == 1 ? -1 : 0;
}

LieElement LieElement::basis(const SlN& g, int idx, const Rational& c) {
  LieElement x(g.n());
  x.add(idx, c);
  return x;
}

LieElement LieElement::basis(const SlN& g, const BasisElement& b, const Rational& c) {
  return basis(g, g.index_of(b), c);
}

Rational LieElement::coeff(int idx) const {
  auto it = coeffs_.find(idx);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void LieElement::add(int idx, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(idx, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

void LieElement::check_rank(const LieElement& o) const {
  if (n_ != o.n_) throw std::invalid_argument("Lie elements of different rank");
}

LieElement& LieElement::operator+=(const LieElement& o) {
  check_rank(o);
  for (const auto& [i, c] : o.coeffs_) add(i, c);
  return *this;
}

LieElement& LieElement::operator-=(const LieElement& o) {
  check_rank(o);
  for (const auto& [i, c] : o.coeffs_) add(i, -c);
  return *this;
}

LieElement& LieElement::operator*=(const Rational& c) {
  if (c == 0) coeffs_.clear();
  for (auto& [i, v] : coeffs_) v *= c;
  return *this;
}

std::string LieElement::to_string(const SlN& g) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [i, c] : coeffs_) {
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    first = false;
    Rational mag = abs(c);
    if (mag != 1) out << mag.get_str() << "*";
    out << g.basis(i).to_string();
  }
  return out.str();
}

namespace {

void check(const SlN& g, const LieElement& x) {
  if (x.n() != g.n()) throw std::invalid_argument("Lie element rank does not match sl_" + std::to_string(g.n()));
}

}  // namespace

LieElement bracket(const SlN& g, const LieElement& x, const LieElement& y) {
  check(g, x);
  check(g, y);
  LieElement r(g.n());
  for (const auto& [a, ca] : x.coeffs())
    for (const auto& [b, cb] : y.coeffs())
      for (const auto& [idx, s] : g.bracket(a, b)) r.add(idx, ca * cb * s);
  return r;
}

Rational normalized_form(const SlN& g, const LieElement& x, const LieElement& y) {
  check(g, x);
  check(g, y);
  Rational r(0);
  for (const auto& [a, ca] : x.coeffs())
    for (const auto& [b, cb] : y.coeffs())
      if (long f = g.form(a, b)) r += ca * cb * f;
  return r;
}

std::vector<std::pair<LieElement, LieElement>> dual_basis(const SlN& g) {
  const int n = g.n();
  std::vector<std::pair<LieElement, LieElement>> out;
  for (int a = 0; a < g.dim(); ++a) {
    const auto& b = g.basis(a);
    LieElement x = LieElement::basis(g, a);
    if (b.kind == BasisElement::Kind::E) {
      out.emplace_back(x, LieElement::basis(g, BasisElement::f(b.i, b.j)));
    } else if (b.kind == BasisElement::Kind::F) {
      out.emplace_back(x, LieElement::basis(g, BasisElement::e(b.i, b.j)));
    } else {
      // Inverse of the A_{n-1} Cartan matrix: min(i,j) (n - max(i,j)) / n.
      LieElement dual(n);
      for (int j = 1; j < n; ++j)
        dual.add(g.h(j), make_rational(static_cast<long>(std::min(b.i, j)) * (n - std::max(b.i, j)), n));
      out.emplace_back(x, dual);
    }
  }
  return out;
}

MatrixRep::MatrixRep(int n, VarsPtr vars)
    : n_(n), vars_(std::move(vars)), entries_(static_cast<std::size_t>(n) * n, ParamPoly(vars_)) {}

ParamPoly MatrixRep::trace() const {
  ParamPoly t(vars_);
  for (int i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

QMatrix MatrixRep::evaluate(const std::map<std::string, Rational>& point) const {
  QMatrix m(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m(i, j) = (*this)(i, j).evaluate(point);
  return m;
}

MatrixRep MatrixRep::operator*(const MatrixRep& o) const {
  MatrixRep r(n_, vars_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      if ((*this)(i, k).is_zero()) continue;
      for (int j = 0; j < n_; ++j) r(i, j) += (*this)(i, k) * o(k, j);
    }
  return r;
}

MatrixRep MatrixRep::operator+(const MatrixRep& o) const {
  MatrixRep r = *this;
  for (std::size_t i = 0; i < r.entries_.size(); ++i) r.entries_[i] += o.entries_[i];
  return r;
}

MatrixRep MatrixRep::operator-(const MatrixRep& o) const {
  MatrixRep r = *this;
  for (std::size_t i = 0; i < r.entries_.size(); ++i) r.entries_[i] -= o.entries_[i];
  return r;
}

bool MatrixRep::operator==(const MatrixRep& o) const { return n_ == o.n_ && entries_ == o.entries_; }

bool MatrixRep::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const ParamPoly& p) { return p.is_zero(); });
}

MatrixRep MatrixRep::from_rational(const QMatrix& m, VarsPtr vars) {
  MatrixRep r(m.rows, std::move(vars));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) r(i, j) = ParamPoly::constant(r.vars_, m(i, j));
  return r;
}

void add_scaled(MatrixRep& target, const SlN& g, const LieElement& x, const ParamPoly& coef) {
  QMatrix m = to_qmatrix(g, x);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (m(i, j) != 0) target(i, j) += coef * m(i, j);
}

QMatrix to_qmatrix(const SlN& g, const LieElement& x) {
  check(g, x);
  QMatrix m(g.n(), g.n());
  for (const auto& [a, c] : x.coeffs()) m = m + c * g.matrix(a);
  return m;
}

MatrixRep to_matrix(const SlN& g, const LieElement& x, VarsPtr vars) {
  return MatrixRep::from_rational(to_qmatrix(g, x), std::move(vars));
}

LieElement from_qmatrix(const SlN& g, const QMatrix& m) {
  const int n = g.n();
  if (m.rows != n || m.cols != n) throw std::invalid_argument("matrix size does not match sl_n");
  if (trace(m) != 0) throw std::invalid_argument("matrix is not traceless");
  LieElement x(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (m(i - 1, j - 1) != 0) x.add(g.e(i, j), m(i - 1, j - 1));
      if (m(j - 1, i - 1) != 0) x.add(g.f(i, j), m(j - 1, i - 1));
    }
  Rational running(0);
  for (int l = 1; l < n; ++l) {
    running += m(l - 1, l - 1);
    x.add(g.h(l), running);
  }
  return x;
}

std::vector<ParamPoly> pairings_with_basis(const SlN& g, const MatrixRep& x) {
  std::vector<ParamPoly> out;
  out.reserve(g.dim());
  for (const auto& b : g.basis()) {
    switch (b.kind) {
      case BasisElement::Kind::E: out.push_back(x(b.j - 1, b.i - 1)); break;
      case BasisElement::Kind::F: out.push_back(x(b.i - 1, b.j - 1)); break;
      case BasisElement::Kind::H: out.push_back(x(b.i - 1, b.i - 1) - x(b.i, b.i)); break;
    }
  }
  return out;
}

VarsPtr with_lambda(const VarsPtr& vars) {
  auto names = vars->names();
  names.push_back("lambda");
  return make_vars(std::move(names));
}

namespace {

ParamPoly determinant(const std::vector<ParamPoly>& m, int n, const VarsPtr& vars) {
  if (n == 1) return m[0];
  if (n == 2) return m[0] * m[3] - m[1] * m[2];
  ParamPoly det(vars);
  for (int c = 0; c < n; ++c) {
    if (m[c].is_zero()) continue;
    std::vector<ParamPoly> minor;
    minor.reserve(static_cast<std::size_t>(n - 1) * (n - 1));
    for (int r = 1; r < n; ++r)
      for (int cc = 0; cc < n; ++cc)
        if (cc != c) minor.push_back(m[static_cast<std::size_t>(r) * n + cc]);
    ParamPoly term = m[c] * determinant(minor, n - 1, vars);
    if (c % 2) det -= term;
    else det += term;
  }
  return det;
}

}  // namespace

ParamPoly char_poly(const MatrixRep& m) {
  VarsPtr vars = with_lambda(m.vars());
  const int n = m.n();
  ParamPoly lambda = ParamPoly::variable(vars, "lambda");
  std::vector<ParamPoly> a;
  a.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      ParamPoly entry = -m(i, j).embed(vars);
      if (i == j) entry += lambda;
      a.push_back(std::move(entry));
    }
  return determinant(a, n, vars);
}

MatrixRep adjoint_orbit_sample(const MatrixRep& x, std::uint64_t seed, int factors) {
  const int n = x.n();
  Rng rng(seed);
  QMatrix g = QMatrix::identity(n), ginv = QMatrix::identity(n);
  for (int f = 0; f < factors; ++f) {
    int i = static_cast<int>(rng.integer(0, n - 1));
    int j = static_cast<int>(rng.integer(0, n - 2));
    if (j >= i) ++j;
    Rational t = rng.nonzero_rational(3, 2);
    // exp(t E_ij) = I + t E_ij since E_ij^2 = 0 for i != j.
    QMatrix u = QMatrix::identity(n), uinv = QMatrix::identity(n);
    u(i, j) = t;
    uinv(i, j) = -t;
    g = g * u;
    ginv = uinv * ginv;
  }
  MatrixRep G = MatrixRep::from_rational(g, x.vars());
  MatrixRep Ginv = MatrixRep::from_rational(ginv, x.vars());
  return G * x * Ginv;
}

}  // namespace affvoa
