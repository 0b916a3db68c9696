#include "affvoa/affine_weyl.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace affvoa {

AffineWeight::AffineWeight(int n) : n_(n), alpha_(n - 1) {
  if (n < 2) throw std::invalid_argument("affine weights need n >= 2");
}

AffineWeight::AffineWeight(int n, const Rational& lambda0, const Rational& delta, std::vector<Rational> alpha)
    : AffineWeight(n) {
  lambda0_ = lambda0;
  delta_ = delta;
  if (!alpha.empty()) {
    if (static_cast<int>(alpha.size()) != n - 1) throw std::invalid_argument("alpha coordinate count must be n-1");
    alpha_ = std::move(alpha);
  }
}

AffineWeight AffineWeight::alpha(int n, int i) {
  if (i == 0) return delta(n) - theta(n);
  if (i < 0 || i >= n) throw std::out_of_range("simple root index out of range");
  AffineWeight w(n);
  w.alpha_[i - 1] = 1;
  return w;
}

AffineWeight AffineWeight::finite(int n, std::vector<Rational> alpha_coords) {
  return AffineWeight(n, 0, 0, std::move(alpha_coords));
}

AffineWeight AffineWeight::theta(int n) { return finite(n, std::vector<Rational>(n - 1, Rational(1))); }

AffineWeight AffineWeight::rho_hat(int n) {
  std::vector<Rational> rho(n - 1);
  for (int i = 1; i < n; ++i) rho[i - 1] = make_rational(static_cast<long>(i) * (n - i), 2);
  return AffineWeight(n, n, 0, std::move(rho));
}

AffineWeight AffineWeight::fundamental_finite(int n, int i) {
  if (i < 1 || i >= n) throw std::out_of_range("fundamental weight index out of range");
  std::vector<Rational> c(n - 1);
  for (int j = 1; j < n; ++j) c[j - 1] = make_rational(static_cast<long>(std::min(i, j)) * (n - std::max(i, j)), n);
  return finite(n, std::move(c));
}

void AffineWeight::check(const AffineWeight& o) const {
  if (n_ != o.n_) throw std::invalid_argument("affine weights of different rank");
}

AffineWeight& AffineWeight::operator+=(const AffineWeight& o) {
  check(o);
  lambda0_ += o.lambda0_;
  delta_ += o.delta_;
  for (std::size_t i = 0; i < alpha_.size(); ++i) alpha_[i] += o.alpha_[i];
  return *this;
}

AffineWeight& AffineWeight::operator-=(const AffineWeight& o) {
  check(o);
  lambda0_ -= o.lambda0_;
  delta_ -= o.delta_;
  for (std::size_t i = 0; i < alpha_.size(); ++i) alpha_[i] -= o.alpha_[i];
  return *this;
}

AffineWeight& AffineWeight::operator*=(const Rational& c) {
  lambda0_ *= c;
  delta_ *= c;
  for (auto& a : alpha_) a *= c;
  return *this;
}

bool AffineWeight::operator<(const AffineWeight& o) const {
  if (lambda0_ != o.lambda0_) return lambda0_ < o.lambda0_;
  if (delta_ != o.delta_) return delta_ < o.delta_;
  return alpha_ < o.alpha_;
}

std::string AffineWeight::to_string() const {
  std::ostringstream out;
  bool first = true;
  auto term = [&](const Rational& c, const std::string& name) {
    if (c == 0) return;
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    first = false;
    Rational mag = abs(c);
    if (mag != 1) out << mag.get_str() << "*";
    out << name;
  };
  term(lambda0_, "L0");
  term(delta_, "delta");
  for (std::size_t i = 0; i < alpha_.size(); ++i) term(alpha_[i], "a" + std::to_string(i + 1));
  return first ? "0" : out.str();
}

Rational pair(const AffineWeight& x, const AffineWeight& y) {
  if (x.n() != y.n()) throw std::invalid_argument("affine weights of different rank");
  Rational r = x.lambda0_coeff() * y.delta_coeff() + x.delta_coeff() * y.lambda0_coeff();
  const auto& a = x.alpha_coeffs();
  const auto& b = y.alpha_coeffs();
  const std::size_t m = a.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (a[i] == 0) continue;
    Rational s = 2 * b[i];
    if (i > 0) s -= b[i - 1];
    if (i + 1 < m) s -= b[i + 1];
    r += a[i] * s;
  }
  return r;
}

AffineWeight translate(const AffineWeight& gamma, const AffineWeight& lambda) {
  if (!gamma.is_finite()) throw std::invalid_argument("translation vector must be a finite weight");
  Rational level = pair(lambda, AffineWeight::delta(lambda.n()));
  Rational shift = pair(lambda, gamma) + level * pair(gamma, gamma) / 2;
  return lambda + level * gamma - shift * AffineWeight::delta(lambda.n());
}

AffineWeight reflect(const AffineWeight& alpha, const AffineWeight& lambda) {
  if (pair(alpha, alpha) != 2) throw std::invalid_argument("reflection needs a real root of norm 2");
  return lambda - pair(lambda, alpha) * alpha;
}

AffineWeylElement AffineWeylElement::reflection(const AffineWeight& alpha) {
  if (pair(alpha, alpha) != 2) throw std::invalid_argument("reflection needs a real root of norm 2");
  AffineWeylElement w(alpha.n());
  w.word_.push_back({Letter::Kind::Reflection, alpha});
  return w;
}

AffineWeylElement AffineWeylElement::translation(const AffineWeight& gamma) {
  if (!gamma.is_finite()) throw std::invalid_argument("translation vector must be a finite weight");
  AffineWeylElement w(gamma.n());
  w.word_.push_back({Letter::Kind::Translation, gamma});
  return w;
}

AffineWeylElement operator*(const AffineWeylElement& a, const AffineWeylElement& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("Weyl elements of different rank");
  AffineWeylElement r = a;
  r.word_.insert(r.word_.end(), b.word_.begin(), b.word_.end());
  return r;
}

AffineWeylElement AffineWeylElement::inverse() const {
  AffineWeylElement r(n_);
  for (auto it = word_.rbegin(); it != word_.rend(); ++it) {
    Letter l = *it;
    if (l.kind == Letter::Kind::Translation) l.vector *= Rational(-1);
    r.word_.push_back(l);
  }
  return r;
}

AffineWeylElement AffineWeylElement::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  AffineWeylElement r(n_);
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

AffineWeight AffineWeylElement::apply(const AffineWeight& lambda) const {
  AffineWeight x = lambda;
  for (auto it = word_.rbegin(); it != word_.rend(); ++it)
    x = it->kind == Letter::Kind::Reflection ? reflect(it->vector, x) : translate(it->vector, x);
  return x;
}

AffineWeight AffineWeylElement::twisted(const AffineWeight& lambda) const {
  AffineWeight rho = AffineWeight::rho_hat(lambda.n());
  return apply(lambda + rho) - rho;
}

bool AffineWeylElement::same_action(const AffineWeylElement& o) const {
  if (n_ != o.n_) return false;
  std::vector<AffineWeight> basis{AffineWeight::lambda0(n_), AffineWeight::delta(n_)};
  for (int i = 1; i < n_; ++i) basis.push_back(AffineWeight::alpha(n_, i));
  return std::all_of(basis.begin(), basis.end(), [&](const AffineWeight& b) { return apply(b) == o.apply(b); });
}

IntegralSystem integral_simple_roots(const AffineWeight& lambda, int cutoff) {
  const int n = lambda.n();
  AffineWeight shifted = lambda + AffineWeight::rho_hat(n);
  if (pair(shifted, AffineWeight::delta(n)) == 0) throw std::invalid_argument("critical level: (lambda + rho | delta) = 0");
  if (cutoff < 1) throw std::invalid_argument("cutoff must be positive");

  IntegralSystem sys{lambda, cutoff, {}, {}, {}};
  // Finite roots as intervals (i, j): alpha_i + ... + alpha_{j-1}.
  std::vector<AffineWeight> finite_roots;
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      std::vector<Rational> c(n - 1);
      for (int l = i; l < j; ++l) c[l - 1] = 1;
      AffineWeight r = AffineWeight::finite(n, c);
      finite_roots.push_back(r);
      finite_roots.push_back(Rational(-1) * r);
    }
  auto is_positive = [](const AffineWeight& r) {
    if (r.delta_coeff() != 0) return r.delta_coeff() > 0;
    return std::all_of(r.alpha_coeffs().begin(), r.alpha_coeffs().end(), [](const Rational& c) { return c >= 0; });
  };
  std::set<AffineWeight> in_window;
  for (int j = 0; j <= cutoff; ++j)
    for (const auto& r : finite_roots) {
      AffineWeight root = r + Rational(j) * AffineWeight::delta(n);
      if (!is_positive(root)) continue;
      if (!is_integer(pair(shifted, root))) continue;
      sys.positive_roots.push_back(root);
      in_window.insert(root);
    }
  std::sort(sys.positive_roots.begin(), sys.positive_roots.end(), [](const AffineWeight& a, const AffineWeight& b) {
    if (a.delta_coeff() != b.delta_coeff()) return a.delta_coeff() < b.delta_coeff();
    return b < a;
  });

  for (const auto& root : sys.positive_roots) {
    bool decomposable = false;
    for (const auto& x : sys.positive_roots) {
      if (x == root) continue;
      if (in_window.count(root - x)) {
        decomposable = true;
        break;
      }
    }
    if (decomposable) continue;
    // s_root must map every other positive integral root of the window to a positive root.
    for (const auto& x : sys.positive_roots) {
      if (x == root) continue;
      AffineWeight image = reflect(root, x);
      if (!is_positive(image))
        throw std::logic_error("indecomposable root " + root.to_string() + " fails the simple-root test");
    }
    sys.simple_roots.push_back(root);
    if (pair(shifted, root) == 0) sys.simple_zero.push_back(root);
  }
  return sys;
}

}  // namespace affvoa
