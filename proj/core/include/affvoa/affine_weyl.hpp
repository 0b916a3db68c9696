#pragma once

#include <string>
#include <vector>

#include "affvoa/rational.hpp"

namespace affvoa {

/// Weight in the span of (Lambda_0, delta, alpha_1, ..., alpha_{n-1}). The scaling
/// direction d is omitted: nothing computed here ever pairs two Lambda_0-free weights
/// against it.
class AffineWeight {
 public:
  explicit AffineWeight(int n);
  AffineWeight(int n, const Rational& lambda0, const Rational& delta, std::vector<Rational> alpha);

  static AffineWeight lambda0(int n) { return AffineWeight(n, 1, 0, {}); }
  static AffineWeight delta(int n) { return AffineWeight(n, 0, 1, {}); }
  /// alpha_i for 1 <= i <= n-1; alpha_0 = delta - theta.
  static AffineWeight alpha(int n, int i);
  /// Finite root-lattice (or weight) vector given in alpha-coordinates.
  static AffineWeight finite(int n, std::vector<Rational> alpha_coords);
  static AffineWeight theta(int n);
  /// rho-hat = n Lambda_0 + rho, with rho = sum_i i(n-i)/2 alpha_i.
  static AffineWeight rho_hat(int n);
  /// Finite fundamental weight Lambda-bar_i (rows of the inverse Cartan matrix).
  static AffineWeight fundamental_finite(int n, int i);

  int n() const { return n_; }
  const Rational& lambda0_coeff() const { return lambda0_; }
  const Rational& delta_coeff() const { return delta_; }
  const std::vector<Rational>& alpha_coeffs() const { return alpha_; }
  bool is_finite() const { return lambda0_ == 0 && delta_ == 0; }

  AffineWeight& operator+=(const AffineWeight& o);
  AffineWeight& operator-=(const AffineWeight& o);
  AffineWeight& operator*=(const Rational& c);
  friend AffineWeight operator+(AffineWeight a, const AffineWeight& b) { return a += b; }
  friend AffineWeight operator-(AffineWeight a, const AffineWeight& b) { return a -= b; }
  friend AffineWeight operator*(const Rational& c, AffineWeight a) { return a *= c; }
  bool operator==(const AffineWeight& o) const = default;
  bool operator<(const AffineWeight& o) const;

  /// e.g. "-7/3*L0 - 9*delta + 2*a1 + a2".
  std::string to_string() const;

 private:
  void check(const AffineWeight& o) const;
  int n_;
  Rational lambda0_;
  Rational delta_;
  std::vector<Rational> alpha_;
};

Rational pair(const AffineWeight& x, const AffineWeight& y);

/// t_gamma(lambda) = lambda + (lambda|delta) gamma - ((lambda|gamma) + (lambda|delta)(gamma|gamma)/2) delta.
/// gamma must be a finite weight.
AffineWeight translate(const AffineWeight& gamma, const AffineWeight& lambda);
/// s_alpha(lambda) = lambda - (lambda|alpha) alpha for a real root alpha ((alpha|alpha) = 2).
AffineWeight reflect(const AffineWeight& alpha, const AffineWeight& lambda);

/// A word in reflections and translations. The word s_1 s_2 ... s_r acts on a weight as
/// s_1(s_2(...s_r(lambda))), i.e. the rightmost letter first.
class AffineWeylElement {
 public:
  struct Letter {
    enum class Kind { Reflection, Translation } kind;
    AffineWeight vector;
  };

  explicit AffineWeylElement(int n) : n_(n) {}
  static AffineWeylElement reflection(const AffineWeight& alpha);
  static AffineWeylElement translation(const AffineWeight& gamma);

  int n() const { return n_; }
  const std::vector<Letter>& word() const { return word_; }

  /// Composition: (a * b)(lambda) = a(b(lambda)).
  friend AffineWeylElement operator*(const AffineWeylElement& a, const AffineWeylElement& b);
  AffineWeylElement inverse() const;
  AffineWeylElement pow(int e) const;

  AffineWeight apply(const AffineWeight& lambda) const;
  /// w . lambda = w(lambda + rho-hat) - rho-hat.
  AffineWeight twisted(const AffineWeight& lambda) const;

  /// Extensional equality: the two words act identically on the basis
  /// Lambda_0, delta, alpha_1, ..., alpha_{n-1}.
  bool same_action(const AffineWeylElement& o) const;

 private:
  int n_;
  std::vector<Letter> word_;
};

/// Real roots integral for lambda, inside a delta-height window.
struct IntegralSystem {
  AffineWeight lambda;
  int cutoff = 0;
  std::vector<AffineWeight> positive_roots;  // Delta-hat_+(lambda) in the window
  std::vector<AffineWeight> simple_roots;    // Pi-hat(lambda)
  std::vector<AffineWeight> simple_zero;     // Pi-hat_0(lambda): simple roots with (lambda+rho|alpha) = 0
};

/// Integral simple roots of lambda, found as the indecomposable elements of
/// Delta-hat_+(lambda) with delta-height <= cutoff. Each candidate is also checked to
/// permute the remaining positive integral roots of the window (as far as images stay
/// inside it). Throws on the critical hyperplane (lambda + rho-hat | delta) = 0.
IntegralSystem integral_simple_roots(const AffineWeight& lambda, int cutoff);

}  // namespace affvoa
