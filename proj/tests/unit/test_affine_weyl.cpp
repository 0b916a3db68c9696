#include <doctest.h>

#include "affvoa/affine_weyl.hpp"

using namespace affvoa;

namespace {

AffineWeight level_weight(int n, int q) {
  return (Rational(-n) + Rational(n - 1) / Rational(q)) * AffineWeight::lambda0(n);
}

AffineWeight beta0(int n, int q) { return Rational(q) * AffineWeight::delta(n) - AffineWeight::theta(n); }

AffineWeylElement s(const AffineWeight& a) { return AffineWeylElement::reflection(a); }
AffineWeylElement t(const AffineWeight& g) { return AffineWeylElement::translation(g); }

AffineWeight expected(int n, const Rational& k, int delta, std::vector<Rational> alpha) {
  return AffineWeight(n, k, Rational(delta), std::move(alpha));
}

}  // namespace

TEST_SUITE("affine_weyl") {
  TEST_CASE("pairing conventions") {
    const int n = 3;
    CHECK(pair(AffineWeight::delta(n), AffineWeight::delta(n)) == 0);
    CHECK(pair(AffineWeight::lambda0(n), AffineWeight::delta(n)) == 1);
    CHECK(pair(AffineWeight::lambda0(n), AffineWeight::lambda0(n)) == 0);
    CHECK(pair(AffineWeight::rho_hat(n), AffineWeight::delta(n)) == n);
    for (int q : {1, 3, 5}) CHECK(pair(level_weight(n, q) + AffineWeight::rho_hat(n), beta0(n, q)) == 0);
    // rho-hat pairs to 1 with every simple coroot.
    for (int i = 0; i < n; ++i) CHECK(pair(AffineWeight::rho_hat(n), AffineWeight::alpha(n, i)) == 1);
  }

  TEST_CASE("fundamental weights are dual to the simple roots") {
    for (int n : {3, 4, 5})
      for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j)
          CHECK(pair(AffineWeight::fundamental_finite(n, i), AffineWeight::alpha(n, j)) == (i == j ? 1 : 0));
  }

  TEST_CASE("zero translation and reflection squares act trivially") {
    const int n = 4;
    AffineWeylElement id(n);
    CHECK(t(AffineWeight(n)).same_action(id));
    for (int i = 0; i < n; ++i) CHECK((s(AffineWeight::alpha(n, i)) * s(AffineWeight::alpha(n, i))).same_action(id));
  }

  TEST_CASE("twisted action of the maximal-ideal weights at level -1") {
    const int n = 3;
    AffineWeight base = -1 * AffineWeight::lambda0(n);
    auto a1 = AffineWeight::alpha(n, 1), a2 = AffineWeight::alpha(n, 2);
    CHECK((s(a2) * t(a1)).twisted(base) == expected(n, -1, -3, {2, 1}));
    CHECK((s(a1) * t(a2)).twisted(base) == expected(n, -1, -3, {1, 2}));
  }

  TEST_CASE("twisted action of the generator weights for k = -3 + 2/(2m+1)") {
    const int n = 3;
    for (int m : {1, 2}) {
      const int q = 2 * m + 1;
      AffineWeight kl = level_weight(n, q);
      Rational k = kl.lambda0_coeff();
      auto a1 = AffineWeight::alpha(n, 1), a2 = AffineWeight::alpha(n, 2);
      CHECK((s(a2) * t(Rational(q) * a1)).twisted(kl) == expected(n, k, -3 * q, {2, 1}));
      CHECK((s(a1) * t(Rational(q) * a2)).twisted(kl) == expected(n, k, -3 * q, {1, 2}));
    }
  }

  TEST_CASE("twisted action of the n >= 4 generator weight") {
    for (auto [n, q] : {std::pair{4, 2}, std::pair{5, 2}, std::pair{5, 3}}) {
      AffineWeight kl = level_weight(n, q);
      AffineWeight beta(n);
      for (int i = 2; i <= n - 2; ++i) beta += AffineWeight::alpha(n, i);
      AffineWeylElement w = s(AffineWeight::theta(n)) * s(AffineWeight::alpha(n, 1)) * s(AffineWeight::alpha(n, n - 1)) *
                            t(Rational(-q) * beta);
      AffineWeight want = kl - Rational(2 * q) * AffineWeight::delta(n) + AffineWeight::theta(n) + beta;
      CHECK(w.twisted(kl) == want);
    }
  }

  TEST_CASE("Coxeter relations with the extra simple root") {
    {
      const int n = 3, q = 3;
      auto w = s(beta0(n, q)) * s(AffineWeight::alpha(n, 1));
      CHECK(w.pow(3).same_action(AffineWeylElement(n)));
      CHECK_FALSE(w.same_action(AffineWeylElement(n)));
    }
    {
      const int n = 4, q = 3;
      auto w = s(beta0(n, q)) * s(AffineWeight::alpha(n, 2));
      CHECK(w.pow(2).same_action(AffineWeylElement(n)));
    }
  }

  TEST_CASE("reflection products give translations") {
    for (int q : {2, 3, 5})
      for (int n : {3, 4}) {
        auto lhs = s(beta0(n, q)) * s(AffineWeight::theta(n));
        CHECK(lhs.same_action(t(Rational(q) * AffineWeight::theta(n))));
      }
  }

  TEST_CASE("translations compose additively and preserve the form") {
    const int n = 4;
    Rng rng(3);
    auto random_lattice = [&] {
      std::vector<Rational> c(n - 1);
      for (auto& x : c) x = rng.integer(-3, 3);
      return AffineWeight::finite(n, c);
    };
    auto random_weight = [&] {
      std::vector<Rational> c(n - 1);
      for (auto& x : c) x = rng.rational(5, 3);
      return AffineWeight(n, rng.rational(5, 3), rng.rational(5, 3), c);
    };
    for (int i = 0; i < 20; ++i) {
      auto g1 = random_lattice(), g2 = random_lattice();
      CHECK((t(g1) * t(g2)).same_action(t(g1 + g2)));
      auto w = s(AffineWeight::alpha(n, static_cast<int>(rng.integer(0, n - 1)))) * t(g1) *
               s(AffineWeight::alpha(n, static_cast<int>(rng.integer(0, n - 1))));
      auto x = random_weight(), y = random_weight();
      CHECK(pair(w.apply(x), w.apply(y)) == pair(x, y));
      auto alpha = AffineWeight::alpha(n, static_cast<int>(rng.integer(0, n - 1)));
      CHECK(s(w.apply(alpha)).same_action(w * s(alpha) * w.inverse()));
    }
  }

  TEST_CASE("integral simple roots at the non-admissible level") {
    const int n = 3, q = 3;
    IntegralSystem sys = integral_simple_roots(level_weight(n, q), 4 * q);
    CHECK(sys.simple_roots.size() == 3);
    auto has = [&](const std::vector<AffineWeight>& v, const AffineWeight& a) {
      return std::find(v.begin(), v.end(), a) != v.end();
    };
    CHECK(has(sys.simple_roots, beta0(n, q)));
    CHECK(has(sys.simple_roots, AffineWeight::alpha(n, 1)));
    CHECK(has(sys.simple_roots, AffineWeight::alpha(n, 2)));
    REQUIRE(sys.simple_zero.size() == 1);
    CHECK(sys.simple_zero.front() == beta0(n, q));
  }

  TEST_CASE("integral simple roots at level -1 and level 0") {
    IntegralSystem minus_one = integral_simple_roots(-1 * AffineWeight::lambda0(3), 4);
    CHECK(std::find(minus_one.simple_roots.begin(), minus_one.simple_roots.end(), AffineWeight::alpha(3, 0)) !=
          minus_one.simple_roots.end());
    IntegralSystem zero = integral_simple_roots(AffineWeight(4), 4);
    CHECK(zero.simple_roots.size() == 4);
    for (int i = 0; i < 4; ++i)
      CHECK(std::find(zero.simple_roots.begin(), zero.simple_roots.end(), AffineWeight::alpha(4, i)) !=
            zero.simple_roots.end());
    CHECK_THROWS_AS(integral_simple_roots(-3 * AffineWeight::lambda0(3), 4), std::invalid_argument);
  }
}
