#include <doctest.h>

#include "affvoa/characters.hpp"
#include "helpers.hpp"

using namespace affvoa;

TEST_SUITE("characters") {
  TEST_CASE("level denominators") {
    CHECK(level_denominator(Rational(-1), 3) == 1);
    CHECK(level_denominator(Rational(-7, 3), 3) == 3);
    CHECK(level_denominator(Rational(-5, 2), 4) == 2);
    CHECK_FALSE(level_denominator(Rational(-2), 3).has_value());  // q = 2 shares a factor with n - 1
    CHECK_FALSE(level_denominator(Rational(1, 2), 3).has_value());
    CHECK_THROWS_AS(numerator_terms(Rational(0), 3, 3), std::invalid_argument);
  }

  TEST_CASE("finite characters from Kostant's formula") {
    auto total = [](const std::map<std::vector<int>, long long>& ch) {
      long long s = 0;
      for (const auto& [w, c] : ch) s += c;
      return s;
    };
    // Weyl dimension formula: L(3,0) -> 10, L(1,1) -> 8, L(2,2) -> 27
    CHECK(total(finite_character(3, {2, 1})) == 10);
    CHECK(total(finite_character(3, {1, 2})) == 10);
    auto adj = finite_character(3, {1, 1});
    CHECK(total(adj) == 8);
    CHECK(adj.at({0, 0}) == 2);
    CHECK(total(finite_character(3, {2, 2})) == 27);
    CHECK(total(finite_character(3, {0, 0})) == 1);
  }

  TEST_CASE("vacuum table matches the weight-space enumeration") {
    CharacterTable t = vacuum_table(3, Rational(-1), 9);
    CHECK(t.at(9, {2, 1}) == 4350);
    CHECK(t.at(6, {2, 1}) == 235);
    CHECK(t.at(2, {0, 0}) == 8);
    VacuumModule V(3, Rational(-1));
    for (int d = 0; d <= 4; ++d)
      for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b)
          CHECK(t.at(d, {a, b}) == static_cast<long long>(V.weight_space_basis(d, {a, b}).size()));
  }

  TEST_CASE("numerator contains the reflected translation term") {
    auto terms = numerator_terms(Rational(-1), 3, 3);
    AffineWeight target(3, Rational(-1), Rational(-3), {2, 1});
    bool found = false;
    for (const auto& t : terms)
      if (t.weight == target) {
        found = true;
        CHECK(t.sign == -1);
        CHECK(t.depth == 3);
      }
    CHECK(found);
  }

  TEST_CASE("gamma box contains every contributing translation") {
    for (auto [n, q] : {std::pair{3, 1}, std::pair{3, 3}, std::pair{4, 2}}) {
      const int D = 8;
      const int bound = gamma_coordinate_bound(n, q, D);
      AffineWeight kl = (Rational(-n) + Rational(n - 1) / Rational(q)) * AffineWeight::lambda0(n);
      const int wide = 3 * bound + 3;
      std::vector<int> c(n - 1, -wide);
      while (true) {
        if (c.front() >= 0 && c.back() >= 0) {
          std::vector<Rational> gr(c.begin(), c.end());
          AffineWeight gamma = Rational(q) * AffineWeight::finite(n, gr);
          Rational depth = -AffineWeylElement::translation(gamma).twisted(kl).delta_coeff();
          if (depth <= D)
            for (int x : c) CHECK(std::abs(x) <= bound);
        }
        std::size_t i = 0;
        while (i < c.size() && c[i] == wide) c[i++] = -wide;
        if (i == c.size()) break;
        ++c[i];
      }
    }
  }

  TEST_CASE("level -1 formula agrees with the brute-force quotient") {
    VacuumModule V(3, Rational(-1));
    CharacterTable formula = character_table(Rational(-1), 3, 5);
    CharacterTable brute = brute_force_character(
        V, {affvoa::testing::level_minus_one_u1(V), affvoa::testing::level_minus_one_u2(V)}, 5);
    CHECK(compare(formula, brute).empty());
    CHECK(formula.at(3, {2, 1}) == 5);
    CHECK(formula.at(1, {0, 0}) == 2);
  }

  TEST_CASE("level -7/3 formula departs from V^k at the generator weights") {
    CharacterTable formula = character_table(Rational(-7, 3), 3, 9);
    CharacterTable vac = vacuum_table(3, Rational(-7, 3), 9);
    auto diff = compare(formula, vac);
    REQUIRE_FALSE(diff.empty());
    long long missing = 0;
    for (const auto& e : diff) {
      CHECK(e.depth == 9);
      CHECK(e.right - e.left > 0);
      missing += e.right - e.left;
      CHECK((e.weight[0] <= 2 && e.weight[1] <= 2 && e.weight[0] + e.weight[1] <= 3));
    }
    // two copies of the 10-dimensional irreducible g-modules
    CHECK(missing == 20);
    CHECK(formula.at(9, {2, 1}) == vac.at(9, {2, 1}) - 1);
    CHECK(formula.at(9, {1, 2}) == vac.at(9, {1, 2}) - 1);
  }

  TEST_CASE("table text is one row per nonzero entry") {
    CharacterTable t = vacuum_table(3, Rational(-1), 1);
    std::string text = t.to_text();
    CHECK(std::count(text.begin(), text.end(), '\n') == static_cast<long>(t.entries.size()));
    CHECK(text.find("1 0 0 2") != std::string::npos);
  }
}
