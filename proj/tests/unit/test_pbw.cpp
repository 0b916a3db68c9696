#include <doctest.h>

#include "affvoa/linalg.hpp"
#include "affvoa/pbw.hpp"
#include "helpers.hpp"

using namespace affvoa;
using affvoa::testing::proportional;

TEST_SUITE("pbw_vertex") {
  TEST_CASE("monomial text round trip") {
    VacuumModule V(3, Rational(-1));
    Monomial m = V.parse_monomial("E[1,2](-1)^2 E[1,3](-2) H[1](-1)");
    CHECK(V.to_string(m) == "E[1,2](-1)^2 E[1,3](-2) H[1](-1)");
    CHECK(VacuumModule::depth(m) == 5);
    CHECK(VacuumModule::li_depth(m) == 1);
    CHECK(V.weight(m) == std::vector<int>{3, 1});
    CHECK(V.parse_monomial("1").empty());
    CHECK_THROWS(V.parse_monomial("E[1,2](0)"));
    CHECK_THROWS(V.parse_monomial("E[1,2](-1)^"));
  }

  TEST_CASE("vector serialization round trip") {
    VacuumModule V(3, Rational(-1));
    PBWVector u = affvoa::testing::level_minus_one_u2(V);
    CHECK(V.deserialize(V.serialize(u)) == u);
  }

  TEST_CASE("weight spaces partition the depth-graded dimension") {
    // prod_j (1 - x^j)^{-8}, expanded independently (tests/oracles/derive_values.py)
    const std::vector<long long> expected = {1, 8, 44, 192, 726, 2464, 7704, 22528, 62337};
    for (int d = 0; d <= 8; ++d) CHECK(vacuum_depth_dimension(3, d) == expected[d]);
    VacuumModule V(3, Rational(-1));
    for (int d = 0; d <= 5; ++d) {
      long long total = 0;
      for (int a = -2 * d; a <= 2 * d; ++a)
        for (int b = -2 * d; b <= 2 * d; ++b) total += static_cast<long long>(V.weight_space_basis(d, {a, b}).size());
      CHECK(total == expected[d]);
    }
    CHECK(V.weight_space_basis(3, {2, 1}).size() == 6);
    CHECK(V.weight_space_basis(6, {2, 1}).size() == 235);
  }

  TEST_CASE("commutator identity on random vectors") {
    for (const Rational& k : {Rational(-1), Rational(-7, 3)}) {
      VacuumModule V(3, k);
      const SlN& g = V.g();
      Rng rng(17);
      for (int trial = 0; trial < 60; ++trial) {
        const int a = static_cast<int>(rng.integer(0, g.dim() - 1));
        const int b = static_cast<int>(rng.integer(0, g.dim() - 1));
        const int m = static_cast<int>(rng.integer(-2, 2));
        const int p = static_cast<int>(rng.integer(-2, 2));
        const int d = static_cast<int>(rng.integer(0, 3));
        PBWVector v = affvoa::testing::random_homogeneous(V, rng, d, {static_cast<int>(rng.integer(-1, 1)), 0});
        PBWVector lhs = V.apply_mode(a, m, V.apply_mode(b, p, v)) - V.apply_mode(b, p, V.apply_mode(a, m, v));
        LieElement br = bracket(g, LieElement::basis(g, a), LieElement::basis(g, b));
        PBWVector rhs = V.apply_mode(br, m + p, v);
        if (m + p == 0) rhs.add_scaled(v, Rational(m) * Rational(g.form(a, b)) * k);
        CHECK(lhs == rhs);
      }
    }
  }

  TEST_CASE("Sugawara L0 acts by the depth") {
    for (const Rational& k : {Rational(-1), Rational(-7, 3)}) {
      VacuumModule V(3, k);
      Rng rng(5);
      for (int trial = 0; trial < 100; ++trial) {
        const int d = static_cast<int>(rng.integer(0, 5));
        std::vector<int> mu = {static_cast<int>(rng.integer(-2, 2)), static_cast<int>(rng.integer(-2, 2))};
        PBWVector v = affvoa::testing::random_homogeneous(V, rng, d, mu);
        CHECK(V.sugawara_L0(v) == Rational(d) * v);
      }
    }
  }

  TEST_CASE("central charge") {
    CHECK(central_charge(Rational(-1), 3) == -4);
    CHECK(central_charge(Rational(-7, 3), 3) == Rational(-28));
    CHECK_THROWS_AS(central_charge(Rational(-3), 3), std::domain_error);
  }

  TEST_CASE("published level -1 vectors are singular and span the solved spaces") {
    VacuumModule V(3, Rational(-1));
    PBWVector u1 = affvoa::testing::level_minus_one_u1(V);
    PBWVector u2 = affvoa::testing::level_minus_one_u2(V);
    CHECK(V.is_singular(u1, 3));
    CHECK(V.is_singular(u2, 3));
    auto s1 = V.singular_vectors(3, {2, 1});
    auto s2 = V.singular_vectors(3, {1, 2});
    REQUIRE(s1.size() == 1);
    REQUIRE(s2.size() == 1);
    CHECK(proportional(s1.front(), u1));
    CHECK(proportional(s2.front(), u2));
    CHECK(V.sugawara_L0(u1) == Rational(3) * u1);
  }

  TEST_CASE("no singular vectors at generic level") {
    VacuumModule V(3, Rational(1, 2));
    CHECK(V.singular_vectors(3, {2, 1}).empty());
    CHECK(V.singular_vectors(2, {1, 1}).empty());
  }

  TEST_CASE("sl_4 level -1 singular vector") {
    VacuumModule V(4, Rational(-1));
    auto sv = V.singular_vectors(2, {1, 2, 1});
    REQUIRE(sv.size() == 1);
    PBWVector u;
    u.add(V.parse_monomial("E[2,3](-1) E[1,4](-1)"), 1);
    u.add(V.parse_monomial("E[1,3](-1) E[2,4](-1)"), -1);
    CHECK(proportional(sv.front(), u));
  }

  TEST_CASE("sl_4 at q = 2 has one singular vector at depth 4") {
    VacuumModule V(4, Rational(-5, 2));
    auto sv = V.singular_vectors(4, {1, 2, 1});
    CHECK(sv.size() == 1);
    CHECK(V.singular_vectors(2, {1, 2, 1}).empty());
  }

  TEST_CASE("ideal slices are stable under zero modes") {
    VacuumModule V(3, Rational(-1));
    std::vector<PBWVector> gens = {affvoa::testing::level_minus_one_u1(V), affvoa::testing::level_minus_one_u2(V)};
    IdealTower tower(V, gens);
    const SlN& g = V.g();
    for (const std::vector<int>& mu : {std::vector<int>{1, 1}, std::vector<int>{2, 1}, std::vector<int>{1, 0}}) {
      const auto& slice = tower.slice(4, mu);
      for (int b = 0; b < 2 * g.num_positive_roots(); ++b) {
        std::vector<int> target = mu;
        for (int i = 0; i < 2; ++i) target[i] += g.weight(b)[i];
        const auto& image_slice = tower.slice(4, target);
        EchelonBasis span;
        for (const auto& v : image_slice) span.insert(affvoa::testing::coordinates(V, v));
        for (const auto& v : slice) {
          PBWVector w = V.apply_mode(b, 0, v);
          if (!w.is_zero()) CHECK(span.contains(affvoa::testing::coordinates(V, w)));
        }
      }
    }
    CHECK(tower.dimension(3, {2, 1}) == 1);
    CHECK(tower.dimension(2, {0, 0}) == 0);
    CHECK(tower.quotient_dimension(3, {2, 1}) == 5);
  }

  TEST_CASE("ideal tower rejects non-singular generators") {
    VacuumModule V(3, Rational(-1));
    PBWVector bad = PBWVector::monomial(V.parse_monomial("E[1,2](-1)"));
    CHECK_THROWS_AS(IdealTower(V, {bad}), std::invalid_argument);
  }
}
