#include <doctest.h>

#include "affvoa/zhu.hpp"
#include "helpers.hpp"

using namespace affvoa;

namespace {

Monomial random_monomial(VacuumModule& V, Rng& rng, int max_factors, int max_depth) {
  std::vector<std::pair<BasisElement, int>> factors;
  const int len = static_cast<int>(rng.integer(1, max_factors));
  for (int i = 0; i < len; ++i)
    factors.emplace_back(V.g().basis(static_cast<int>(rng.integer(0, V.g().dim() - 1))),
                         static_cast<int>(rng.integer(1, max_depth)));
  return V.make_monomial(factors);
}

EnvelopingElement word(std::initializer_list<int> letters) {
  EnvelopingElement e;
  e.add(Word(letters), 1);
  return e;
}

}  // namespace

TEST_SUITE("zhu_ideal") {
  TEST_CASE("PBW straightening in U(sl_3)") {
    EnvelopingAlgebra U(3);
    const SlN& g = U.g();
    const int e1 = g.e_simple(1), f1 = g.f_simple(1), h1 = g.h(1);
    EnvelopingElement ef = U.multiply(U.generator(e1), U.generator(f1));
    EnvelopingElement want = word({f1, e1});
    want.add({h1}, 1);
    CHECK(ef == want);
    CHECK(U.adjoint(e1, U.generator(f1)) == U.generator(h1));
    CHECK(U.weight(ef) == std::vector<int>{0, 0});
    CHECK(U.to_string(ef) == "F[1,2] E[1,2] + H[1]");
  }

  TEST_CASE("multiplication is associative") {
    EnvelopingAlgebra U(3);
    Rng rng(4);
    auto random_element = [&] {
      EnvelopingElement x;
      for (int t = 0; t < 3; ++t) {
        Word w;
        for (int i = 0, len = static_cast<int>(rng.integer(1, 3)); i < len; ++i)
          w.push_back(static_cast<int>(rng.integer(0, 7)));
        EnvelopingElement m = U.one();
        for (int letter : w) m = U.multiply(m, U.generator(letter));
        x.add_scaled(m, rng.nonzero_rational(3, 2));
      }
      return x;
    };
    for (int t = 0; t < 10; ++t) {
      auto a = random_element(), b = random_element(), c = random_element();
      CHECK(U.multiply(U.multiply(a, b), c) == U.multiply(a, U.multiply(b, c)));
    }
  }

  TEST_CASE("base cases of the Zhu map") {
    VacuumModule V(3, Rational(-1));
    EnvelopingAlgebra U(3);
    ZhuMap Z(V, U);
    const int x = V.g().e_theta();
    CHECK(Z.image(V.parse_monomial("E[1,3](-1)")) == U.generator(x));
    EnvelopingElement neg;
    neg.add_scaled(U.generator(x), -1);
    CHECK(Z.image(V.parse_monomial("E[1,3](-2)")) == neg);
    CHECK(Z.image(V.parse_monomial("E[1,3](-3)")) == U.generator(x));
    CHECK(Z.image(V.parse_monomial("1")) == U.one());
  }

  TEST_CASE("recursion agrees with the closed form on monomials") {
    VacuumModule V(3, Rational(-7, 3));
    EnvelopingAlgebra U(3);
    ZhuMap Z(V, U);
    Rng rng(12);
    for (int t = 0; t < 60; ++t) {
      Monomial m = random_monomial(V, rng, 4, 3);
      INFO(V.to_string(m));
      CHECK(Z.image(m) == zhu_closed_form(V, U, m));
    }
  }

  TEST_CASE("two reduction orders agree") {
    VacuumModule V(3, Rational(-1));
    EnvelopingAlgebra U(3);
    ZhuMap Z(V, U);
    Rng rng(31);
    for (int t = 0; t < 40; ++t) {
      PBWVector v;
      for (int i = 0; i < 3; ++i) v.add(random_monomial(V, rng, 4, 2), rng.nonzero_rational(4, 3));
      CHECK(Z.image(v) == Z.image_deepest_first(v));
    }
  }

  TEST_CASE("the Zhu map respects weights") {
    VacuumModule V(3, Rational(-1));
    EnvelopingAlgebra U(3);
    ZhuMap Z(V, U);
    EnvelopingElement z1 = Z.image(affvoa::testing::level_minus_one_u1(V));
    CHECK(z1.degree() == 3);
    CHECK(U.weight(z1) == std::vector<int>{2, 1});
    Rng rng(2);
    for (int t = 0; t < 20; ++t) {
      Monomial m = random_monomial(V, rng, 3, 2);
      EnvelopingElement img = Z.image(m);
      if (!img.is_zero()) CHECK(U.weight(img) == V.weight(m));
    }
  }

  TEST_CASE("star products map to products") {
    VacuumModule V(3, Rational(-7, 3));
    EnvelopingAlgebra U(3);
    ZhuMap Z(V, U);
    Rng rng(8);
    const PBWVector one = PBWVector::monomial({});
    for (int t = 0; t < 15; ++t) {
      PBWVector b;
      for (int i = 0; i < 2; ++i) b.add(random_monomial(V, rng, 3, 2), rng.nonzero_rational(3, 2));
      const int x = static_cast<int>(rng.integer(0, 7)), y = static_cast<int>(rng.integer(0, 7));
      CHECK(Z.image(star_current(V, x, b)) == U.multiply(U.generator(x), Z.image(b)));
      PBWVector a = V.apply_mode(x, -1, V.apply_mode(y, -1, one));
      CHECK(Z.image(star_pair(V, x, y, b)) == U.multiply(Z.image(a), Z.image(b)));
    }
  }

  TEST_CASE("Harish-Chandra projection") {
    EnvelopingAlgebra U(3);
    const SlN& g = U.g();
    const int h1 = g.h(1), h2 = g.h(2);
    EnvelopingElement cubic = U.multiply(U.multiply(U.generator(h1), U.generator(h2)),
                                         [&] {
                                           EnvelopingElement s = U.generator(h1);
                                           s.add({h2}, 1);
                                           return s;
                                         }());
    ParamPoly p = hc_projection(U, cubic);
    ParamPoly l1 = ParamPoly::variable(p.vars(), "l1"), l2 = ParamPoly::variable(p.vars(), "l2");
    CHECK(p == l1 * l2 * (l1 + l2));
    CHECK(hc_projection(U, U.multiply(U.generator(g.e_simple(1)), U.generator(g.f_simple(1)))) == l1);
    CHECK(hc_projection(U, U.multiply(U.generator(g.f_simple(1)), U.generator(g.e_simple(1)))).is_zero());
    CHECK_THROWS_AS(hc_projection(U, U.generator(g.e_simple(1))), std::invalid_argument);
  }

  TEST_CASE("projection is multiplicative on weight-zero elements") {
    EnvelopingAlgebra U(3);
    const SlN& g = U.g();
    Rng rng(14);
    auto random_zero_weight = [&] {
      EnvelopingElement x;
      for (int t = 0; t < 3; ++t) {
        EnvelopingElement m = U.one();
        for (int i = 0, pairs = static_cast<int>(rng.integer(0, 2)); i < pairs; ++i) {
          const int r = static_cast<int>(rng.integer(0, g.num_positive_roots() - 1));
          m = U.multiply(m, U.multiply(U.generator(r), U.generator(r + g.num_positive_roots())));
        }
        m = U.multiply(m, U.generator(g.h(static_cast<int>(rng.integer(1, 2)))));
        x.add_scaled(m, rng.nonzero_rational(3, 2));
      }
      return x;
    };
    for (int t = 0; t < 5; ++t) {
      auto u = random_zero_weight(), v = random_zero_weight();
      CHECK(hc_projection(U, U.multiply(u, v)) == hc_projection(U, u) * hc_projection(U, v));
    }
  }

  TEST_CASE("weight-zero elements") {
    VacuumModule V(3, Rational(-1));
    EnvelopingAlgebra U(3);
    ZhuMap Z(V, U);
    CHECK(weight_zero_elements(U, {}, 6).empty());
    std::vector<EnvelopingElement> seeds = {Z.image(affvoa::testing::level_minus_one_u1(V)),
                                            Z.image(affvoa::testing::level_minus_one_u2(V))};
    auto elems = weight_zero_elements(U, seeds, 3);
    CHECK_FALSE(elems.empty());
    for (const auto& e : elems) {
      CHECK(U.weight(e) == std::vector<int>{0, 0});
      CHECK(e.degree() <= 3);
    }
  }

  TEST_CASE("conjectured families at m = 0 and m = 1") {
    auto f0 = conjectured_families(0);
    CHECK(f0.size() == 3);
    auto f1 = conjectured_families(1);
    CHECK(f1.size() == 9);
    CHECK_THROWS(conjectured_families(-1));
  }

  TEST_CASE("characteristic variety test at m = 0") {
    VacuumModule V(3, Rational(-1));
    EnvelopingAlgebra U(3);
    ZhuMap Z(V, U);
    std::vector<EnvelopingElement> seeds = {Z.image(affvoa::testing::level_minus_one_u1(V)),
                                            Z.image(affvoa::testing::level_minus_one_u2(V))};
    std::vector<ParamPoly> polys;
    for (const auto& e : weight_zero_elements(U, seeds, 6)) {
      ParamPoly p = hc_projection(U, e);
      if (!p.is_zero()) polys.push_back(p);
    }
    REQUIRE_FALSE(polys.empty());
    auto rep = characteristic_variety_test(polys, 0, 99);
    CHECK(rep.all_families_vanish());
    CHECK(rep.off_family.size() == 50);
    CHECK(rep.all_off_family_witnessed());
    bool witness = false;
    for (const auto& p : polys) witness = witness || p.evaluate({{"l1", Rational(3)}, {"l2", Rational(5)}}) != 0;
    CHECK(witness);
    // l1 l2 (l1 + l2 + 1) cuts out exactly the three lines
    ParamPoly l1 = ParamPoly::variable(polys.front().vars(), "l1"), l2 = ParamPoly::variable(polys.front().vars(), "l2");
    ParamPoly cubic = l1 * l2 * (l1 + l2 + ParamPoly::constant(l1.vars(), 1));
    bool has_cubic = false;
    for (const auto& p : polys) has_cubic = has_cubic || p == cubic || p == -cubic;
    CHECK(has_cubic);
  }
}
