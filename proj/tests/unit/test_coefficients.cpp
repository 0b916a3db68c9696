#include <doctest.h>

#include "affvoa/pbw.hpp"

using namespace affvoa;

TEST_SUITE("pbw_vertex") {
  TEST_CASE("ansatz monomials carry the expected weight and depth") {
    VacuumModule V(3, Rational(-7, 3));
    const int m = 1;
    for (const auto& fam : ansatz_families())
      for (int i = 0; i <= ansatz_top_index(fam, m); ++i) {
        Monomial mono = ansatz_monomial(V, fam, i, m);
        CHECK(VacuumModule::depth(mono) == 9);
        CHECK(V.weight(mono) == std::vector<int>{2, 1});
      }
  }

  TEST_CASE("level -7/3 generator satisfies every coefficient relation") {
    VacuumModule V(3, Rational(-7, 3));
    auto sv = V.singular_vectors(9, {2, 1});
    REQUIRE(sv.size() == 1);
    PBWVector v = normalize(V, sv.front(), 1);
    CoefficientReport rep = coefficient_report(V, v, 1);
    CHECK(rep.get("a", 2) == 1);
    CHECK(rep.get("a", 0) == 0);
    CHECK(rep.get("a", 1) == 0);
    for (const auto& rc : coefficient_relations(rep)) {
      INFO(rc.relation << "[" << rc.index << "]");
      CHECK(rc.value == 0);
    }
    CHECK(residual_in_v1(rep));

    const SlN& g = V.g();
    PBWVector lowered = V.apply_mode(g.f_simple(1), 0, V.apply_mode(g.f_theta(), 0, v));
    ParamPoly c = cartan_part(V, lowered);
    ParamPoly h1 = ParamPoly::variable(c.vars(), "h1"), h2 = ParamPoly::variable(c.vars(), "h2");
    CHECK(c == (h1 * h2 * (h1 + h2)).pow(3));

    CHECK(V.singular_vectors(3, {2, 1}).empty());
    CHECK(V.singular_vectors(6, {2, 1}).empty());
  }

  TEST_CASE("normalization refuses a vanishing leading coefficient") {
    VacuumModule V(3, Rational(-7, 3));
    PBWVector v = PBWVector::monomial(ansatz_monomial(V, "x", 0, 1));
    CHECK_THROWS_AS(normalize(V, v, 1), std::domain_error);
  }
}
