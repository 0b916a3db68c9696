// Acceptance run: one PASS/FAIL line per criterion, with wall time against its budget.
// Exit status is the number of failed criteria (capped at 125).

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "affvoa/affine_weyl.hpp"
#include "affvoa/c2.hpp"
#include "affvoa/lie.hpp"
#include "affvoa/pbw.hpp"
#include "affvoa/reports.hpp"
#include "helpers.hpp"

using namespace affvoa;
using affvoa::testing::proportional;

namespace {

constexpr std::uint64_t kSeed = 20240601;

// Every report produced along the way, so the determinism criterion can replay them.
struct Recorded {
  RunRequest request;
  std::string dump;
};
std::vector<Recorded> recorded;

RunResult run_and_record(const RunRequest& r) {
  RunResult res = run_command(r);
  recorded.push_back({r, result_document(r, res).dump()});
  return res;
}

RunRequest make_request(const std::string& command) {
  RunRequest r;
  r.command = command;
  r.seed = kSeed;
  return r;
}

class Check {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  bool ok() const { return failures_.empty(); }
  std::string summary() const {
    std::string out;
    for (const auto& f : failures_) out += (out.empty() ? "" : "; ") + f;
    return out;
  }

 private:
  std::vector<std::string> failures_;
};

// ---- criteria ----

void lie_identities(Check& c) {
  for (int n : {3, 4}) {
    SlN g(n);
    bool jacobi = true, invariant = true;
    for (int a = 0; a < g.dim(); ++a)
      for (int b = 0; b < g.dim(); ++b)
        for (int d = 0; d < g.dim(); ++d) {
          auto x = LieElement::basis(g, a), y = LieElement::basis(g, b), z = LieElement::basis(g, d);
          jacobi = jacobi && (bracket(g, x, bracket(g, y, z)) + bracket(g, y, bracket(g, z, x)) +
                              bracket(g, z, bracket(g, x, y)))
                                 .is_zero();
          invariant = invariant && normalized_form(g, bracket(g, x, y), z) == normalized_form(g, x, bracket(g, y, z));
        }
    c.require(jacobi, "Jacobi fails for n=" + std::to_string(n));
    c.require(invariant, "form not invariant for n=" + std::to_string(n));
  }
}

AffineWeight level_weight(int n, int q) {
  return (Rational(-n) + Rational(n - 1) / Rational(q)) * AffineWeight::lambda0(n);
}
AffineWeight beta0(int n, int q) { return Rational(q) * AffineWeight::delta(n) - AffineWeight::theta(n); }
AffineWeylElement refl(const AffineWeight& a) { return AffineWeylElement::reflection(a); }
AffineWeylElement trans(const AffineWeight& g) { return AffineWeylElement::translation(g); }

void weight_identities(Check& c) {
  const int n = 3;
  auto a1 = AffineWeight::alpha(n, 1), a2 = AffineWeight::alpha(n, 2);
  for (int m : {0, 1, 2}) {
    const int q = 2 * m + 1;
    AffineWeight kl = level_weight(n, q);
    const Rational k = kl.lambda0_coeff();
    AffineWeight w21(n, k, Rational(-3 * q), {Rational(2), Rational(1)});
    AffineWeight w12(n, k, Rational(-3 * q), {Rational(1), Rational(2)});
    c.require((refl(a2) * trans(Rational(q) * a1)).twisted(kl) == w21, "weight 2a1+a2 at m=" + std::to_string(m));
    c.require((refl(a1) * trans(Rational(q) * a2)).twisted(kl) == w12, "weight a1+2a2 at m=" + std::to_string(m));
  }
  for (auto [nn, q] : {std::pair{4, 2}, std::pair{5, 2}}) {
    AffineWeight kl = level_weight(nn, q);
    AffineWeight beta(nn);
    for (int i = 2; i <= nn - 2; ++i) beta += AffineWeight::alpha(nn, i);
    AffineWeylElement w = refl(AffineWeight::theta(nn)) * refl(AffineWeight::alpha(nn, 1)) *
                          refl(AffineWeight::alpha(nn, nn - 1)) * trans(Rational(-q) * beta);
    AffineWeight want = kl - Rational(2 * q) * AffineWeight::delta(nn) + AffineWeight::theta(nn) + beta;
    c.require(w.twisted(kl) == want, "higher-rank weight for n=" + std::to_string(nn));
  }
}

void coxeter_identities(Check& c) {
  for (int q : {2, 3, 5}) {
    auto w3 = refl(beta0(3, q)) * refl(AffineWeight::alpha(3, 1));
    c.require(w3.pow(3).same_action(AffineWeylElement(3)), "order-3 relation, q=" + std::to_string(q));
    auto w4 = refl(beta0(4, q)) * refl(AffineWeight::alpha(4, 2));
    c.require(w4.pow(2).same_action(AffineWeylElement(4)), "commuting relation for n=4, q=" + std::to_string(q));
    for (int n : {3, 4})
      c.require((refl(beta0(n, q)) * refl(AffineWeight::theta(n))).same_action(trans(Rational(q) * AffineWeight::theta(n))),
                "translation identity n=" + std::to_string(n) + " q=" + std::to_string(q));
  }
}

void level_minus_one_vectors(Check& c) {
  VacuumModule V(3, Rational(-1));
  auto s1 = V.singular_vectors(3, {2, 1});
  auto s2 = V.singular_vectors(3, {1, 2});
  c.require(s1.size() == 1 && proportional(s1.front(), affvoa::testing::level_minus_one_u1(V)), "u1 mismatch");
  c.require(s2.size() == 1 && proportional(s2.front(), affvoa::testing::level_minus_one_u2(V)), "u2 mismatch");

  VacuumModule W(4, Rational(-1));
  auto s = W.singular_vectors(2, {1, 2, 1});
  PBWVector u;
  u.add(W.parse_monomial("E[2,3](-1) E[1,4](-1)"), 1);
  u.add(W.parse_monomial("E[1,3](-1) E[2,4](-1)"), -1);
  c.require(s.size() == 1 && proportional(s.front(), u), "sl_4 vector mismatch");

  for (std::vector<int> w : {std::vector<int>{2, 1}, std::vector<int>{1, 2}}) {
    auto r = make_request("singular");
    r.m = 0;
    r.depth = 3;
    r.weight = w;
    c.require(run_and_record(r).certified, "singular report not certified");
  }
  auto r4 = make_request("singular");
  r4.n = 4;
  r4.q = 1;
  r4.depth = 2;
  r4.weight = {1, 2, 1};
  c.require(run_and_record(r4).payload["dimension"] == 1, "sl_4 report dimension");
}

void level_minus_seven_thirds_vector(Check& c) {
  auto r = make_request("singular");
  r.m = 1;
  r.depth = 9;
  r.weight = {2, 1};
  RunResult res = run_and_record(r);
  c.require(res.payload["dimension"] == 1, "nullspace at depth 9 is not one-dimensional");
  const auto& ansatz = res.payload["ansatz"];
  c.require(!ansatz.is_null(), "no coefficient analysis");
  if (!ansatz.is_null()) {
    c.require(ansatz["all_relations_hold"] == true, "coefficient relations");
    c.require(ansatz["a0_a1_vanish"] == true, "a0 or a1 nonzero");
    c.require(ansatz["lowered_cartan_matches"] == true, "Cartan part of the lowered vector");
  }
  for (int depth : {3, 6}) {
    auto e = make_request("singular");
    e.m = 1;
    e.depth = depth;
    e.weight = {2, 1};
    c.require(run_and_record(e).payload["dimension"] == 0, "nonempty nullspace at depth " + std::to_string(depth));
  }
}

void c2_evaluations(Check& c) {
  VacuumModule V(3, Rational(-1));
  const SlN& g = V.g();
  VarsPtr vars = symbol_vars(g);
  auto v = [&](const char* name) { return ParamPoly::variable(vars, name); };
  auto e1 = v("e12"), e2 = v("e23"), eT = v("e13"), f1 = v("f12"), f2 = v("f23"), h1 = v("h1"), h2 = v("h2");
  PBWVector u1 = affvoa::testing::level_minus_one_u1(V), u2 = affvoa::testing::level_minus_one_u2(V);
  c.require(symbol(V, u1) == -(e1 * e1 * e2) + e1 * eT * h2 + eT * eT * f2, "symbol(u1) != p1");
  c.require(symbol(V, u2) == e1 * e2 * e2 + e2 * eT * h1 - eT * eT * f1, "symbol(u2) != p2");

  auto p = level_minus_one_symbols(V, u1, u2);
  VarsPtr none = make_vars({});
  MatrixRep reg = to_matrix(g, LieElement::basis(g, g.f_simple(1)) + LieElement::basis(g, g.f_simple(2)), none);
  c.require(evaluate_symbol(g, p[0], reg) == ParamPoly::constant(none, -1), "p1 at the regular nilpotent");

  VarsPtr ab = make_vars({"a", "b"});
  MatrixRep h(3, ab);
  ParamPoly a = ParamPoly::variable(ab, "a"), b = ParamPoly::variable(ab, "b");
  add_scaled(h, g, LieElement::basis(g, g.h(1)), a);
  add_scaled(h, g, LieElement::basis(g, g.h(2)), b);
  c.require(evaluate_symbol(g, p[3], h) == (Rational(2) * a - b) * (Rational(2) * b - a) * (a + b), "p4 on the Cartan");

  VarsPtr tv = make_vars({"t"});
  MatrixRep mixed(3, tv);
  ParamPoly t = ParamPoly::variable(tv, "t");
  add_scaled(mixed, g, LieElement::basis(g, g.h(1)) - LieElement::basis(g, g.h(2)), t);
  add_scaled(mixed, g, LieElement::basis(g, g.f_theta()), ParamPoly::constant(tv, 1));
  ParamPoly value = evaluate_symbol(g, p[2], mixed);
  const bool multiple_of_t2 = !value.is_zero() && value.terms().size() == 1 && value.degree_in("t") == 2 &&
                              value.total_degree() == 2;
  c.require(multiple_of_t2, "p3 on the mixed sheet is " + value.to_string());
}

void variety_certificates(Check& c) {
  for (int m : {0, 1}) {
    auto r = make_request("variety");
    r.m = m;
    RunResult res = run_and_record(r);
    c.require(res.certified, "verdict table at m=" + std::to_string(m));
    for (const auto& cls : res.payload["classes"])
      if (cls["vanishes"] == true)
        c.require(cls["conjugate_samples"] == 20 && cls["samples_vanish"] == true,
                  "conjugate samples for " + cls["class"].get<std::string>());
    if (m == 0) c.require(res.payload["variety_dimension"] == 5, "variety dimension at m=0");
  }
}

void slice_constraints(Check& c) {
  for (const char* slice : {"minimal", "regular"}) {
    auto r = make_request("slice");
    r.slice = slice;
    RunResult res = run_and_record(r);
    c.require(res.payload["matches_reference"] == true, std::string(slice) + " constraints");
    c.require(res.payload["dimension"] == res.payload["expected_dimension"], std::string(slice) + " dimension");
    c.require(res.payload["membership_samples"]["passed"] == 25, std::string(slice) + " membership samples");
    c.require(res.certified, std::string(slice) + " not certified");
  }
}

void character_cross_check(Check& c) {
  auto r0 = make_request("character");
  r0.m = 0;
  r0.depth = 5;
  RunResult res0 = run_and_record(r0);
  c.require(res0.certified && res0.payload["diff"].empty(), "level -1 diff is not empty");

  auto r1 = make_request("character");
  r1.m = 1;
  r1.depth = 9;
  RunResult res1 = run_and_record(r1);
  c.require(res1.payload["first_diff_depth"] == 9, "first difference is not at depth 9");
  c.require(res1.payload["first_diff_maximal_weights"] == nlohmann::json{{1, 2}, {2, 1}},
            "differing slice is not topped by the generator weights");
  c.require(res1.certified, "level -7/3 character not certified");
}

void sugawara(Check& c) {
  for (const Rational& k : {Rational(-1), Rational(-7, 3)}) {
    VacuumModule V(3, k);
    Rng rng(kSeed);
    int good = 0, tried = 0;
    while (tried < 100) {
      const int d = static_cast<int>(rng.integer(0, 5));
      std::vector<int> mu = {static_cast<int>(rng.integer(-2, 2)), static_cast<int>(rng.integer(-2, 2))};
      PBWVector v = affvoa::testing::random_homogeneous(V, rng, d, mu);
      if (v.is_zero()) continue;
      ++tried;
      if (V.sugawara_L0(v) == Rational(d) * v) ++good;
    }
    c.require(good == 100, "L0 fails on " + std::to_string(100 - good) + " vectors at k=" + to_string(k));
  }
  c.require(central_charge(Rational(-1), 3) == -4, "central charge at k=-1");
}

void zhu_projection(Check& c) {
  auto r = make_request("zhu");
  r.m = 0;
  r.cap = 6;
  RunResult res = run_and_record(r);
  bool families = !res.payload["families"].empty();
  for (const auto& f : res.payload["families"]) families = families && f["vanishes"] == true;
  int witnessed = 0;
  for (const auto& w : res.payload["off_family"]) witnessed += w["witness"].get<int>() >= 0;
  c.require(families, "a family does not vanish");
  c.require(witnessed == 50 && res.payload["off_family"].size() == 50,
            std::to_string(witnessed) + "/50 off-family witnesses");
}

void determinism(Check& c) {
  for (const auto& rec : recorded) {
    const std::string again = result_document(rec.request, run_command(rec.request)).dump();
    c.require(again == rec.dump, "replay differs for " + rec.request.command);
  }
  c.require(!recorded.empty(), "nothing to replay");
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<void(Check&)> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Chevalley basis Jacobi and form invariance", 1, lie_identities},
      {2, "twisted weights of the ideal generators", 1, weight_identities},
      {3, "Coxeter and translation identities", 1, coxeter_identities},
      {4, "level -1 singular vectors", 10, level_minus_one_vectors},
      {5, "level -7/3 singular vector and coefficients", 600, level_minus_seven_thirds_vector},
      {6, "C2 symbols and evaluations", 5, c2_evaluations},
      {7, "associated variety certificates", 900, variety_certificates},
      {8, "Slodowy slice constraints", 30, slice_constraints},
      {9, "character formula cross-check", 1200, character_cross_check},
      {10, "Sugawara L0 and central charge", 10, sugawara},
      {11, "Harish-Chandra projection of the Zhu ideal", 300, zhu_projection},
      // Replays every report above; the budget covers the replay.
      {12, "deterministic reports", 1800, determinism},
  };
  int failed = 0;
  for (const auto& crit : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      crit.body(check);
    } catch (const std::exception& e) {
      check.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    check.require(secs <= crit.budget_seconds, "over the time budget");
    const bool ok = check.ok();
    failed += !ok;
    std::printf("%s criterion %2d: %s (%.2f s, budget %.0f s)%s%s\n", ok ? "PASS" : "FAIL", crit.id, crit.name, secs,
                crit.budget_seconds, ok ? "" : " -- ", check.summary().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed > 125 ? 125 : failed;
}
