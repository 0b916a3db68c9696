#include "affvoa/reports.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>

#include "affvoa/c2.hpp"
#include "affvoa/characters.hpp"
#include "affvoa/pbw.hpp"
#include "affvoa/slodowy.hpp"
#include "affvoa/zhu.hpp"

#ifndef AFFVOA_VERSION
#define AFFVOA_VERSION "unknown"
#endif

namespace affvoa {
namespace {

using nlohmann::json;

json weight_json(const std::vector<int>& w) { return json(w); }

json vector_json(const VacuumModule& module, const PBWVector& v) {
  json terms = json::array();
  for (const auto& [mono, coef] : module.serialize(v)) terms.push_back({mono, coef});
  return terms;
}

int require_m(const RunRequest& r) {
  if (!r.m) throw UsageError(r.command + " needs --m");
  if (*r.m < 0) throw UsageError("--m must be nonnegative");
  return *r.m;
}

void require_sl3(const RunRequest& r) {
  if (r.n != 3) throw UsageError(r.command + " is implemented for n = 3 only");
}

void check_estimate(const RunRequest& r, int depth, const std::vector<int>& weight, json& payload) {
  SolveEstimate est = estimate_singular_solve(r.n, depth, weight, r.max_columns);
  payload["estimate"] = {{"columns", est.columns}, {"rows", est.rows}};
  if (!est.feasible) {
    std::ostringstream msg;
    msg << "refusing a " << est.rows << " x " << est.columns << " system at depth " << depth
        << " (limit " << r.max_columns << " columns)";
    throw std::length_error(msg.str());
  }
}

// The two generators of the maximal ideal for k = -3 + 2/(2m+1): the unique singular
// vectors at depth 3(2m+1) of weights 2 alpha_1 + alpha_2 and alpha_1 + 2 alpha_2.
std::vector<PBWVector> level_generators(VacuumModule& module, int m) {
  const int depth = 3 * (2 * m + 1);
  std::vector<PBWVector> gens;
  for (const std::vector<int>& mu : {std::vector<int>{2, 1}, std::vector<int>{1, 2}}) {
    auto sv = module.singular_vectors(depth, mu);
    if (sv.size() != 1)
      throw std::runtime_error("expected one singular vector at depth " + std::to_string(depth) + ", found " +
                               std::to_string(sv.size()));
    gens.push_back(std::move(sv.front()));
  }
  return gens;
}

// p == c q for a nonzero rational c.
bool proportional(const ParamPoly& p, const ParamPoly& q) {
  if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
  const auto& [e, c] = *p.terms().begin();
  auto it = q.terms().find(e);
  if (it == q.terms().end()) return false;
  return p == (c / it->second) * q;
}

}  // namespace

Rational resolve_level(const RunRequest& r) {
  if (r.n < 2) throw UsageError("--n must be at least 2");
  int q = 0;
  if (r.q) {
    q = *r.q;
  } else if (r.m) {
    if (r.n != 3) throw UsageError("--m parametrizes n = 3 only; use --q");
    q = 2 * require_m(r) + 1;
  } else {
    throw UsageError(r.command + " needs --m or --q");
  }
  if (q <= 0) throw UsageError("--q must be positive");
  return Rational(-r.n) + Rational(r.n - 1) / Rational(q);
}

SolveEstimate estimate_singular_solve(int n, int depth, const std::vector<int>& weight, long max_columns) {
  if (static_cast<int>(weight.size()) != n - 1) throw UsageError("--weight needs n-1 coordinates");
  if (depth < 1) throw UsageError("--depth must be positive");
  CharacterTable t = vacuum_table(n, Rational(0), depth);
  SolveEstimate est;
  est.columns = t.at(depth, weight);
  for (int i = 0; i < n - 1; ++i) {
    auto up = weight;
    up[i] += 1;
    est.rows += t.at(depth, up);
  }
  auto down = weight;
  for (int& c : down) c -= 1;
  est.rows += t.at(depth - 1, down);
  est.feasible = est.columns <= max_columns;
  return est;
}

RunResult run_singular(const RunRequest& r) {
  Rational k = resolve_level(r);
  if (!r.depth) throw UsageError("singular needs --depth");
  if (static_cast<int>(r.weight.size()) != r.n - 1) throw UsageError("singular needs --weight with n-1 coordinates");
  RunResult out;
  out.statement = "singular vectors of V^k(sl_n) in the requested depth and weight space";
  json& p = out.payload;
  p["level"] = to_string(k);
  p["depth"] = *r.depth;
  p["weight"] = weight_json(r.weight);
  check_estimate(r, *r.depth, r.weight, p);

  VacuumModule module(r.n, k);
  auto vectors = module.singular_vectors(*r.depth, r.weight);
  p["dimension"] = vectors.size();
  json vs = json::array();
  for (const auto& v : vectors) vs.push_back(vector_json(module, v));
  p["vectors"] = vs;
  out.certified = !vectors.empty();

  // The ansatz checks apply to the generator of weight 2 alpha_1 + alpha_2 at m >= 1.
  const bool ansatz = r.n == 3 && r.m && *r.m >= 1 && *r.depth == 3 * (2 * *r.m + 1) &&
                      r.weight == std::vector<int>{2, 1} && vectors.size() == 1;
  if (ansatz) {
    const int m = *r.m;
    PBWVector v = normalize(module, vectors.front(), m);
    CoefficientReport rep = coefficient_report(module, v, m);
    json fam = json::object();
    for (const auto& name : ansatz_families()) {
      json vals = json::array();
      for (const auto& c : rep.families.at(name)) vals.push_back(to_string(c));
      fam[name] = vals;
    }
    json rels = json::array();
    bool all_hold = true;
    for (const auto& rc : coefficient_relations(rep)) {
      rels.push_back({{"relation", rc.relation}, {"index", rc.index}, {"value", to_string(rc.value)}});
      all_hold = all_hold && rc.value == 0;
    }
    const SlN& g = module.g();
    PBWVector lowered = module.apply_mode(g.f(1, 2), 0, module.apply_mode(g.f_theta(), 0, v));
    ParamPoly cartan = cartan_part(module, lowered);
    VarsPtr hv = cartan.vars();
    ParamPoly h1 = ParamPoly::variable(hv, "h1"), h2 = ParamPoly::variable(hv, "h2");
    ParamPoly cube = h1 * h2 * (h1 + h2), expected = ParamPoly::constant(hv, 1);
    for (int i = 0; i < 2 * m + 1; ++i) expected = expected * cube;
    const bool a_low_zero = rep.get("a", 0) == 0 && rep.get("a", 1) == 0;
    p["ansatz"] = {{"normalization", "a_" + std::to_string(2 * m) + " = 1"},
                   {"coefficients", fam},
                   {"relations", rels},
                   {"all_relations_hold", all_hold},
                   {"a0_a1_vanish", a_low_zero},
                   {"residual_in_v1", residual_in_v1(rep)},
                   {"lowered_cartan_part", cartan.to_string()},
                   {"lowered_cartan_part_expected", expected.to_string()},
                   {"lowered_cartan_matches", cartan == expected}};
    out.certified = out.certified && all_hold && a_low_zero && residual_in_v1(rep) && cartan == expected;
  }
  return out;
}

RunResult run_variety(const RunRequest& r) {
  require_sl3(r);
  const int m = require_m(r);
  Rational k = resolve_level(r);
  RunResult out;
  out.statement = m == 0 ? "associated variety of L_k(sl_3) is the closure of the semisimple sheet through h1-h2"
                         : "associated variety of L_k(sl_3) is the closure of the Jordan class of C*(h1-h2) + f_theta";
  json& p = out.payload;
  p["level"] = to_string(k);
  p["m"] = m;
  check_estimate(r, 3 * (2 * m + 1), {2, 1}, p);
  VacuumModule module(3, k);
  auto gens = level_generators(module, m);
  VarietyCertificate cert = variety_certificate(module, gens, r.seed);

  const std::set<std::string> expected_vanishing =
      m == 0 ? std::set<std::string>{"zero", "min_nilpotent", "semisimple_sheet"}
             : std::set<std::string>{"zero", "min_nilpotent", "regular_nilpotent", "semisimple_sheet", "mixed_sheet"};
  json classes = json::array();
  bool matches = cert.consistent();
  int dimension = 0;
  auto reps = sl3_class_reps();
  for (std::size_t i = 0; i < cert.classes.size(); ++i) {
    const auto& c = cert.classes[i];
    const int dim = class_dimension(module.g(), reps.at(i), r.seed);
    if (c.vanishes) dimension = std::max(dimension, dim);
    const bool expect = expected_vanishing.count(c.tag) > 0;
    matches = matches && c.vanishes == expect;
    json entry = {{"class", c.tag},
                  {"class_dimension", dim},
                  {"vanishes", c.vanishes},
                  {"expected_vanishes", expect},
                  {"conjugate_samples", c.sample_seeds.size()},
                  {"samples_vanish", c.samples_vanish}};
    if (!c.vanishes) entry["witness"] = {{"generator", c.witness_index}, {"value", c.witness}};
    classes.push_back(entry);
  }
  json generators = json::array();
  for (const auto& g : cert.generators) generators.push_back(g.to_string());
  p["generators"] = generators;
  p["classes"] = classes;
  p["variety_dimension"] = dimension;
  out.certified = matches;
  return out;
}

RunResult run_slice(const RunRequest& r) {
  require_sl3(r);
  SlN g(3);
  if (r.slice != "minimal" && r.slice != "regular") throw UsageError("--slice must be minimal or regular");
  const bool minimal = r.slice == "minimal";
  SliceFamily family = minimal ? minimal_slice(g) : regular_slice(g);
  SliceConstraints forward = intersect_with_class(family, mixed_sheet_target(g));
  SliceConstraints backward = intersect_with_class(family, mixed_sheet_target(g), true);

  RunResult out;
  out.statement = "intersection of the " + r.slice +
                  " Slodowy slice with the closure of the Jordan class of C*(h1-h2) + f_theta";
  json& p = out.payload;
  p["slice"] = r.slice;
  json cs = json::array();
  for (const auto& c : forward.constraints) cs.push_back(c.to_string());
  p["constraints"] = cs;
  p["parameters"] = forward.vars->names();

  VarsPtr v = forward.vars;
  auto var = [&](const char* name) { return ParamPoly::variable(v, name); };
  auto num = [&](long a, long b = 1) { return ParamPoly::constant(v, Rational(a) / Rational(b)); };
  std::vector<std::vector<ParamPoly>> references;
  const ParamPoly mu = var("mu");
  if (minimal) {
    const ParamPoly a = var("a");
    references.push_back({var("d") - num(3) * (mu * mu - a * a)});
    references.push_back({var("b") * var("c") - num(2) * (a - mu) * (num(2) * a + mu) * (num(2) * a + mu)});
  } else {
    references.push_back({var("a") - num(3, 4) * mu * mu});
    references.push_back({var("b") - num(1, 2) * mu * mu * mu, var("b") + num(1, 2) * mu * mu * mu});
  }
  bool reference_match = forward.constraints.size() == references.size();
  for (const auto& options : references) {
    bool found = false;
    for (const auto& ref : options)
      for (const auto& c : forward.constraints) found = found || proportional(c, ref);
    reference_match = reference_match && found;
  }
  const bool reversible = same_solution_set(forward, backward, r.seed);
  const int dim = variety_dimension(forward, r.seed);
  const int expected_dim = minimal ? 3 : 1;

  Rng rng(r.seed);
  int passed = 0;
  const int samples = 25;
  for (int i = 0; i < samples; ++i) {
    auto point = random_solution(forward, rng);
    if (membership(slice_point(family, point), Sl3Variety::MixedSheetClosure).member) ++passed;
  }
  p["matches_reference"] = reference_match;
  p["reverse_order_same_solutions"] = reversible;
  p["dimension"] = dim;
  p["expected_dimension"] = expected_dim;
  p["membership_samples"] = {{"passed", passed}, {"total", samples}};
  out.certified = reference_match && reversible && dim == expected_dim && passed == samples;
  return out;
}

RunResult run_character(const RunRequest& r) {
  require_sl3(r);
  const int m = require_m(r);
  Rational k = resolve_level(r);
  const int depth = r.depth.value_or(m == 0 ? 5 : 3 * (2 * m + 1));
  if (depth < 0) throw UsageError("--depth must be nonnegative");
  RunResult out;
  json& p = out.payload;
  p["level"] = to_string(k);
  p["depth"] = depth;
  CharacterTable formula = character_table(k, 3, depth);
  p["formula_entries"] = formula.entries.size();

  std::vector<CharacterDiffEntry> diff;
  if (m == 0) {
    out.statement = "character formula of L_k(sl_3) agrees with the quotient by the ideal of the singular vectors";
    p["reference"] = "brute_force_quotient";
    VacuumModule module(3, k);
    diff = compare(formula, brute_force_character(module, level_generators(module, 0), depth));
  } else {
    out.statement = "character formula of L_k(sl_3) departs from V^k first at the generators of the maximal ideal";
    p["reference"] = "universal_vacuum";
    diff = compare(formula, vacuum_table(3, k, depth));
  }
  json d = json::array();
  std::set<std::vector<int>> first_weights;
  int first_depth = -1;
  for (const auto& e : diff) {
    d.push_back({{"depth", e.depth}, {"weight", e.weight}, {"formula", e.left}, {"reference", e.right}});
    if (first_depth < 0 || e.depth < first_depth) {
      first_depth = e.depth;
      first_weights.clear();
    }
    if (e.depth == first_depth) first_weights.insert(e.weight);
  }
  p["diff"] = d;
  if (m == 0) {
    out.certified = diff.empty();
  } else {
    // Maximal weights of the first differing slice: no other weight there lies above them.
    std::vector<std::vector<int>> maximal;
    for (const auto& w : first_weights) {
      bool top = true;
      for (const auto& o : first_weights)
        top = top && (o == w || !(o[0] >= w[0] && o[1] >= w[1]));
      if (top) maximal.push_back(w);
    }
    p["first_diff_depth"] = first_depth;
    p["first_diff_maximal_weights"] = maximal;
    const int expected_depth = 3 * (2 * m + 1);
    if (depth < expected_depth) {
      out.certified = diff.empty();
    } else {
      out.certified = first_depth == expected_depth &&
                      maximal == std::vector<std::vector<int>>{{1, 2}, {2, 1}};
    }
  }
  return out;
}

RunResult run_zhu(const RunRequest& r) {
  require_sl3(r);
  const int m = require_m(r);
  Rational k = resolve_level(r);
  if (r.cap < 1) throw UsageError("--cap must be positive");
  RunResult out;
  out.statement = "projected weight-zero elements of the Zhu ideal vanish on the conjectured weight families";
  json& p = out.payload;
  p["level"] = to_string(k);
  p["m"] = m;
  p["cap"] = r.cap;
  check_estimate(r, 3 * (2 * m + 1), {2, 1}, p);

  VacuumModule module(3, k);
  EnvelopingAlgebra algebra(3);
  ZhuMap zhu(module, algebra);
  std::vector<EnvelopingElement> seeds;
  for (const auto& v : level_generators(module, m)) seeds.push_back(zhu.image(v));
  std::vector<ParamPoly> polys;
  std::set<std::string> seen;
  for (const auto& e : weight_zero_elements(algebra, seeds, r.cap)) {
    ParamPoly poly = hc_projection(algebra, e);
    if (poly.is_zero()) continue;
    poly = (Rational(1) / poly.terms().begin()->second) * poly;  // monic, so scalar multiples collapse
    if (seen.insert(poly.to_string()).second) polys.push_back(std::move(poly));
  }
  json pj = json::array();
  for (const auto& poly : polys) pj.push_back(poly.to_string());
  p["polynomials"] = pj;

  CharacteristicVarietyReport rep = characteristic_variety_test(polys, m, r.seed);
  json fams = json::array();
  for (const auto& f : rep.families)
    fams.push_back({{"family", f.name}, {"i", f.i}, {"vanishes", f.vanishes}, {"witness", f.witness_index}});
  json offs = json::array();
  for (const auto& w : rep.off_family)
    offs.push_back({{"weight", {to_string(w.l1), to_string(w.l2)}}, {"witness", w.witness_index}});
  p["families"] = fams;
  p["off_family"] = offs;
  out.certified = !polys.empty() && rep.all_families_vanish() && rep.all_off_family_witnessed();
  return out;
}

RunResult run_selftest(const RunRequest& r) {
  RunResult out;
  out.statement = "internal consistency of the Lie algebra, vertex algebra and slice layers";
  json checks = json::object();

  bool jacobi = true;
  for (int n : {3, 4}) {
    SlN g(n);
    for (int a = 0; a < g.dim(); ++a)
      for (int b = 0; b < g.dim(); ++b)
        for (int c = 0; c < g.dim(); ++c) {
          auto x = LieElement::basis(g, a), y = LieElement::basis(g, b), z = LieElement::basis(g, c);
          LieElement sum = bracket(g, x, bracket(g, y, z)) + bracket(g, y, bracket(g, z, x)) +
                           bracket(g, z, bracket(g, x, y));
          jacobi = jacobi && sum.is_zero();
        }
  }
  checks["jacobi"] = jacobi;
  checks["central_charge"] = central_charge(Rational(-1), 3) == -4;

  VacuumModule module(3, Rational(-1));
  auto u = module.singular_vectors(3, {2, 1});
  checks["level_minus_one_singular"] = u.size() == 1;

  EnvelopingAlgebra algebra(3);
  ZhuMap zhu(module, algebra);
  Rng rng(r.seed);
  bool closed = true;
  for (int t = 0; t < 20; ++t) {
    std::vector<std::pair<BasisElement, int>> factors;
    const int len = static_cast<int>(rng.integer(1, 3));
    for (int i = 0; i < len; ++i)
      factors.emplace_back(module.g().basis(static_cast<int>(rng.integer(0, module.g().dim() - 1))),
                           static_cast<int>(rng.integer(1, 2)));
    Monomial mono = module.make_monomial(factors);
    closed = closed && zhu.image(mono) == zhu_closed_form(module, algebra, mono);
  }
  checks["zhu_closed_form"] = closed;

  SlN g(3);
  checks["minimal_slice_dimension"] = variety_dimension(intersect_with_class(minimal_slice(g), mixed_sheet_target(g)), r.seed) == 3;

  out.certified = std::all_of(checks.begin(), checks.end(), [](const json& v) { return v.get<bool>(); });
  out.payload["checks"] = checks;
  return out;
}

RunResult run_command(const RunRequest& r) {
  if (r.command == "singular") return run_singular(r);
  if (r.command == "variety") return run_variety(r);
  if (r.command == "slice") return run_slice(r);
  if (r.command == "character") return run_character(r);
  if (r.command == "zhu") return run_zhu(r);
  if (r.command == "selftest") return run_selftest(r);
  throw UsageError("unknown command '" + r.command + "'");
}

std::string sha256_hex(const json& value) {
  const std::string text = value.dump();
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(text.data(), text.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 digest failed");
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  return out.str();
}

json result_document(const RunRequest& r, const RunResult& result) {
  json params = {{"n", r.n}, {"seed", r.seed}};
  if (r.m) params["m"] = *r.m;
  if (r.q) params["q"] = *r.q;
  if (r.m || r.q) params["k"] = to_string(resolve_level(r));
  if (r.depth) params["depth"] = *r.depth;
  if (!r.weight.empty()) params["weight"] = r.weight;
  if (r.command == "slice") params["slice"] = r.slice;
  if (r.command == "zhu") params["cap"] = r.cap;
  return {{"command", r.command},
          {"parameters", params},
          {"statement", result.statement},
          {"certified", result.certified},
          {"result", result.payload}};
}

json full_report(const RunRequest& r, const RunResult& result, double wall_seconds) {
  json doc = result_document(r, result);
  doc["manifest"] = {{"version", library_version()}, {"wall_time_seconds", wall_seconds}, {"digest", sha256_hex(doc)}};
  return doc;
}

std::string library_version() { return AFFVOA_VERSION; }

}  // namespace affvoa
