#include "affvoa/c2.hpp"

#include <deque>
#include <stdexcept>

#include "affvoa/linalg.hpp"

namespace affvoa {
namespace {

// Drops the trailing "lambda" variable of a char_poly coefficient (which no longer contains it).
ParamPoly drop_lambda(const ParamPoly& p, const VarsPtr& vars) {
  ParamPoly r(vars);
  for (const auto& [e, c] : p.terms()) r.add_term(Exponents(e.begin(), e.end() - 1), c);
  return r;
}

void require_3x3(int n) {
  if (n != 3) throw std::invalid_argument("only sl_3 is supported here");
}

QMatrix commutator(const QMatrix& a, const QMatrix& b) { return a * b - b * a; }

Rational det3(const QMatrix& x) {
  return x(0, 0) * (x(1, 1) * x(2, 2) - x(1, 2) * x(2, 1)) - x(0, 1) * (x(1, 0) * x(2, 2) - x(1, 2) * x(2, 0)) +
         x(0, 2) * (x(1, 0) * x(2, 1) - x(1, 1) * x(2, 0));
}

std::vector<Rational> pairings(const SlN& g, const QMatrix& x) {
  std::vector<Rational> out;
  for (int b = 0; b < g.dim(); ++b) out.push_back(trace(x * g.matrix(b)));
  return out;
}

Rational evaluate_at(const SlN& g, const ParamPoly& p, const QMatrix& x) {
  auto values = pairings(g, x);
  std::map<std::string, Rational> point;
  for (int b = 0; b < g.dim(); ++b) point[p.vars()->names()[b]] = values[b];
  return p.evaluate(point);
}

}  // namespace

VarsPtr symbol_vars(const SlN& g) {
  std::vector<std::string> names;
  for (const auto& b : g.basis()) names.push_back(b.variable_name());
  return make_vars(names);
}

ParamPoly symbol(const VacuumModule& module, const PBWVector& v) {
  const SlN& g = module.g();
  ParamPoly p(symbol_vars(g));
  for (const auto& [m, c] : v.terms()) {
    Exponents e(g.dim(), 0);
    bool keep = true;
    for (ModeCode code : m) {
      if (code_depth(code) != 1) {
        keep = false;
        break;
      }
      e[code_basis(code)] += 1;
    }
    if (keep) p.add_term(e, c);
  }
  return p;
}

ParamPoly poisson_bracket(const SlN& g, const ParamPoly& a, const ParamPoly& b) {
  const auto& names = a.vars()->names();
  if (static_cast<int>(names.size()) != g.dim()) throw std::invalid_argument("polynomial is not over the symbol variables");
  std::vector<ParamPoly> linear;
  for (int i = 0; i < g.dim(); ++i) linear.push_back(ParamPoly::variable(a.vars(), names[i]));
  ParamPoly out(a.vars());
  std::vector<ParamPoly> db;
  for (int j = 0; j < g.dim(); ++j) db.push_back(b.derivative(names[j]));
  for (int i = 0; i < g.dim(); ++i) {
    ParamPoly da = a.derivative(names[i]);
    if (da.is_zero()) continue;
    for (int j = 0; j < g.dim(); ++j) {
      if (db[j].is_zero()) continue;
      ParamPoly br(a.vars());
      for (const auto& [t, s] : g.bracket(i, j)) br += Rational(s) * linear[t];
      if (!br.is_zero()) out += da * db[j] * br;
    }
  }
  return out;
}

ParamPoly evaluate_symbol(const SlN& g, const ParamPoly& p, const MatrixRep& x) {
  if (static_cast<int>(p.vars()->size()) != g.dim()) throw std::invalid_argument("polynomial is not over the symbol variables");
  return p.substitute(pairings_with_basis(g, x));
}

std::vector<ParamPoly> level_minus_one_symbols(VacuumModule& module, const PBWVector& u1, const PBWVector& u2) {
  const SlN& g = module.g();
  PBWVector x = module.apply_mode(g.f_simple(1), 0, u1);
  PBWVector y = module.apply_mode(g.f_simple(1), 0, module.apply_mode(g.f_theta(), 0, u1));
  return {symbol(module, u1), symbol(module, u2), symbol(module, x), symbol(module, y)};
}

std::vector<ClassRep> sl3_class_reps() {
  SlN g(3);
  auto none = make_vars({});
  auto t_vars = make_vars({"t"});
  auto ab_vars = make_vars({"a", "b"});
  auto lie = [&](int idx) { return LieElement::basis(g, idx); };
  LieElement lambda = lie(g.h(1)) - lie(g.h(2));

  std::vector<ClassRep> reps;
  reps.push_back({"zero", MatrixRep(3, none), 0});
  reps.push_back({"min_nilpotent", to_matrix(g, lie(g.f_theta()), none), 0});
  reps.push_back({"regular_nilpotent", to_matrix(g, lie(g.f_simple(1)) + lie(g.f_simple(2)), none), 0});

  MatrixRep sheet(3, t_vars);
  add_scaled(sheet, g, lambda, ParamPoly::variable(t_vars, "t"));
  reps.push_back({"semisimple_sheet", sheet, 1});

  MatrixRep mixed = sheet;
  add_scaled(mixed, g, lie(g.f_theta()), ParamPoly::constant(t_vars, 1));
  reps.push_back({"mixed_sheet", mixed, 1});

  MatrixRep cartan(3, ab_vars);
  add_scaled(cartan, g, lie(g.h(1)), ParamPoly::variable(ab_vars, "a"));
  add_scaled(cartan, g, lie(g.h(2)), ParamPoly::variable(ab_vars, "b"));
  reps.push_back({"generic_cartan", cartan, 2});
  return reps;
}

std::string to_string(Sl3Variety v) {
  switch (v) {
    case Sl3Variety::NilpotentCone: return "nilpotent_cone";
    case Sl3Variety::MinimalOrbitClosure: return "min_orbit_closure";
    case Sl3Variety::SemisimpleSheetClosure: return "semisimple_sheet_closure";
    case Sl3Variety::MixedSheetClosure: return "mixed_sheet_closure";
  }
  return "unknown";
}

Membership membership(const QMatrix& x, Sl3Variety target) {
  if (x.rows != 3 || x.cols != 3) throw std::invalid_argument("membership predicates are defined for 3x3 matrices");
  if (trace(x) != 0) throw std::invalid_argument("matrix is not traceless");
  const Rational p = -trace(x * x) / 2;
  const Rational q = -det3(x);
  switch (target) {
    case Sl3Variety::NilpotentCone:
      return {p == 0 && q == 0, "p=" + to_string(p) + ", q=" + to_string(q)};
    case Sl3Variety::MinimalOrbitClosure:
      return {x * x == QMatrix(3, 3), "rank=" + std::to_string(rank(x))};
    case Sl3Variety::SemisimpleSheetClosure: {
      // (lambda - t)^2 (lambda + 2t) = lambda^3 - 3t^2 lambda + 2t^3.
      Rational t = p == 0 ? Rational(0) : Rational(-3 * q / (2 * p));
      if (p != -3 * t * t || q != 2 * t * t * t) return {false, "char poly has no double root"};
      bool ok = rank(x - t * QMatrix::identity(3)) <= 1;
      return {ok, "t=" + to_string(t)};
    }
    case Sl3Variety::MixedSheetClosure: {
      Rational disc = 4 * p * p * p + 27 * q * q;
      return {disc == 0, "4p^3+27q^2=" + to_string(disc)};
    }
  }
  throw std::invalid_argument("unknown variety");
}

ParamPoly sl3_discriminant(const MatrixRep& x) {
  require_3x3(x.n());
  ParamPoly cp = char_poly(x);
  ParamPoly p = drop_lambda(cp.coefficient("lambda", 1), x.vars());
  ParamPoly q = drop_lambda(cp.coefficient("lambda", 0), x.vars());
  return Rational(4) * p.pow(3) + Rational(27) * q.pow(2);
}

int class_dimension(const SlN& g, const ClassRep& rep, std::uint64_t seed) {
  Rng rng(seed);
  std::map<std::string, Rational> point;
  for (const auto& name : rep.matrix.vars()->names()) point[name] = rng.nonzero_rational(7, 5);
  QMatrix x = rep.matrix.evaluate(point);
  QMatrix ad(g.dim(), g.dim());
  for (int j = 0; j < g.dim(); ++j) {
    LieElement col = from_qmatrix(g, commutator(x, g.matrix(j)));
    for (const auto& [i, c] : col.coeffs()) ad(i, j) = c;
  }
  return rank(ad) + rep.parameters;
}

std::vector<ParamPoly> adjoint_closure(const SlN& g, const std::vector<ParamPoly>& seeds) {
  std::vector<ParamPoly> out;
  if (seeds.empty()) return out;
  std::map<Exponents, int> column;
  EchelonBasis echelon;
  auto add = [&](const ParamPoly& p) {
    if (p.is_zero()) return false;
    std::map<int, Rational> v;
    for (const auto& [e, c] : p.terms()) {
      auto [it, inserted] = column.try_emplace(e, static_cast<int>(column.size()));
      v.emplace(it->second, c);
    }
    if (!echelon.insert(std::move(v))) return false;
    out.push_back(p);
    return true;
  };
  VarsPtr vars = symbol_vars(g);
  std::deque<ParamPoly> queue;
  for (const auto& s : seeds)
    if (add(s)) queue.push_back(s);
  while (!queue.empty()) {
    ParamPoly p = std::move(queue.front());
    queue.pop_front();
    for (int b = 0; b < 2 * g.num_positive_roots(); ++b) {
      ParamPoly r = poisson_bracket(g, ParamPoly::variable(vars, g.basis(b).variable_name()), p);
      if (add(r)) queue.push_back(std::move(r));
    }
  }
  return out;
}

bool VarietyCertificate::consistent() const {
  for (const auto& c : classes)
    if (c.vanishes && !c.samples_vanish) return false;
  return true;
}

VarietyCertificate variety_certificate(const VacuumModule& module, const std::vector<PBWVector>& gens,
                                       std::uint64_t seed, int samples) {
  const SlN& g = module.g();
  require_3x3(g.n());
  std::vector<ParamPoly> seeds;
  for (const auto& v : gens) seeds.push_back(symbol(module, v));

  VarietyCertificate cert;
  cert.generators = adjoint_closure(g, seeds);
  auto reps = sl3_class_reps();
  for (std::size_t ci = 0; ci < reps.size(); ++ci) {
    const ClassRep& rep = reps[ci];
    ClassVerdict verdict;
    verdict.tag = rep.tag;
    verdict.vanishes = true;
    for (std::size_t i = 0; i < cert.generators.size(); ++i) {
      ParamPoly value = evaluate_symbol(g, cert.generators[i], rep.matrix);
      if (!value.is_zero()) {
        verdict.vanishes = false;
        verdict.witness_index = static_cast<int>(i);
        verdict.witness = value.to_string();
        break;
      }
    }
    if (verdict.vanishes) {
      for (int s = 0; s < samples; ++s) {
        const std::uint64_t sample_seed = seed * 1000003ull + ci * 1000ull + static_cast<std::uint64_t>(s);
        verdict.sample_seeds.push_back(sample_seed);
        Rng rng(sample_seed);
        std::map<std::string, Rational> point;
        for (const auto& name : rep.matrix.vars()->names()) point[name] = rng.nonzero_rational(5, 3);
        auto none = make_vars({});
        MatrixRep member = MatrixRep::from_rational(rep.matrix.evaluate(point), none);
        QMatrix conj = adjoint_orbit_sample(member, rng.next()).evaluate({});
        for (const auto& p : cert.generators)
          if (evaluate_at(g, p, conj) != 0) {
            verdict.samples_vanish = false;
            break;
          }
      }
    }
    cert.classes.push_back(std::move(verdict));
  }
  return cert;
}

}  // namespace affvoa
