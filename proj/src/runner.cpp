#include "g2t/runner.hpp"

#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "g2t/g2.hpp"
#include "g2t/integrability.hpp"
#include "g2t/tduality.hpp"

namespace g2t {

namespace {

using nlohmann::json;

/// Bad task line (unknown name, wrong arity, missing context): exit code 2.
class UsageError : public std::runtime_error {
 public:
  UsageError(int line, const std::string& what)
      : std::runtime_error("task at line " + std::to_string(line) + ": " +
                           what) {}
};

struct FormEntry {
  std::string algebra;
  Form value;

  FormEntry() : value(Form::zero(1)) {}
  FormEntry(std::string alg, Form v)
      : algebra(std::move(alg)), value(std::move(v)) {}
};

struct DualContext {
  std::string algebra_name;
  std::string dual_name;
  AdmissibleTriple triple;
  DualResult dual;
  CorrespondenceSpace cs;
};

struct Env {
  std::map<std::string, LieAlgebra> algebras;
  std::map<std::string, FormEntry> forms;
  std::map<std::string, std::pair<std::string, SpanIdeal>> fibers;
  std::optional<DualContext> ctx;

  explicit Env(const ModelFile& m) {
    for (const auto& a : m.algebras) algebras.emplace(a.name, a.algebra);
    for (const auto& f : m.forms)
      forms.emplace(f.name, FormEntry(f.algebra, f.value));
    for (const auto& f : m.fibers)
      fibers.emplace(f.name, std::make_pair(f.algebra, f.fiber));
  }

  const LieAlgebra& need_algebra(int line, const std::string& n) const {
    auto it = algebras.find(n);
    if (it == algebras.end())
      throw UsageError(line, "unknown algebra '" + n + "'");
    return it->second;
  }
  const FormEntry& need_form(int line, const std::string& n) const {
    auto it = forms.find(n);
    if (it == forms.end()) throw UsageError(line, "unknown form '" + n + "'");
    return it->second;
  }
  const std::pair<std::string, SpanIdeal>& need_fiber(
      int line, const std::string& n) const {
    auto it = fibers.find(n);
    if (it == fibers.end())
      throw UsageError(line, "unknown fiber '" + n + "'");
    return it->second;
  }
};

int need_direction(int line, const std::string& tok, int dim) {
  if (tok.size() >= 2 && tok[0] == 'e') {
    int k = 0;
    std::istringstream is(tok.substr(1));
    if ((is >> k) && is.eof() && k >= 1 && k <= dim) return k;
  }
  throw UsageError(line, "expected a basis direction 'e<k>', got '" + tok +
                             "'");
}

void need_args(int line, const ModelFile::Task& t, std::size_t n) {
  if (t.args.size() != n)
    throw UsageError(line, "'" + t.command + "' expects " +
                               std::to_string(n) + " argument(s)");
}

std::string vec_to_text(const std::vector<Rational>& v) {
  // Coordinate vectors print like 1-forms on basis labels: "2 e1 - e3".
  Form f = Form::zero(static_cast<int>(v.size()));
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero())
      f.add_term(Blade::from_indices({static_cast<int>(k) + 1}), v[k]);
  return to_string(f);
}

// One executed task: a verdict plus ordered detail lines (human) and a JSON
// data object carrying the same content.
struct TaskReport {
  bool verdict = true;
  std::vector<std::pair<std::string, std::string>> details;
  json data = json::object();

  void put(const std::string& key, const std::string& value) {
    details.emplace_back(key, value);
    data[key] = value;
  }
  void put(const std::string& key, bool value) {
    details.emplace_back(key, value ? "true" : "false");
    data[key] = value;
  }
  void put(const std::string& key, int value) {
    details.emplace_back(key, std::to_string(value));
    data[key] = value;
  }
};

void run_check_jacobi(Env& env, const ModelFile::Task& t, TaskReport& r) {
  need_args(t.line, t, 1);
  const LieAlgebra& g = env.need_algebra(t.line, t.args[0]);
  JacobiReport jr = jacobi_check(g);
  r.verdict = jr.pass;
  r.put("jacobi", jr.pass);
  if (!jr.pass) {
    std::ostringstream trip;
    trip << "(" << jr.i << "," << jr.j << "," << jr.k << ")";
    r.put("first_failing_triple", trip.str());
    r.put("residual", vec_to_text(jr.residual));
  }
}

void run_differential(Env& env, const ModelFile::Task& t, TaskReport& r) {
  need_args(t.line, t, 1);
  const FormEntry& f = env.need_form(t.line, t.args[0]);
  const LieAlgebra& g = env.need_algebra(t.line, f.algebra);
  r.put("result", to_string(g.ce_differential(f.value)));
}

void run_star(Env& env, const ModelFile::Task& t, TaskReport& r) {
  need_args(t.line, t, 1);
  const FormEntry& f = env.need_form(t.line, t.args[0]);
  r.put("result", to_string(hodge_star(f.value)));
}

void run_spinors(Env& env, const ModelFile::Task& t, TaskReport& r) {
  if (t.args.size() != 1 && t.args.size() != 5)
    throw UsageError(t.line, "'spinors' expects PHI or PHI angle S C e<k>");
  const FormEntry& f = env.need_form(t.line, t.args[0]);
  G2Structure s = G2Structure::adapted(f.value);
  SpinorPair pair;
  if (t.args.size() == 1) {
    pair = usual_spinors(s);
  } else {
    if (t.args[1] != "angle")
      throw UsageError(t.line, "expected 'angle S C e<k>'");
    Rational sa, ca;
    try {
      sa = Rational::parse(t.args[2]);
      ca = Rational::parse(t.args[3]);
    } catch (const std::invalid_argument& e) {
      throw UsageError(t.line, e.what());
    }
    int dir = need_direction(t.line, t.args[4], f.value.dim());
    pair = generalized_spinors(s, dir, sa, ca);
  }
  env.forms[t.args[0] + ".rho"] = FormEntry(f.algebra, pair.rho);
  env.forms[t.args[0] + ".rho_hat"] = FormEntry(f.algebra, pair.rho_hat);
  r.put("rho", to_string(pair.rho));
  r.put("rho_hat", to_string(pair.rho_hat));
  r.put("s", pair.s.str());
  r.put("c", pair.c.str());
  r.put("registered", t.args[0] + ".rho, " + t.args[0] + ".rho_hat");
}

void run_integrability(Env& env, const ModelFile::Task& t, TaskReport& r) {
  need_args(t.line, t, 3);
  const LieAlgebra& g = env.need_algebra(t.line, t.args[0]);
  const FormEntry& hf = env.need_form(t.line, t.args[1]);
  const FormEntry& pf = env.need_form(t.line, t.args[2]);
  if (hf.algebra != t.args[0] || pf.algebra != t.args[0])
    throw UsageError(t.line, "forms must live on algebra '" + t.args[0] +
                                 "'");
  SpinorPair pair = usual_spinors(G2Structure::adapted(pf.value));
  IntegrabilityReport ir = integrability_report(g, hf.value, pair);
  r.put("h_closed", ir.h_closed);
  r.put("d_H_rho", to_string(ir.d_H_rho));
  r.put("d_H_rho_hat", to_string(ir.d_H_rho_hat));
  r.put("strongly_integrable", ir.strongly_integrable);
  r.put("closed", ir.closed);
  r.put("coclosed", ir.coclosed);
  r.put("weak_odd", ir.weak_odd ? ir.weak_odd->str() : std::string("none"));
  r.put("weak_even",
        ir.weak_even ? ir.weak_even->str() : std::string("none"));
}

void run_solve_h(Env& env, const ModelFile::Task& t, TaskReport& r,
                 bool verbose) {
  bool coclosed = false;
  std::vector<std::string> args = t.args;
  if (!args.empty() && args.back() == "--coclosed") {
    coclosed = true;
    args.pop_back();
  }
  if (args.size() != 3)
    throw UsageError(t.line,
                     "'solve-h' expects ALGEBRA PHI FIBER [--coclosed]");
  const LieAlgebra& g = env.need_algebra(t.line, args[0]);
  const FormEntry& pf = env.need_form(t.line, args[1]);
  const auto& [fiber_alg, fiber] = env.need_fiber(t.line, args[2]);
  if (pf.algebra != args[0] || fiber_alg != args[0])
    throw UsageError(t.line, "form and fiber must live on algebra '" +
                                 args[0] + "'");
  SpinorPair pair = usual_spinors(G2Structure::adapted(pf.value));
  HConstraints cs;
  cs.h_closed = true;
  cs.closed_structure = !coclosed;
  cs.coclosed_structure = coclosed;
  cs.admissible_fiber = fiber;
  AffineSolutionSpace sol = solve_h_space(g, pair, cs);
  r.verdict = sol.feasible;
  r.put("constraint", coclosed ? std::string("coclosed-structure")
                               : std::string("closed-structure"));
  r.put("feasible", sol.feasible);
  if (sol.feasible) {
    r.put("dimension", sol.dimension);
    r.put("particular", to_string(sol.particular));
    json gens = json::array();
    for (const Form& k : sol.kernel) gens.push_back(to_string(k));
    r.data["generators"] = gens;
    if (verbose)
      for (std::size_t i = 0; i < sol.kernel.size(); ++i)
        r.details.emplace_back("generator " + std::to_string(i + 1),
                               to_string(sol.kernel[i]));
  }
}

void run_dualize(Env& env, const ModelFile::Task& t, TaskReport& r) {
  need_args(t.line, t, 3);
  const LieAlgebra& g = env.need_algebra(t.line, t.args[0]);
  const auto& [fiber_alg, fiber] = env.need_fiber(t.line, t.args[1]);
  const FormEntry& hf = env.need_form(t.line, t.args[2]);
  if (fiber_alg != t.args[0] || hf.algebra != t.args[0])
    throw UsageError(t.line, "fiber and H must live on algebra '" +
                                 t.args[0] + "'");
  AdmissibleTriple triple = validate_admissible(g, fiber, hf.value);
  r.put("h_closed", triple.checks.h_closed);
  r.put("fiber_abelian_ideal", triple.checks.fiber_abelian_ideal);
  r.put("fiber_central", triple.checks.fiber_central);
  r.put("h_fiber_degenerate", triple.checks.h_fiber_degenerate);
  if (!triple.checks.all()) {
    r.verdict = false;
    r.put("error", std::string("triple is not admissible"));
    return;
  }
  DualResult d = dualize(triple);
  CorrespondenceSpace cs = correspondence(triple, d);

  const std::string dual_name = t.args[0] + ".dual";
  env.algebras[dual_name] = d.dual.algebra;
  env.forms[dual_name + ".H"] = FormEntry(dual_name, d.dual.H);
  env.ctx = DualContext{t.args[0], dual_name, triple, d, cs};

  json diffs = json::array();
  std::vector<std::string> human;
  for (int k = 1; k <= d.dual.algebra.dim(); ++k) {
    const Form& dk = d.dual.algebra.covector_differential(k);
    if (!dk.is_zero())
      diffs.push_back("d e" + std::to_string(k) + " = " + to_string(dk));
  }
  r.data["dual_differentials"] = diffs;
  for (const auto& line : diffs)
    r.details.emplace_back("dual differential", line.get<std::string>());
  r.put("dual_h", to_string(d.dual.H));
  json psis = json::array();
  for (const Form& p : d.psis) psis.push_back(to_string(p));
  r.data["psis"] = psis;
  r.put("delta", to_string(d.delta));
  r.put("registered", dual_name + ", " + dual_name + ".H");
}

void run_certificate(Env& env, const ModelFile::Task& t, TaskReport& r) {
  need_args(t.line, t, 0);
  if (!env.ctx)
    throw UsageError(t.line, "'certificate' requires a prior dualize task");
  const DualContext& ctx = *env.ctx;
  DualityCertificate cert =
      verify_duality_certificate(ctx.cs, ctx.triple.H, ctx.dual.dual.H);
  r.verdict = cert.pass;
  r.put("lhs", to_string(cert.lhs));
  r.put("rhs", to_string(cert.rhs));
  r.put("residual", to_string(cert.residual));
  r.put("pass", cert.pass);
}

void run_transport(Env& env, const ModelFile::Task& t, TaskReport& r) {
  need_args(t.line, t, 1);
  if (!env.ctx)
    throw UsageError(t.line, "'transport' requires a prior dualize task");
  const DualContext& ctx = *env.ctx;
  const FormEntry& f = env.need_form(t.line, t.args[0]);
  if (f.algebra != ctx.algebra_name)
    throw UsageError(t.line, "form must live on algebra '" +
                                 ctx.algebra_name + "'");
  Form out = transport_spinor(ctx.cs, f.value);
  const std::string reg = t.args[0] + ".transported";
  env.forms[reg] = FormEntry(ctx.dual_name, out);
  r.put("result", to_string(out));
  r.put("registered", reg);
}

void run_double_dual(Env& env, const ModelFile::Task& t, TaskReport& r) {
  need_args(t.line, t, 0);
  if (!env.ctx)
    throw UsageError(t.line, "'double-dual' requires a prior dualize task");
  DoubleDualReport dd = double_dual_check(env.ctx->triple);
  r.verdict = dd.pass;
  r.put("algebra_match", dd.algebra_match);
  r.put("h_match", dd.h_match);
  r.put("fiber_match", dd.fiber_match);
  r.put("h_difference", to_string(dd.h_difference));
}

void run_obstruction(Env& env, const ModelFile::Task& t, TaskReport& r) {
  need_args(t.line, t, 2);
  const LieAlgebra& g = env.need_algebra(t.line, t.args[0]);
  int z = need_direction(t.line, t.args[1], g.dim());
  CubicObstructionReport rep = cubic_obstruction(g, z);
  r.put("vanishes", rep.vanishes);
  r.put("closed_space_dimension", rep.closed_space_dimension);
  if (!rep.vanishes) {
    r.put("witness", to_string(rep.witness));
    r.put("cube", to_string(rep.cube));
    std::ostringstream trip;
    trip << "(" << rep.triple_i << "," << rep.triple_j << ","
         << rep.triple_k << ")";
    r.put("basis_triple", trip.str());
  }
}

void dispatch(Env& env, const ModelFile::Task& t, const RunOptions& opt,
              TaskReport& r) {
  if (t.command == "check-jacobi") return run_check_jacobi(env, t, r);
  if (t.command == "differential") return run_differential(env, t, r);
  if (t.command == "star") return run_star(env, t, r);
  if (t.command == "spinors") return run_spinors(env, t, r);
  if (t.command == "integrability") return run_integrability(env, t, r);
  if (t.command == "solve-h") return run_solve_h(env, t, r, opt.verbose);
  if (t.command == "dualize") return run_dualize(env, t, r);
  if (t.command == "certificate") return run_certificate(env, t, r);
  if (t.command == "transport") return run_transport(env, t, r);
  if (t.command == "double-dual") return run_double_dual(env, t, r);
  if (t.command == "obstruct-closed-g2") return run_obstruction(env, t, r);
  throw UsageError(t.line, "unknown command '" + t.command + "'");
}

}  // namespace

int run_model(const ModelFile& model, const RunOptions& opt,
              std::ostream& out, std::ostream& err) {
  Env env(model);
  json reports = json::array();
  bool all_pass = true;
  int id = 0;

  for (const auto& t : model.tasks) {
    if (!opt.task_filter.empty() && t.command != opt.task_filter) continue;
    ++id;
    TaskReport r;
    try {
      dispatch(env, t, opt, r);
    } catch (const UsageError& e) {
      err << "error: " << e.what() << "\n";
      return 2;
    } catch (const std::exception& e) {
      r.verdict = false;
      r.put("error", std::string(e.what()));
    }
    all_pass = all_pass && r.verdict;

    if (opt.json) {
      json entry;
      entry["id"] = id;
      entry["task"] = t.command;
      entry["args"] = t.args;
      entry["verdict"] = r.verdict;
      entry["data"] = r.data;
      reports.push_back(entry);
    } else {
      out << "[" << id << "] " << t.command;
      for (const auto& a : t.args) out << " " << a;
      out << ": " << (r.verdict ? "PASS" : "FAIL") << "\n";
      for (const auto& [k, v] : r.details)
        out << "    " << k << ": " << v << "\n";
    }
  }

  if (opt.json) {
    json doc;
    doc["schema"] = 1;
    doc["pass"] = all_pass;
    doc["reports"] = reports;
    out << doc.dump(2) << "\n";
  } else {
    out << (all_pass ? "all tasks passed" : "some tasks FAILED") << "\n";
  }
  return all_pass ? 0 : 1;
}

}  // namespace g2t
