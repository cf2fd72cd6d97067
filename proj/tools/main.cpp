#include "superdensity/axioms.hpp"
#include "superdensity/parse.hpp"
#include "superdensity/report.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>
#include <thread>

using namespace superdensity;

namespace {

struct Output {
  std::string format = "json";
  std::string path;

  void emit(const Json& j, const std::string& md) const {
    const std::string text = format == "md" ? md : j.dump(2) + "\n";
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
  }
};

// Sidecar with wall-clock data, kept out of the payload so that outputs stay
// byte-identical across runs.
void write_sidecar(const Output& out, const std::string& verb, double seconds) {
  if (out.path.empty()) return;
  std::ofstream meta(out.path + ".meta.json", std::ios::binary);
  meta << Json{{"verb", verb}, {"finished_unix", std::time(nullptr)}, {"seconds", seconds}}.dump(2) << "\n";
}

Rational parse_rational(const std::string& s, const char* what) {
  try {
    return Rational::parse(s);
  } catch (const std::exception&) {
    throw CLI::ValidationError(what, "expected an exact fraction such as 3/2, got '" + s + "'");
  }
}

// "p", "p + q*sqrt(d)", "p - sqrt(d)", "q*sqrt(d)".
AlgebraicScalar parse_value(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (c != ' ') s += c;
  }
  static const std::regex re(R"(^([-+]?[0-9]+(?:/[0-9]+)?)?(?:([-+])(?:([0-9]+(?:/[0-9]+)?)\*)?sqrt\(([0-9]+)\))?$)");
  std::smatch m;
  if (!std::regex_match(s, m, re) || (!m[1].matched && !m[4].matched)) {
    if (std::regex_match(s, m, std::regex(R"(^(-?)(?:([0-9]+(?:/[0-9]+)?)\*)?sqrt\(([0-9]+)\)$)"))) {
      Rational b = m[2].matched ? Rational::parse(m[2].str()) : Rational(1);
      if (m[1].str() == "-") b = -b;
      return AlgebraicScalar(sqrt_field(std::stol(m[3].str())), Rational(0), b);
    }
    throw CLI::ValidationError("--lambda", "expected p, or p + q*sqrt(d), got '" + text + "'");
  }
  const Rational a = m[1].matched ? Rational::parse(m[1].str()) : Rational(0);
  if (!m[4].matched) return AlgebraicScalar(a);
  Rational b = m[3].matched ? Rational::parse(m[3].str()) : Rational(1);
  if (m[2].str() == "-") b = -b;
  return AlgebraicScalar(sqrt_field(std::stol(m[4].str())), a, b);
}

std::optional<unsigned> degree_bound_from(int flag) {
  if (flag > 0) return unsigned(flag);
  if (const char* env = std::getenv("SUPERDENSITY_DEGREE_BOUND")) {
    const int v = std::atoi(env);
    if (v <= 0) throw std::runtime_error("SUPERDENSITY_DEGREE_BOUND must be a positive integer");
    return unsigned(v);
  }
  return std::nullopt;
}

std::pair<int, int> parse_range(const std::string& s) {
  static const std::regex re(R"(^([0-9]+)(?:\.\.([0-9]+))?$)");
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw CLI::ValidationError("--n", "expected N or A..B, got '" + s + "'");
  const int a = std::stoi(m[1].str());
  const int b = m[2].matched ? std::stoi(m[2].str()) : a;
  if (a > b || b > 2) throw CLI::ValidationError("--n", "range must lie in 0..2");
  return {a, b};
}

std::string list_md(const std::string& title, const std::vector<std::string>& items) {
  std::string s = "### " + title + "\n\n";
  for (const auto& i : items) s += "- " + i + "\n";
  return s;
}

int run_bracket(int n, const std::string& F, const std::string& G, const Output& out) {
  const SuperPoly f = parse_superpoly(F, n), g = parse_superpoly(G, n);
  const SuperPoly b = contact_bracket(f, g);
  out.emit(Json{{"n", n}, {"F", f.to_string()}, {"G", g.to_string()}, {"bracket", b.to_string()}}, b.to_string() + "\n");
  return 0;
}

int run_act(int n, const std::string& F, const std::string& density, const Output& out) {
  const SuperPoly f = parse_superpoly(F, n);
  const Density d = parse_density(density, n);
  const Density r = act(f, d);
  out.emit(Json{{"n", n}, {"F", f.to_string()}, {"density", d.to_string()}, {"result", r.to_string()}},
           r.to_string() + "\n");
  return 0;
}

int run_classify_bi(int n, const std::string& k, int max_theta, const Output& out) {
  const Rational kk = parse_rational(k, "--k");
  const Ansatz a = build_ansatz(n, kk, max_theta < 0 ? unsigned(n) : unsigned(max_theta));
  const InvariantFamily fam = solve_invariance_bi(a, SubalgebraSpec{SubalgebraKind::Aff, n, std::nullopt});
  Json basis = Json::array();
  std::vector<std::string> md;
  for (const auto& J : fam.basis) {
    basis.push_back(to_json(J));
    md.push_back("`" + J.to_string() + "`");
  }
  const Json j{{"n", n}, {"k", kk.to_string()}, {"ansatz_terms", a.terms.size()}, {"dimension", fam.basis.size()},
               {"basis", basis}};
  out.emit(j, list_md("aff(" + std::to_string(n) + "|1)-invariant bilinear operators, k = " + kk.to_string() +
                          ", dimension " + std::to_string(fam.basis.size()),
                      md));
  return 0;
}

int run_classify_lin(int n, const std::string& shift, bool all, const Output& out) {
  if (all) {
    const int max2 = int((parse_rational(shift, "--shift") * Rational(2)).num().get_si());
    Json rows = Json::array();
    std::vector<std::string> md;
    for (const auto& r : lni_check(n, max2)) {
      rows.push_back(to_json(r));
      md.push_back("shift " + r.shift.to_string() + ": dim " + std::to_string(r.dim) + " (families: " +
                   std::to_string(r.expected) + ")" +
                   (r.bar_eta_invariant ? std::string(", bar-eta product invariant: ") +
                                              (*r.bar_eta_invariant ? "yes" : "no") +
                                              ", eta product invariant: " + (*r.eta_invariant ? "yes" : "no")
                                        : ""));
    }
    out.emit(Json{{"n", n}, {"rows", rows}}, list_md("invariant linear operators, n = " + std::to_string(n), md));
    return 0;
  }
  const Rational s = parse_rational(shift, "--shift");
  const LinInvariantFamily fam = solve_invariance_lin(n, s, SubalgebraSpec{SubalgebraKind::Aff, n, std::nullopt});
  Json basis = Json::array();
  std::vector<std::string> md;
  for (const auto& A : fam.basis) {
    basis.push_back(to_json(A));
    md.push_back("`" + A.to_string() + "`");
  }
  out.emit(Json{{"n", n}, {"shift", s.to_string()}, {"dimension", fam.basis.size()}, {"basis", basis}},
           list_md("invariant linear operators F_l -> F_{l+" + s.to_string() + "}, dimension " +
                       std::to_string(fam.basis.size()),
                   md));
  return 0;
}

H1Report compute_h1(int n, const Rational& s, const H1Options& o, bool restrict) {
  H1Report r = h1(n, s, o);
  compare_with_paper(r, builtin_claims());
  if (restrict) {
    for (const auto& c : restriction_checks(r)) {
      if (!c.ok()) r.discrepancies.push_back("restriction component " + std::to_string(c.part) + " of the " + c.cocycle +
                                             " cocycle is not a cocycle over arity " + std::to_string(n - 1));
    }
  }
  return r;
}

int run_h1(int n, const std::string& shift, const std::string& lambda, int degree_bound, int random_checks,
           bool no_stability, bool restrict, const Output& out) {
  H1Options o;
  o.degree_bound = degree_bound_from(degree_bound);
  o.stability_check = !no_stability;
  o.random_checks = std::size_t(std::max(0, random_checks));
  if (!lambda.empty()) o.lambda_value = parse_value(lambda);
  const Rational s = parse_rational(shift, "--shift");
  const H1Report r = compute_h1(n, s, o, restrict);
  Json j = to_json(r);
  if (restrict) {
    Json comps = Json::array();
    for (const auto& c : restriction_checks(r)) comps.push_back(to_json(c));
    j["restriction_checks"] = comps;
  }
  out.emit(j, to_markdown(r));
  return 0;
}

int run_tables(const std::string& range, int jobs, int degree_bound, int random_checks, const Output& out) {
  const auto [lo, hi] = parse_range(range);
  const PaperClaims& pc = builtin_claims();
  struct Cell {
    int n;
    Rational shift;
  };
  std::vector<Cell> cells;
  for (int n = lo; n <= hi; ++n) {
    const TableClaim* t = pc.table(n);
    const int max2 = t ? t->max_twice_shift : 9;
    for (int s2 = -2; s2 <= max2; ++s2) cells.push_back(Cell{n, Rational(s2, 2)});
  }
  H1Options o;
  o.degree_bound = degree_bound_from(degree_bound);
  o.random_checks = std::size_t(std::max(0, random_checks));
  std::vector<std::optional<H1Report>> reports(cells.size());
  std::vector<std::string> errors(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      try {
        reports[i] = compute_h1(cells[i].n, cells[i].shift, o, false);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  const unsigned nthreads = jobs > 0 ? unsigned(jobs) : std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (!errors[i].empty()) throw std::runtime_error(errors[i]);
  }
  Json arr = Json::array();
  std::vector<H1Report> all;
  std::size_t mismatches = 0;
  for (auto& r : reports) {
    arr.push_back(to_json(*r));
    mismatches += r->discrepancies.size();
    all.push_back(std::move(*r));
  }
  std::string md;
  for (int n = lo; n <= hi; ++n) md += h1_table_markdown(n, all) + "\n";
  md += mismatches == 0 ? "All cells agree with the published tables.\n"
                        : std::to_string(mismatches) + " discrepancies; see the JSON output.\n";
  out.emit(Json{{"cells", arr}, {"discrepancies", mismatches}}, md);
  return 0;
}

int run_verify(const std::string& id, bool strict, int degree_bound, const Output& out) {
  const PaperClaims& pc = builtin_claims();
  const auto D = degree_bound_from(degree_bound);
  std::vector<ClaimVerdict> vs;
  std::vector<RestrictionVerdict> rs;
  std::vector<SpanVerdict> ss;
  if (!id.empty()) {
    bool known = false;
    for (const auto& c : pc.cocycles) {
      if (c.id == id) {
        vs.push_back(verify_claim(c, D));
        known = true;
      }
    }
    for (const auto& r : pc.restrictions) {
      if (r.id == id) {
        rs.push_back(verify_restriction(r, D));
        known = true;
      }
    }
    for (const auto& s : pc.spans) {
      if (s.id == id) {
        ss.push_back(verify_span(s, pc));
        known = true;
      }
    }
    if (!known) throw std::out_of_range("unknown claim id: " + id);
  } else {
    for (const auto& c : pc.cocycles) vs.push_back(verify_claim(c, D));
    for (const auto& r : pc.restrictions) rs.push_back(verify_restriction(r, D));
    for (const auto& s : pc.spans) ss.push_back(verify_span(s, pc));
  }
  std::size_t failed = 0;
  Json jv = Json::array(), jr = Json::array(), js = Json::array(), jo = Json::array();
  for (const auto& v : vs) {
    jv.push_back(to_json(v));
    failed += !v.confirmed();
  }
  for (const auto& v : rs) {
    jr.push_back(to_json(v));
    failed += !v.confirmed();
  }
  for (const auto& v : ss) {
    js.push_back(to_json(v));
    failed += !v.confirmed();
  }
  std::string md = claims_markdown(vs, rs, ss);
  if (id.empty()) {
    md += "\n## Open questions\n\n";
    for (const auto& q : open_questions(pc)) {
      jo.push_back(Json{{"topic", q.topic}, {"outcome", q.outcome}});
      md += "- " + q.topic + ": " + q.outcome + "\n";
    }
  }
  out.emit(Json{{"claims_version", pc.version},
                {"cocycles", jv},
                {"restrictions", jr},
                {"spans", js},
                {"open_questions", jo},
                {"failed", failed}},
           md);
  return (strict && failed > 0) ? 2 : 0;
}

int run_axioms(const std::string& range, int max_degree, const Output& out) {
  const auto [lo, hi] = parse_range(range);
  Json arr = Json::array();
  std::string md = "| n | Jacobi triples | failures | representation checks | failures |\n|---|---|---|---|---|\n";
  bool ok = true;
  for (int n = lo; n <= hi; ++n) {
    const AxiomReport r = check_axioms(n, unsigned(max_degree));
    ok = ok && r.ok();
    arr.push_back(Json{{"n", n},
                       {"max_x_degree", r.max_x_degree},
                       {"jacobi_checked", r.jacobi_checked},
                       {"jacobi_failed", r.jacobi_failed},
                       {"representation_checked", r.representation_checked},
                       {"representation_failed", r.representation_failed},
                       {"failures", r.failures}});
    md += "| " + std::to_string(n) + " | " + std::to_string(r.jacobi_checked) + " | " + std::to_string(r.jacobi_failed) +
          " | " + std::to_string(r.representation_checked) + " | " + std::to_string(r.representation_failed) + " |\n";
  }
  out.emit(Json{{"results", arr}, {"ok", ok}}, md);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with weighted densities on R^{1|n}: invariant operators and relative cohomology"};
  app.require_subcommand(1);
  Output out;
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", out.format, "Output format")->check(CLI::IsMember({"json", "md"}));
    sub->add_option("-o,--output", out.path, "Write to a file (a .meta.json sidecar records the run time)");
  };
  int n = 0;
  std::string F, G, density, k, shift, lambda, id, range = "0..2";
  int max_theta = -1, degree_bound = 0, random_checks = 0, jobs = 0, max_degree = 3;
  bool no_stability = false, restrict = false, strict = false, all = false;

  auto* bracket = app.add_subcommand("bracket", "Contact bracket {F, G}");
  bracket->add_option("--n", n, "Number of odd coordinates")->required()->check(CLI::Range(0, kMaxArity));
  bracket->add_option("--F", F, "Polynomial in x, t1..tn")->required();
  bracket->add_option("--G", G, "Polynomial in x, t1..tn")->required();
  add_output(bracket);

  auto* actc = app.add_subcommand("act", "Lie derivative L_{X_F} of a density");
  actc->add_option("--n", n, "Number of odd coordinates")->required()->check(CLI::Range(0, kMaxArity));
  actc->add_option("--F", F, "Polynomial in x, t1..tn")->required();
  actc->add_option("--density", density, "'poly @ weight [pi]'")->required();
  add_output(actc);

  auto* cbi = app.add_subcommand("classify-invariants", "aff(n|1)-invariant bilinear operators of order k");
  cbi->add_option("--n", n, "Number of odd coordinates")->required()->check(CLI::Range(0, 2));
  cbi->add_option("--k", k, "Order k in 1/2 N, as a fraction")->required();
  cbi->add_option("--max-theta", max_theta, "Largest theta degree in the coefficients (default n)");
  add_output(cbi);

  auto* clin = app.add_subcommand("classify-linear", "aff(n|1)-invariant linear operators F_l -> F_{l+shift}");
  clin->add_option("--n", n, "Number of odd coordinates")->required()->check(CLI::Range(0, 2));
  clin->add_option("--shift", shift, "mu - l as a fraction")->required();
  clin->add_flag("--all", all, "Every shift from 0 to --shift, with the published-family cross-check");
  add_output(clin);

  auto* h1c = app.add_subcommand("h1", "Relative cohomology H1(K(n), aff(n|1); D_{l, l+shift})");
  h1c->add_option("--n", n, "Number of odd coordinates")->required()->check(CLI::Range(0, 2));
  h1c->add_option("--shift", shift, "mu - l as a fraction")->required();
  h1c->add_option("--lambda", lambda, "Fixed weight: p or p + q*sqrt(d) (default: symbolic)");
  h1c->add_option("--degree-bound", degree_bound, "Monomial degree bound D (default 2k + 4)");
  h1c->add_option("--random-checks", random_checks, "Random rational weights to compare with the generic answer");
  h1c->add_flag("--no-stability", no_stability, "Skip the D + 2 re-run");
  h1c->add_flag("--restriction-checks", restrict, "Check the arity n-1 components of every basis cocycle");
  add_output(h1c);

  auto* verify = app.add_subcommand("verify-paper", "Check the transcribed cocycle formulas");
  verify->add_option("--id", id, "Single claim id (default: all)");
  verify->add_flag("--strict", strict, "Exit with status 2 when a claim is not confirmed");
  verify->add_option("--degree-bound", degree_bound, "Monomial degree bound D (default 2k + 4)");
  add_output(verify);

  auto* tables = app.add_subcommand("tables", "Recompute the H1 tables");
  tables->add_option("--n", range, "Arity or range such as 0..2");
  tables->add_option("--jobs", jobs, "Worker threads (default: hardware concurrency)");
  tables->add_option("--degree-bound", degree_bound, "Monomial degree bound D (default 2k + 4)");
  tables->add_option("--random-checks", random_checks, "Random rational weights per cell");
  add_output(tables);

  auto* axioms = app.add_subcommand("check-axioms", "Super-Jacobi and the representation identity on monomials");
  axioms->add_option("--n", range, "Arity or range such as 0..2");
  axioms->add_option("--max-degree", max_degree, "Largest x-degree")->check(CLI::Range(0, 6));
  add_output(axioms);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  const auto start = std::chrono::steady_clock::now();
  int code = 0;
  std::string verb;
  try {
    if (bracket->parsed()) {
      verb = "bracket";
      code = run_bracket(n, F, G, out);
    } else if (actc->parsed()) {
      verb = "act";
      code = run_act(n, F, density, out);
    } else if (cbi->parsed()) {
      verb = "classify-invariants";
      code = run_classify_bi(n, k, max_theta, out);
    } else if (clin->parsed()) {
      verb = "classify-linear";
      code = run_classify_lin(n, shift, all, out);
    } else if (h1c->parsed()) {
      verb = "h1";
      code = run_h1(n, shift, lambda, degree_bound, random_checks, no_stability, restrict, out);
    } else if (verify->parsed()) {
      verb = "verify-paper";
      code = run_verify(id, strict, degree_bound, out);
    } else if (tables->parsed()) {
      verb = "tables";
      code = run_tables(range, jobs, degree_bound, random_checks, out);
    } else if (axioms->parsed()) {
      verb = "check-axioms";
      code = run_axioms(range, max_degree, out);
    }
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "parse error at " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  write_sidecar(out, verb, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  return code;
}
