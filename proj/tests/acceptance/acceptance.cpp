// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when
// an outcome differs from kKnownFailures (in either direction).

#include "superdensity/axioms.hpp"
#include "superdensity/contact.hpp"
#include "superdensity/parse.hpp"
#include "superdensity/report.hpp"
#include "superdensity/verify.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace superdensity;

namespace {

// Runtime limits in seconds.
constexpr double kBracketLimit = 1;
constexpr double kAxiomLimit = 60;
constexpr double kInvariantLimit = 600;
constexpr double kTableLimit[3] = {600, 1800, 3600};
constexpr std::size_t kRandomChecks = 5;

// Criterion 9 asks for dimension 1 on both families; at n = 2 they share
// every integer shift >= 1 and the solver finds both operators there.
const std::set<int> kKnownFailures{9};

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  void fail(const std::string& why) {
    pass = false;
    if (notes.size() < 16) notes.push_back(why);
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string half(int s2) { return Rational(s2, 2).to_string(); }

// ---- 1 ----

Outcome bracket_table() {
  Outcome o;
  const int n = 1;
  const SuperPoly one = parse_superpoly("1", n), x = parse_superpoly("x", n), t = parse_superpoly("t1", n);
  struct Rel {
    const char* name;
    SuperPoly F, G, expected;
  };
  const std::vector<Rel> rels{{"[X_1, X_x] = X_1", one, x, one},
                              {"[X_x, X_t] = -1/2 X_t", x, t, parse_superpoly("-1/2*t1", n)},
                              {"[X_1, X_t] = 0", one, t, SuperPoly(n)},
                              {"[X_t, X_t] = 1/2 X_1", t, t, parse_superpoly("1/2", n)}};
  for (const auto& r : rels) {
    const SuperPoly b = contact_bracket(r.F, r.G);
    if (b != r.expected) o.fail(std::string(r.name) + ": got " + b.to_string());
    // The same relation for the vector fields, on monomials.
    const int sign = (r.F.parity_bit() & r.G.parity_bit()) ? -1 : 1;
    for (unsigned a = 0; a <= 3; ++a) {
      for (ThetaMask m = 0; m < 2; ++m) {
        const SuperPoly H = SuperPoly::monomial(n, a, m);
        const SuperPoly lhs = field_apply(r.F, field_apply(r.G, H)) -
                              field_apply(r.G, field_apply(r.F, H)) * Scalar(sign);
        if (lhs != field_apply(r.expected, H)) o.fail(std::string(r.name) + " fails as vector fields on " + H.to_string());
      }
    }
  }
  return o;
}

// ---- 2 ----

Outcome axioms() {
  Outcome o;
  for (int n = 0; n <= 2; ++n) {
    const AxiomReport r = check_axioms(n, 3);
    std::ostringstream s;
    s << "n=" << n << ": Jacobi " << r.jacobi_checked - r.jacobi_failed << "/" << r.jacobi_checked
      << ", representation " << r.representation_checked - r.representation_failed << "/" << r.representation_checked;
    o.notes.push_back(s.str());
    if (!r.ok()) o.fail("n=" + std::to_string(n) + ": " + (r.failures.empty() ? "" : r.failures.front()));
  }
  return o;
}

// ---- 3 ----

std::size_t expected_invariants(int n, int k2) {
  if (n == 0) return k2 % 2 ? 0 : std::size_t(k2 / 2 + 1);
  if (n == 1) {
    if (k2 % 2) return std::size_t(2 * (k2 / 2) + 2);
    return k2 == 0 ? 1 : std::size_t(k2 + 1);
  }
  if (k2 % 2) return 0;
  return k2 == 0 ? 1 : std::size_t(6 * std::max(1, k2 / 2));
}

Outcome invariant_dims() {
  Outcome o;
  const int max2[3] = {14, 13, 12};
  for (int n = 0; n <= 2; ++n) {
    const SubalgebraSpec spec{SubalgebraKind::Aff, n, std::nullopt};
    for (int k2 = 0; k2 <= max2[n]; ++k2) {
      if (n == 0 && k2 % 2) continue;
      const std::size_t d = solve_invariance_bi(build_ansatz(n, Rational(k2, 2)), spec).solutions.generic_dimension;
      if (d != expected_invariants(n, k2)) {
        o.fail("n=" + std::to_string(n) + " k=" + half(k2) + ": dim " + std::to_string(d) + ", expected " +
               std::to_string(expected_invariants(n, k2)));
      }
    }
  }
  return o;
}

// ---- 4-6 and 8 ----

struct CellExpectation {
  std::size_t generic = 0;
  std::vector<Rational> rational_roots;  // dim 1 there
  std::optional<std::string> min_poly;   // irrational pair, dim 1 at both roots
  std::optional<std::string> locus;      // product of the rational factors
};

CellExpectation expected_cell(int n, int s2) {
  CellExpectation e;
  if (n == 0) {
    if (s2 == 4 || s2 == 6 || s2 == 8) e.generic = 1;
    if (s2 == 2) e.rational_roots = {Rational(0)};
    if (s2 == 10) {
      e.rational_roots = {Rational(0), Rational(-4)};
      e.locus = "l^2 + 4*l";
    }
    if (s2 == 12) e.min_poly = "2*l^2 + 10*l + 3";
  } else if (n == 1) {
    if (s2 == 3 || s2 == 4 || s2 == 5) e.generic = 1;
    if (s2 == 1) e.rational_roots = {Rational(0)};
    if (s2 == 6) e.rational_roots = {Rational(0), Rational(-5, 2)};
    if (s2 == 8) e.min_poly = "2*l^2 + 7*l + 2";
  } else {
    if (s2 == 2) e.generic = 1;
    if (s2 == 4) e.generic = 2;
  }
  return e;
}

void check_cell(const H1Report& r, const CellExpectation& e, Outcome& o) {
  const std::string where = "n=" + std::to_string(r.n) + " shift " + r.shift.to_string();
  if (r.dim_H1 != e.generic) o.fail(where + ": generic dim " + std::to_string(r.dim_H1));
  std::size_t irrational = 0, rational = 0;
  ParamPoly product(Rational(1));
  for (const auto& c : r.resonances) {
    if (c.dim_H1 != 1) o.fail(where + ": dim " + std::to_string(c.dim_H1) + " at l = " + algebraic_text(c.lambda));
    if (c.lambda.is_rational()) {
      ++rational;
      product = product * c.factor;
      bool listed = false;
      for (const auto& v : e.rational_roots) listed = listed || v == c.lambda.a();
      if (!listed) o.fail(where + ": unexpected resonance l = " + algebraic_text(c.lambda));
    } else {
      ++irrational;
      const ParamPoly want = parse_scalar(e.min_poly.value_or("0"));
      if (!e.min_poly || (c.factor != want && c.factor != want * Scalar(-1))) {
        o.fail(where + ": unexpected resonance factor " + c.factor.to_string());
      }
    }
  }
  if (rational != e.rational_roots.size()) o.fail(where + ": " + std::to_string(rational) + " rational resonances");
  if (irrational != (e.min_poly ? 2u : 0u)) o.fail(where + ": " + std::to_string(irrational) + " irrational resonances");
  if (e.locus && product != parse_scalar(*e.locus)) o.fail(where + ": resonance product " + product.to_string());
}

struct TableRun {
  std::vector<H1Report> reports;
  double seconds = 0;
};

TableRun run_table(int n, int max_s2) {
  TableRun t;
  const auto t0 = Clock::now();
  H1Options opts;
  opts.stability_check = true;
  opts.random_checks = kRandomChecks;
  for (int s2 = -2; s2 <= max_s2; ++s2) t.reports.push_back(h1(n, Rational(s2, 2), opts));
  t.seconds = seconds_since(t0);
  return t;
}

Outcome table(const TableRun& t) {
  Outcome o;
  for (const auto& r : t.reports) {
    const int s2 = int((r.shift * Rational(2)).num().get_si());
    check_cell(r, expected_cell(r.n, s2), o);
  }
  o.notes.push_back(std::to_string(t.reports.size()) + " cells");
  return o;
}

Outcome property_gates(const std::vector<const TableRun*>& runs) {
  Outcome o;
  std::size_t cells = 0, randoms = 0;
  for (const auto* t : runs) {
    for (const auto& r : t->reports) {
      ++cells;
      const std::string where = "n=" + std::to_string(r.n) + " shift " + r.shift.to_string();
      if (!r.coboundaries_closed) o.fail(where + ": delta delta != 0 or B not inside Z");
      if (!r.stable) o.fail(where + ": unstable under D -> D+2");
      bool random_seen = r.relative_dim == 0;
      for (const auto& c : r.checks) {
        if (c.rfind("random specializations", 0) == 0) {
          random_seen = true;
          const std::string want = std::to_string(kRandomChecks) + "/" + std::to_string(kRandomChecks);
          if (c.size() < want.size() || c.compare(c.size() - want.size(), want.size(), want) != 0) {
            o.fail(where + ": " + c);
          }
          randoms += kRandomChecks;
        }
      }
      if (!random_seen) o.fail(where + ": no random specialization recorded");
      // Resonant bases must be cocycles too (exact check at rational roots).
      for (const auto& cell : r.resonances) {
        if (!cell.lambda.is_rational()) continue;
        for (const auto& b : cell.basis) {
          std::map<BiKey, Scalar> nf;
          for (const auto& [k, v] : b) nf[k] = Scalar(v.a());
          BiDiffOp J = BiDiffOp::from_normal_form(r.n, nf);
          J.set_weights(Scalar(-1), Scalar(cell.lambda.a()), Scalar(cell.lambda.a() + r.shift));
          if (first_cocycle_failure(r.n, J, r.degree_bound)) o.fail(where + ": resonant basis is not a cocycle");
        }
      }
    }
  }
  // delta o delta on non-invariant 0-cochains: every word up to order 2 with
  // theta-free and theta coefficients.
  for (int n = 0; n <= 2; ++n) {
    for (unsigned k = 0; k <= 2; ++k) {
      for (unsigned e = 0; e < (1u << n); ++e) {
        for (unsigned s = 0; s < (1u << n); ++s) {
          for (unsigned a = 0; a <= 1; ++a) {
            LinDiffOp A(n, lambda_param(), lambda_param() + Scalar(Rational(1, 2)));
            A.add(Word{k, ThetaMask(e)}, SuperPoly::monomial(n, a, ThetaMask(s)));
            if (first_cocycle_failure(n, coboundary(A), 4)) o.fail("delta delta != 0 on " + A.to_string());
          }
        }
      }
    }
  }
  o.notes.push_back(std::to_string(cells) + " cells, " + std::to_string(randoms) + " random specializations");
  return o;
}

// ---- 7 ----

Outcome printed_formulas() {
  Outcome o;
  const PaperClaims& pc = builtin_claims();
  std::vector<ClaimVerdict> verdicts;
  std::size_t confirmed = 0;
  for (const auto& c : pc.cocycles) {
    verdicts.push_back(verify_claim(c));
    const auto& v = verdicts.back();
    if (v.confirmed()) {
      ++confirmed;
    } else if (!v.cocycle && !v.failing_pair) {
      o.fail(v.id + ": not a cocycle but no failing pair reported");
    }
  }
  std::vector<RestrictionVerdict> restrictions;
  for (const auto& r : pc.restrictions) {
    restrictions.push_back(verify_restriction(r));
    if (!restrictions.back().confirmed()) o.fail(r.id + " not confirmed");
  }
  std::vector<SpanVerdict> spans;
  for (const auto& s : pc.spans) spans.push_back(verify_span(s, pc));

  // The committed errata file must match a fresh run.
  std::ifstream in(std::string(SUPERDENSITY_SOURCE_DIR) + "/docs/errata.md");
  std::stringstream committed;
  committed << in.rdbuf();
  if (!in) {
    o.fail("docs/errata.md missing");
  } else if (committed.str().find(claims_markdown(verdicts, restrictions, spans)) != 0) {
    o.fail("docs/errata.md is out of date");
  }
  o.notes.push_back(std::to_string(confirmed) + "/" + std::to_string(verdicts.size()) + " confirmed");
  return o;
}

// ---- 9 ----

Outcome lni() {
  Outcome o;
  std::size_t rows = 0, families = 0, bar_eta = 0, eta = 0;
  for (int n = 0; n <= 2; ++n) {
    for (const auto& r : lni_check(n, 12 + n)) {
      ++rows;
      if (r.dim != r.expected) {
        o.fail("n=" + std::to_string(n) + " shift " + r.shift.to_string() + ": dim " + std::to_string(r.dim) +
               ", expected " + std::to_string(r.expected));
      }
      if (r.bar_eta_invariant) {
        ++families;
        bar_eta += *r.bar_eta_invariant;
        eta += r.eta_invariant.value_or(false);
      }
    }
  }
  o.notes.push_back(std::to_string(rows) + " rows");
  o.notes.push_back("theta-derivative family: bar-eta product invariant at " + std::to_string(bar_eta) + "/" +
                    std::to_string(families) + " shifts, eta product at " + std::to_string(eta) + "/" +
                    std::to_string(families) + " (solver basis kept)");
  return o;
}

}  // namespace

int main() {
  int unexpected = 0;
  auto report = [&](int id, const std::string& name, const std::function<Outcome()>& run, double limit) {
    const auto t0 = Clock::now();
    Outcome o = run();
    const double dt = seconds_since(t0);
    if (dt > limit) o.fail("runtime " + std::to_string(dt) + " s exceeds " + std::to_string(limit) + " s");
    const bool known = kKnownFailures.count(id) > 0;
    std::cout << "criterion " << id << " [" << name << "]: " << (o.pass ? "PASS" : "FAIL")
              << (known && !o.pass ? " (known deviation)" : "") << " (" << dt << " s)\n";
    for (const auto& s : o.notes) std::cout << "    " << s << "\n";
    if (o.pass == known) ++unexpected;
    std::cout.flush();
  };

  report(1, "bracket table", bracket_table, kBracketLimit);
  report(2, "axiom suites", axioms, kAxiomLimit);
  report(3, "invariant operator dimensions", invariant_dims, kInvariantLimit);

  const int max_s2[3] = {14, 13, 9};
  TableRun runs[3];
  for (int n = 0; n <= 2; ++n) {
    report(4 + n, "H1 table n=" + std::to_string(n), [&, n] {
      runs[n] = run_table(n, max_s2[n]);
      return table(runs[n]);
    }, kTableLimit[n]);
  }
  report(7, "printed formulas", printed_formulas, 600);
  report(8, "property gates", [&] { return property_gates({&runs[0], &runs[1], &runs[2]}); }, 600);
  report(9, "linear invariants cross-check", lni, 600);

  std::cout << (unexpected == 0 ? "all outcomes as expected\n" : "UNEXPECTED OUTCOMES: " + std::to_string(unexpected) + "\n");
  return unexpected == 0 ? 0 : 1;
}
