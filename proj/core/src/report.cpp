#include "superdensity/report.hpp"

#include <sstream>

namespace superdensity {

namespace {

Json pair_json(const std::optional<std::pair<Monomial, Monomial>>& p) {
  if (!p) return nullptr;
  return Json::array({monomial_text(p->first), monomial_text(p->second)});
}

Json cell_json(const H1Cell& c, int n, const Rational& shift) {
  Json j{{"lambda", to_json(c.lambda)},
         {"factor", c.factor.is_zero() ? Json(nullptr) : Json(c.factor.to_string())},
         {"dim_Z", c.dim_Z},
         {"dim_B", c.dim_B},
         {"dim_H1", c.dim_H1}};
  Json b = Json::array();
  for (const auto& ch : c.basis) b.push_back(to_json(ch, n, c.lambda, shift));
  j["basis"] = b;
  return j;
}

std::string resonance_list(const std::vector<H1Cell>& cells) {
  std::string s;
  for (const auto& c : cells) {
    if (!s.empty()) s += ", ";
    s += "l = " + algebraic_text(c.lambda) + " (" + std::to_string(c.dim_H1) + ")";
  }
  return s.empty() ? "none" : s;
}

std::string expected_text(const PaperExpectation& e) {
  std::string s = std::to_string(e.generic);
  for (const auto& [lam, d] : e.special) s += "; l = " + algebraic_text(lam) + " (" + std::to_string(d) + ")";
  return s;
}

}  // namespace

std::string monomial_text(const Monomial& m) {
  std::string s = m.x == 0 ? "" : (m.x == 1 ? "x" : "x^" + std::to_string(m.x));
  for (int i = 1; i <= kMaxArity; ++i) {
    if (m.theta & theta_bit(i)) s += (s.empty() ? "" : "*") + std::string("t") + std::to_string(i);
  }
  return s.empty() ? "1" : s;
}

Json to_json(const AlgebraicScalar& x) { return algebraic_text(x); }

Json to_json(const AlgebraicCochain& c, int n, const AlgebraicScalar& lambda, const Rational& shift) {
  bool rational = lambda.is_rational();
  for (const auto& [k, v] : c) rational = rational && v.is_rational();
  if (rational) {
    std::map<BiKey, Scalar> nf;
    for (const auto& [k, v] : c) nf[k] = Scalar(v.a());
    BiDiffOp J = BiDiffOp::from_normal_form(n, nf);
    J.set_weights(Scalar(-1), Scalar(lambda.a()), Scalar(lambda.a() + shift));
    return Json{{"operator", to_json(J)}};
  }
  Json terms = Json::array();
  for (const auto& [k, v] : c) {
    terms.push_back(Json{{"coeff", algebraic_text(v)},
                         {"x_deg", k.a},
                         {"theta_mask", k.theta},
                         {"slot1", {{"dx", k.w1.k}, {"eta_mask", k.w1.eta}}},
                         {"slot2", {{"dx", k.w2.k}, {"eta_mask", k.w2.eta}}}});
  }
  return Json{{"terms", terms}};
}

Json to_json(const H1Report& r) {
  Json j;
  j["n"] = r.n;
  j["shift"] = r.shift.to_string();
  j["mode"] = r.lambda_value ? "value" : "symbolic";
  j["lambda"] = r.lambda_value ? to_json(*r.lambda_value) : Json("l");
  j["degree_bound"] = r.degree_bound;
  j["relative_dim"] = r.relative_dim;
  j["dim_Z"] = r.dim_Z;
  j["dim_B"] = r.dim_B;
  j["dim_H1"] = r.dim_H1;
  j["cocycle_locus"] = r.cocycle_locus.to_string();
  j["coboundary_locus"] = r.coboundary_locus.to_string();
  Json res = Json::array(), reg = Json::array();
  for (const auto& c : r.resonances) res.push_back(cell_json(c, r.n, r.shift));
  for (const auto& c : r.regular_roots) reg.push_back(cell_json(c, r.n, r.shift));
  j["resonances"] = res;
  j["regular_roots"] = reg;
  Json basis = Json::array();
  for (const auto& b : r.basis) basis.push_back(to_json(b));
  j["basis"] = basis;
  j["at_value"] = r.at_value ? cell_json(*r.at_value, r.n, r.shift) : Json(nullptr);
  j["coboundaries_closed"] = r.coboundaries_closed;
  j["stable"] = r.stable;
  j["checks"] = r.checks;
  if (r.paper_expected) {
    Json sp = Json::array();
    for (const auto& [lam, d] : r.paper_expected->special) sp.push_back(Json{{"lambda", to_json(lam)}, {"dim", d}});
    j["paper_expected"] = Json{{"generic", r.paper_expected->generic}, {"special", sp}};
  } else {
    j["paper_expected"] = nullptr;
  }
  j["discrepancies"] = r.discrepancies;
  return j;
}

Json to_json(const ClaimVerdict& v) {
  return Json{{"id", v.id},
              {"label", v.label},
              {"n", v.n},
              {"shift", v.shift.to_string()},
              {"lambda", v.lambda ? to_json(*v.lambda) : Json("l")},
              {"degree_bound", v.degree_bound},
              {"confirmed", v.confirmed()},
              {"in_ansatz", v.in_ansatz},
              {"vanishes_on_aff", v.vanishes_on_aff},
              {"invariant", v.invariant},
              {"cocycle", v.cocycle},
              {"nontrivial", v.nontrivial},
              {"failing_pair", pair_json(v.failing_pair)},
              {"notes", v.notes}};
}

Json to_json(const RestrictionVerdict& v) {
  Json t = Json::array();
  for (const auto& e : v.trivial_at) t.push_back(to_json(e));
  return Json{{"id", v.id},
              {"confirmed", v.confirmed()},
              {"found", v.found},
              {"nontrivial", v.nontrivial},
              {"cocycle", v.cocycle ? to_json(*v.cocycle) : Json(nullptr)},
              {"trivial_at", t},
              {"notes", v.notes}};
}

Json to_json(const SpanVerdict& v) {
  return Json{{"id", v.id}, {"confirmed", v.confirmed()}, {"dim_Z", v.dim_Z}, {"inside_Z", v.inside_Z}, {"spans", v.spans}};
}

Json to_json(const RestrictionComponent& c) {
  const PsiIndex p = kPsiOrder[c.part];
  return Json{{"cocycle", c.cocycle},
              {"part", Json::array({p.a, p.b, p.c})},
              {"lambda", c.lambda.to_string()},
              {"mu", c.mu.to_string()},
              {"pi", c.pi},
              {"vanishes_on_aff", c.vanishes_on_aff},
              {"failing_pair", pair_json(c.failing_pair)},
              {"ok", c.ok()}};
}

Json to_json(const LniRow& r) {
  auto opt = [](const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); };
  return Json{{"n", r.n},
              {"shift", r.shift.to_string()},
              {"dim", r.dim},
              {"expected", r.expected},
              {"bar_eta_invariant", opt(r.bar_eta_invariant)},
              {"eta_invariant", opt(r.eta_invariant)}};
}

std::string to_markdown(const H1Report& r) {
  std::ostringstream os;
  os << "### H1, n = " << r.n << ", mu - l = " << r.shift.to_string();
  if (r.lambda_value) os << ", l = " << algebraic_text(*r.lambda_value);
  os << "\n\n| quantity | value |\n|---|---|\n";
  os << "| degree bound | " << r.degree_bound << " |\n";
  os << "| relative cochains | " << r.relative_dim << " |\n";
  os << "| dim Z (generic) | " << r.dim_Z << " |\n";
  os << "| dim B (generic) | " << r.dim_B << " |\n";
  os << "| dim H1 (generic) | " << r.dim_H1 << " |\n";
  os << "| resonances | " << resonance_list(r.resonances) << " |\n";
  if (r.at_value) os << "| dim H1 at l = " << algebraic_text(r.at_value->lambda) << " | " << r.at_value->dim_H1 << " |\n";
  if (r.paper_expected) os << "| table | " << expected_text(*r.paper_expected) << " |\n";
  for (const auto& b : r.basis) os << "\nbasis: `" << b.to_string() << "`\n";
  for (const auto& c : r.checks) os << "\n- " << c;
  for (const auto& d : r.discrepancies) os << "\n- discrepancy: " << d;
  os << "\n";
  return os.str();
}

std::string h1_table_markdown(int n, const std::vector<H1Report>& reports) {
  std::ostringstream os;
  os << "### H1(K(" << n << "), aff(" << n << "|1); D_{l,mu})\n\n";
  os << "| mu - l | generic | resonances | table | match |\n|---|---|---|---|---|\n";
  for (const auto& r : reports) {
    if (r.n != n) continue;
    os << "| " << r.shift.to_string() << " | " << r.dim_H1 << " | " << resonance_list(r.resonances) << " | "
       << (r.paper_expected ? expected_text(*r.paper_expected) : "-") << " | "
       << (!r.paper_expected ? "-" : (r.discrepancies.empty() ? "yes" : "NO")) << " |\n";
  }
  return os.str();
}

std::string claims_markdown(const std::vector<ClaimVerdict>& verdicts, const std::vector<RestrictionVerdict>& restrictions,
                            const std::vector<SpanVerdict>& spans) {
  std::ostringstream os;
  std::size_t failed = 0;
  for (const auto& v : verdicts) failed += v.confirmed() ? 0 : 1;
  for (const auto& v : restrictions) failed += v.confirmed() ? 0 : 1;
  for (const auto& v : spans) failed += v.confirmed() ? 0 : 1;
  os << "# Printed cocycle verification\n\n";
  os << (failed == 0 ? "No errata: every printed formula was confirmed.\n\n"
                     : std::to_string(failed) + " formula(s) could not be confirmed; see below.\n\n");
  os << "| id | n | mu - l | l | aff | invariant | cocycle | nontrivial | result | notes |\n";
  os << "|---|---|---|---|---|---|---|---|---|---|\n";
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  for (const auto& v : verdicts) {
    std::string notes;
    for (const auto& s : v.notes) notes += (notes.empty() ? "" : "; ") + s;
    os << "| " << v.label << " | " << v.n << " | " << v.shift.to_string() << " | "
       << (v.lambda ? algebraic_text(*v.lambda) : "l") << " | " << yn(v.vanishes_on_aff) << " | " << yn(v.invariant)
       << " | " << yn(v.cocycle) << " | " << yn(v.nontrivial) << " | " << (v.confirmed() ? "confirmed" : "FAILED")
       << " | " << notes << " |\n";
  }
  for (const auto& v : restrictions) {
    os << "\n**" << v.id << "**: " << (v.confirmed() ? "confirmed" : "FAILED");
    for (const auto& s : v.notes) os << "; " << s;
    if (v.cocycle) os << "\n\ncocycle: `" << v.cocycle->to_string() << "`";
    os << "\n";
  }
  for (const auto& v : spans) {
    os << "\n**" << v.id << "**: " << (v.confirmed() ? "confirmed" : "FAILED") << " (dim Z = " << v.dim_Z
       << ", inside Z: " << yn(v.inside_Z) << ", spans modulo B: " << yn(v.spans) << ")\n";
  }
  return os.str();
}

}  // namespace superdensity
