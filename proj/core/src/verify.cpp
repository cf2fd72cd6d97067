#include "superdensity/verify.hpp"

#include "superdensity/report.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace superdensity {

namespace {

const Rational kHalfShift(1, 2);

std::vector<SuperPoly> aff_generators(int n) { return generators(SubalgebraSpec{SubalgebraKind::Aff, n, std::nullopt}); }

// eta_{e1} ... eta_{em} d^k as a normal-ordered word with sign.
std::pair<int, Word> printed_word(unsigned dx, const std::vector<int>& eta) {
  int sign = 1;
  Word w{dx, 0};
  for (auto it = eta.rbegin(); it != eta.rend(); ++it) {
    auto [s, nw] = eta_times(*it, w);
    sign *= s;
    w = nw;
  }
  return {sign, w};
}

// Linear forms in the claim coefficients, evaluated identically in l or at
// a fixed weight.
class Evaluator {
public:
  Evaluator(const std::vector<ClaimCoeff>& coeffs, std::optional<AlgebraicScalar> at) : at_(std::move(at)) {
    for (const auto& c : coeffs) {
      if (at_) {
        values_.push_back(std::holds_alternative<Scalar>(c) ? specialize({std::get<Scalar>(c)}, *at_)[0]
                                                            : std::get<AlgebraicScalar>(c));
      } else if (std::holds_alternative<Scalar>(c)) {
        polys_.push_back(std::get<Scalar>(c));
      } else {
        const auto& a = std::get<AlgebraicScalar>(c);
        if (!a.is_rational()) throw std::invalid_argument("irrational coefficient in a formula for symbolic l");
        polys_.push_back(Scalar(a.a()));
      }
    }
  }

  bool symbolic() const { return !at_; }

  Scalar poly(const PolyVector& row) const {
    Scalar s;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (!row[j].is_zero()) s += row[j] * polys_[j];
    }
    return s;
  }

  AlgebraicScalar value(const PolyVector& row) const {
    AlgebraicScalar s;
    const auto vals = specialize(row, *at_);
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (!vals[j].is_zero()) s += vals[j] * values_[j];
    }
    return s;
  }

  bool vanishes(const PolyVector& row) const { return at_ ? value(row).is_zero() : poly(row).is_zero(); }

private:
  std::optional<AlgebraicScalar> at_;
  std::vector<Scalar> polys_;
  std::vector<AlgebraicScalar> values_;
};

template <class Key>
using Rows = std::map<Key, PolyVector>;

template <class Key, class Map>
void collect(Rows<Key>& rows, const Map& nf, std::size_t j, std::size_t cols, auto&& key_of) {
  for (const auto& [k, c] : nf) {
    auto it = rows.try_emplace(key_of(k), PolyVector(cols)).first;
    it->second[j] += c;
  }
}

std::size_t generic_rank(const std::vector<PolyVector>& vectors) {
  if (vectors.empty()) return 0;
  const std::size_t len = vectors.front().size();
  ParamMatrix M(vectors.size());
  for (std::size_t i = 0; i < len; ++i) {
    PolyVector r(vectors.size());
    for (std::size_t j = 0; j < vectors.size(); ++j) r[j] = vectors[j][i];
    if (std::any_of(r.begin(), r.end(), [](const Scalar& p) { return !p.is_zero(); })) M.add_row(std::move(r));
  }
  if (M.rows() == 0) return 0;
  return generic_nullspace(M).rank;
}

PolyVector combine(const std::vector<PolyVector>& vs, const PolyVector& c, std::size_t len) {
  PolyVector r(len);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (c[i].is_zero()) continue;
    for (std::size_t j = 0; j < len; ++j) {
      if (!vs[i][j].is_zero()) r[j] += c[i] * vs[i][j];
    }
  }
  return r;
}

std::vector<AlgebraicScalar> at(const PolyVector& v, const AlgebraicScalar& x) { return specialize(v, x); }

// Generic cocycle space of a cell, in ansatz coordinates.
struct CocycleSpace {
  RelativeCochains rc;
  std::vector<PolyVector> Z;
  std::vector<BiDiffOp> ops;
};

CocycleSpace cocycle_space(int n, const Rational& shift, unsigned D) {
  CocycleSpace cs{relative_cochains(n, shift), {}, {}};
  if (cs.rc.basis.empty()) return cs;
  const CocycleSystem sys = cocycle_system(n, cs.rc.basis, D);
  const std::size_t len = cs.rc.ansatz.terms.size();
  for (const auto& z : generic_nullspace(sys.matrix).basis) {
    cs.Z.push_back(combine(cs.rc.coords, z, len));
    BiDiffOp op(n, Scalar(-1), lambda_param(), lambda_param() + Scalar(shift));
    for (std::size_t i = 0; i < z.size(); ++i) {
      if (!z[i].is_zero()) op += cs.rc.basis[i] * z[i];
    }
    cs.ops.push_back(std::move(op));
  }
  return cs;
}

std::vector<PolyVector> coboundary_coords(const Ansatz& a, const std::vector<BiDiffOp>& ops) {
  std::vector<PolyVector> r;
  for (const auto& op : ops) {
    auto v = ansatz_coordinates(a, op);
    if (!v) throw std::logic_error("coboundary outside the ansatz");
    r.push_back(std::move(*v));
  }
  return r;
}

SuperPoly embed(const SuperPoly& p, int n) {
  SuperPoly r(n);
  for (const auto& [m, c] : p.terms()) r.add_term(m.x, m.theta, c);
  return r;
}

}  // namespace

BiDiffOp claim_term_operator(int n, const Rational& shift, const ClaimTerm& t) {
  const Scalar lam = lambda_param();
  auto [sg, wg] = printed_word(t.g_dx, t.g_eta);
  auto [sf, wf] = printed_word(t.f_dx, t.f_eta);
  BiDiffOp u(n, Scalar(-1), lam, lam + Scalar(shift));
  u.add(WordPair{wg, wf}, SuperPoly(n, Scalar(sg * sf)));
  // The application convention carries (-1)^{|W_F||G|}; undo it, and apply
  // sigma to G where the formula asks for it.
  if (t.sigma_G != bool(wf.parity())) u = compose_slot1(u, sigma_op(n, Scalar(-1)));
  return u;
}

std::optional<BiDiffOp> claim_operator(const CocycleClaim& c) {
  if (c.lambda && !c.lambda->is_rational()) return std::nullopt;
  BiDiffOp J(c.n, Scalar(-1), lambda_param(), lambda_param() + Scalar(c.shift));
  for (const auto& t : c.terms) {
    Scalar coeff;
    if (std::holds_alternative<Scalar>(t.coeff)) {
      coeff = std::get<Scalar>(t.coeff);
    } else {
      const auto& a = std::get<AlgebraicScalar>(t.coeff);
      if (!a.is_rational()) return std::nullopt;
      coeff = Scalar(a.a());
    }
    J += claim_term_operator(c.n, c.shift, t) * coeff;
  }
  if (c.lambda) J = J.substitute(0, Scalar(c.lambda->a()));
  return J;
}

ClaimVerdict verify_claim(const CocycleClaim& c, std::optional<unsigned> degree_bound) {
  ClaimVerdict v;
  v.id = c.id;
  v.label = c.label;
  v.n = c.n;
  v.shift = c.shift;
  v.lambda = c.lambda;
  const Rational k = c.shift + Rational(1);
  v.degree_bound = degree_bound.value_or(default_degree_bound(k));

  std::vector<BiDiffOp> units;
  std::vector<ClaimCoeff> coeffs;
  for (const auto& t : c.terms) {
    units.push_back(claim_term_operator(c.n, c.shift, t));
    coeffs.push_back(t.coeff);
  }
  const Evaluator ev(coeffs, c.lambda);
  const std::size_t N = units.size();

  // Weight homogeneity.
  const Ansatz a = build_ansatz(c.n, k);
  const std::set<BiKey> allowed(a.terms.begin(), a.terms.end());
  Rows<BiKey> nf_rows;
  for (std::size_t j = 0; j < N; ++j) collect(nf_rows, units[j].normal_form(), j, N, [](const BiKey& b) { return b; });
  bool any = false;
  for (const auto& [key, row] : nf_rows) {
    if (ev.vanishes(row)) continue;
    any = true;
    if (!allowed.count(key)) {
      v.in_ansatz = false;
      v.notes.push_back("term outside the order-" + k.to_string() + " ansatz");
    }
  }
  if (!any) {
    v.nontrivial = false;
    v.notes.push_back("the formula is the zero operator");
  }

  // Vanishing on aff and invariance.
  const auto gens = aff_generators(c.n);
  for (const auto& h : gens) {
    Rows<OpWord> van;
    Rows<BiKey> inv;
    for (std::size_t j = 0; j < N; ++j) {
      collect(van, fix_first(units[j], h).normal_form(), j, N, [](const OpWord& w) { return w; });
      collect(inv, act_on_bi(h, units[j]).normal_form(), j, N, [](const BiKey& b) { return b; });
    }
    const bool vz = std::all_of(van.begin(), van.end(), [&](const auto& r) { return ev.vanishes(r.second); });
    const bool iz = std::all_of(inv.begin(), inv.end(), [&](const auto& r) { return ev.vanishes(r.second); });
    if (!vz) {
      v.vanishes_on_aff = false;
      v.notes.push_back("nonzero on X_{" + h.to_string() + "}");
    }
    if (!iz) {
      v.invariant = false;
      v.notes.push_back("not invariant under X_{" + h.to_string() + "}");
    }
  }

  // Cocycle identity, rows in increasing pair order.
  const CocycleSystem sys = cocycle_system(c.n, units, v.degree_bound, true);
  for (std::size_t i = 0; i < sys.matrix.rows(); ++i) {
    if (ev.vanishes(sys.matrix.row(i))) continue;
    v.cocycle = false;
    v.failing_pair = std::make_pair(sys.labels[i].F, sys.labels[i].G);
    v.notes.push_back("cocycle identity fails first on (" + monomial_text(sys.labels[i].F) + ", " +
                      monomial_text(sys.labels[i].G) + ")");
    break;
  }

  // Independence from the coboundaries.
  if (any) {
    const auto cobs = coboundary_space(c.n, c.shift).ops;
    std::vector<std::map<BiKey, Scalar>> cob_nf;
    std::set<BiKey> keys;
    for (const auto& [key, row] : nf_rows) keys.insert(key);
    for (const auto& op : cobs) {
      cob_nf.push_back(op.normal_form());
      for (const auto& [key, s] : cob_nf.back()) keys.insert(key);
    }
    auto entry = [](const std::map<BiKey, Scalar>& m, const BiKey& key) {
      auto it = m.find(key);
      return it == m.end() ? Scalar() : it->second;
    };
    if (ev.symbolic()) {
      std::vector<PolyVector> cols(cobs.size());
      PolyVector claim;
      for (const auto& key : keys) {
        for (std::size_t j = 0; j < cobs.size(); ++j) cols[j].push_back(entry(cob_nf[j], key));
        auto it = nf_rows.find(key);
        claim.push_back(it == nf_rows.end() ? Scalar() : ev.poly(it->second));
      }
      const std::size_t r0 = generic_rank(cols);
      cols.push_back(claim);
      v.nontrivial = generic_rank(cols) > r0;
    } else {
      std::vector<std::vector<AlgebraicScalar>> cols(cobs.size());
      std::vector<AlgebraicScalar> claim;
      for (const auto& key : keys) {
        for (std::size_t j = 0; j < cobs.size(); ++j) cols[j].push_back(at({entry(cob_nf[j], key)}, *c.lambda)[0]);
        auto it = nf_rows.find(key);
        claim.push_back(it == nf_rows.end() ? AlgebraicScalar() : ev.value(it->second));
      }
      v.nontrivial = !in_span(cols, claim);
    }
    if (!v.nontrivial) v.notes.push_back("lies in the coboundary span");
  }

  // The weights a symbolic statement leaves out.
  if (!c.lambda) {
    for (const auto& e : c.excluded) {
      CocycleClaim ce = c;
      ce.lambda = e;
      ce.excluded.clear();
      const ClaimVerdict ve = verify_claim(ce, v.degree_bound);
      v.notes.push_back("at excluded l = " + algebraic_text(e) + ": " +
                        (ve.confirmed() ? "still a nontrivial cocycle"
                                        : std::string(ve.cocycle ? "cocycle" : "not a cocycle") +
                                              (ve.nontrivial ? ", nontrivial" : ", trivial")));
    }
  }
  return v;
}

ClaimVerdict verify_printed(const std::string& id, std::optional<unsigned> degree_bound) {
  return verify_claim(builtin_claims().cocycle(id), degree_bound);
}

RestrictionVerdict verify_restriction(const RestrictionClaim& r, std::optional<unsigned> degree_bound) {
  RestrictionVerdict out;
  out.id = r.id;
  const int n = r.n;
  if (n < 1) throw std::invalid_argument("restriction needs n >= 1");
  const unsigned D = degree_bound.value_or(default_degree_bound(r.shift + Rational(1)));
  const CocycleSpace cs = cocycle_space(n, r.shift, D);
  if (cs.ops.empty()) {
    out.notes.push_back("no cocycles in this cell");
    return out;
  }
  BiDiffOp target(n - 1, Scalar(-1), lambda_param(), lambda_param() + Scalar(r.shift + kHalfShift));
  for (const auto& t : r.target) {
    target += claim_term_operator(n - 1, r.shift + kHalfShift, t) * std::get<Scalar>(t.coeff);
  }
  const std::size_t m = cs.ops.size();
  const SuperPoly minus_theta = SuperPoly::theta(n, n) * Scalar(-1);
  ParamMatrix M(m + 1);
  for (unsigned a = 0; a <= D; ++a) {
    for (unsigned b = 0; a + b <= D; ++b) {
      const Density g{SuperPoly::monomial(n, a, 0), Scalar(-1)};
      const Density f{SuperPoly::monomial(n, b, 0), lambda_param()};
      const Density g0{SuperPoly::monomial(n - 1, a, 0), Scalar(-1)};
      const Density f0{SuperPoly::monomial(n - 1, b, 0), lambda_param()};
      std::map<Monomial, PolyVector> rows;
      auto put = [&](const SuperPoly& p, std::size_t col, const Scalar& sign) {
        for (const auto& [mono, c] : p.terms()) {
          auto it = rows.try_emplace(mono, PolyVector(m + 1)).first;
          it->second[col] += c * sign;
        }
      };
      for (std::size_t i = 0; i < m; ++i) put(apply_bi(cs.ops[i], g, f).payload, i, Scalar(1));
      put(minus_theta * embed(apply_bi(target, g0, f0).payload, n), m, Scalar(-1));
      for (auto& [mono, row] : rows) M.add_row(std::move(row));
    }
  }
  const SolutionSpace S = generic_nullspace(M);
  for (const auto& y : S.basis) {
    if (y[m].is_zero()) continue;
    BiDiffOp J(n, Scalar(-1), lambda_param(), lambda_param() + Scalar(r.shift));
    PolyVector coords(cs.Z.front().size());
    for (std::size_t i = 0; i < m; ++i) {
      if (y[i].is_zero()) continue;
      J += cs.ops[i] * y[i];
      for (std::size_t j = 0; j < coords.size(); ++j) coords[j] += y[i] * cs.Z[i][j];
    }
    // Normalize so that the target appears with coefficient exactly 1
    // when that factor is a constant.
    if (y[m].is_constant()) J *= Scalar(y[m].constant_term().inverse());
    out.found = true;
    out.cocycle = J;
    const auto cobs = coboundary_coords(cs.rc.ansatz, coboundary_space(n, r.shift).ops);
    std::vector<PolyVector> cols = cobs;
    const std::size_t r0 = generic_rank(cols);
    cols.push_back(coords);
    out.nontrivial = generic_rank(cols) > r0;
    for (const auto& e : r.excluded) {
      std::vector<std::vector<AlgebraicScalar>> vs;
      for (const auto& c : cobs) vs.push_back(at(c, e));
      const auto ce = at(coords, e);
      const bool zero = std::all_of(ce.begin(), ce.end(), [](const AlgebraicScalar& s) { return s.is_zero(); });
      if (zero || in_span(vs, ce)) {
        out.trivial_at.push_back(e);
        out.notes.push_back("trivial at l = " + algebraic_text(e));
      } else {
        out.notes.push_back("still nontrivial at l = " + algebraic_text(e));
      }
    }
    break;
  }
  if (!out.found) out.notes.push_back("no cocycle restricts to the stated operator");
  return out;
}

SpanVerdict verify_span(const SpanClaim& s, const PaperClaims& pc) {
  SpanVerdict out;
  out.id = s.id;
  const unsigned D = default_degree_bound(s.shift + Rational(1));
  const CocycleSpace cs = cocycle_space(s.n, s.shift, D);
  out.dim_Z = cs.Z.size();
  std::vector<PolyVector> claims;
  for (const auto& id : s.cocycles) {
    const auto op = claim_operator(pc.cocycle(id));
    if (!op) throw std::invalid_argument("span check needs formulas over Q(l)");
    auto v = ansatz_coordinates(cs.rc.ansatz, *op);
    if (!v) return out;
    claims.push_back(std::move(*v));
  }
  std::vector<PolyVector> zc = cs.Z;
  zc.insert(zc.end(), claims.begin(), claims.end());
  out.inside_Z = generic_rank(zc) == out.dim_Z;
  std::vector<PolyVector> bc = coboundary_coords(cs.rc.ansatz, coboundary_space(s.n, s.shift).ops);
  bc.insert(bc.end(), claims.begin(), claims.end());
  out.spans = generic_rank(bc) == out.dim_Z;
  return out;
}

std::optional<PaperExpectation> expected_h1(const PaperClaims& pc, int n, const Rational& shift) {
  const TableClaim* t = pc.table(n);
  if (!t) return std::nullopt;
  const Rational s2 = shift * Rational(2);
  if (!s2.is_integer() || s2 < Rational(-2) || s2 > Rational(t->max_twice_shift)) return std::nullopt;
  PaperExpectation e;
  for (const auto& cell : t->cells) {
    if (cell.shift != shift) continue;
    e.generic = cell.generic;
    e.special = cell.special;
  }
  return e;
}

void compare_with_paper(H1Report& rep, const PaperClaims& pc) {
  const auto e = expected_h1(pc, rep.n, rep.shift);
  if (!e) return;
  rep.paper_expected = e;
  const std::string cell = "n=" + std::to_string(rep.n) + " shift=" + rep.shift.to_string();
  if (rep.dim_H1 != e->generic) {
    rep.discrepancies.push_back(cell + ": generic dim " + std::to_string(rep.dim_H1) + ", table " +
                                std::to_string(e->generic));
  }
  std::vector<bool> matched(rep.resonances.size(), false);
  for (const auto& [lam, dim] : e->special) {
    bool found = false;
    for (std::size_t i = 0; i < rep.resonances.size(); ++i) {
      if (!algebraic_equal(rep.resonances[i].lambda, lam)) continue;
      found = matched[i] = true;
      if (rep.resonances[i].dim_H1 != dim) {
        rep.discrepancies.push_back(cell + " l=" + algebraic_text(lam) + ": dim " +
                                    std::to_string(rep.resonances[i].dim_H1) + ", table " + std::to_string(dim));
      }
    }
    if (!found) {
      rep.discrepancies.push_back(cell + ": table lists l=" + algebraic_text(lam) + " (dim " + std::to_string(dim) +
                                  ") but no resonance was found there");
    }
  }
  for (std::size_t i = 0; i < rep.resonances.size(); ++i) {
    if (!matched[i]) {
      rep.discrepancies.push_back(cell + ": resonance l=" + algebraic_text(rep.resonances[i].lambda) + " (dim " +
                                  std::to_string(rep.resonances[i].dim_H1) + ") is not in the table");
    }
  }
  if (rep.at_value) {
    std::size_t want = e->generic;
    for (const auto& [lam, dim] : e->special) {
      if (algebraic_equal(lam, rep.at_value->lambda)) want = dim;
    }
    if (rep.at_value->dim_H1 != want) {
      rep.discrepancies.push_back(cell + " l=" + algebraic_text(rep.at_value->lambda) + ": dim " +
                                  std::to_string(rep.at_value->dim_H1) + ", table " + std::to_string(want));
    }
  }
}

std::vector<RestrictionComponent> restriction_checks(const H1Report& rep) {
  std::vector<RestrictionComponent> out;
  if (rep.n < 1) return out;
  const int n = rep.n;
  const unsigned D = default_degree_bound(rep.shift + Rational(1));
  std::vector<std::pair<std::string, BiDiffOp>> cocycles;
  for (const auto& J : rep.basis) cocycles.emplace_back("generic", J);
  for (const auto& r : rep.resonances) {
    if (!r.lambda.is_rational()) continue;
    for (const auto& cochain : r.basis) {
      std::map<BiKey, Scalar> nf;
      for (const auto& [key, c] : cochain) nf[key] = Scalar(c.a());
      BiDiffOp J = BiDiffOp::from_normal_form(n, nf);
      J.set_weights(Scalar(-1), Scalar(r.lambda.a()), Scalar(r.lambda.a() + rep.shift));
      cocycles.emplace_back("l=" + r.lambda.a().to_string(), std::move(J));
    }
  }
  const auto gens = aff_generators(n - 1);
  for (const auto& [name, J] : cocycles) {
    const PsiParts parts = decompose_psi(J);
    for (std::size_t idx = 0; idx < parts.size(); ++idx) {
      if (kPsiOrder[idx].a != 1) continue;
      const BiDiffOp& P = parts[idx];
      RestrictionComponent rc{idx, name, P.lambda(), P.mu(), P.pi2() != P.pi_t(), true, std::nullopt};
      for (const auto& h : gens) rc.vanishes_on_aff = rc.vanishes_on_aff && fix_first(P, h).is_zero();
      rc.failing_pair = first_cocycle_failure(n - 1, P, D);
      out.push_back(std::move(rc));
    }
  }
  return out;
}

std::vector<LniRow> lni_check(int n, int max_twice_shift) {
  std::vector<LniRow> out;
  const SubalgebraSpec aff{SubalgebraKind::Aff, n, std::nullopt};
  const auto gens = aff_generators(n);
  const Scalar lam = lambda_param();
  for (int s2 = 0; s2 <= max_twice_shift; ++s2) {
    LniRow row;
    row.n = n;
    row.shift = Rational(s2, 2);
    row.dim = solve_invariance_lin(n, row.shift, aff).basis.size();
    const bool dk = s2 % 2 == 0;
    const bool bar = n >= 1 && s2 >= n && (s2 - n) % 2 == 0;
    row.expected = (dk || bar) ? 1 : 0;
    if (bar) {
      const unsigned k = unsigned((s2 - n) / 2);
      const Scalar mu = lam + Scalar(row.shift);
      auto product = [&](int coef) {
        LinDiffOp A = LinDiffOp::word(n, lam, mu, Word{k, 0}, SuperPoly(n, Scalar(1)));
        for (int i = n; i >= 1; --i) {
          LinDiffOp e = LinDiffOp::word(n, lam, mu, Word{0, theta_bit(i)}, SuperPoly(n, Scalar(1)));
          if (coef != 0) e += LinDiffOp::word(n, lam, mu, Word{1, 0}, SuperPoly::theta(n, i) * Scalar(coef));
          A = compose(e, A);
        }
        return std::all_of(gens.begin(), gens.end(), [&](const SuperPoly& h) { return act_on_lin(h, A).is_zero(); });
      };
      // d_i + theta_i d_x = eta_i + 2 theta_i d_x.
      row.bar_eta_invariant = product(2);
      row.eta_invariant = product(0);
    }
    out.push_back(row);
  }
  return out;
}

std::vector<OpenQuestionNote> open_questions(const PaperClaims& pc) {
  std::vector<OpenQuestionNote> out;
  {
    H1Options o;
    o.stability_check = false;
    o.lambda_value = AlgebraicScalar(Rational(-1));
    const H1Report r = h1(1, Rational(2), o);
    std::string s = "dim H1 = " + std::to_string(r.at_value->dim_H1) + " at l = -1";
    for (const auto& c : r.at_value->basis) {
      std::map<BiKey, Scalar> nf;
      for (const auto& [key, v] : c) nf[key] = Scalar(v.a());
      s += "; basis cocycle " + BiDiffOp::from_normal_form(1, nf).to_string();
    }
    out.push_back({"n=1, shift 2, l = -1 (no printed formula)", s});
  }
  {
    const ClaimVerdict v = verify_printed("C_l_l+4");
    std::string s = v.confirmed() ? "printed formula confirmed" : "suspected misprint:";
    if (!v.confirmed()) {
      for (const auto& note : v.notes) s += " " + note + ";";
    }
    out.push_back({"C_{l,l+4} coefficient pattern", s});
  }
  for (const auto& sp : pc.spans) {
    const SpanVerdict v = verify_span(sp, pc);
    out.push_back({"span of " + sp.id, std::string(v.inside_Z ? "inside Z" : "NOT inside Z") +
                                           (v.spans ? ", spans Z modulo B" : ", does not span Z modulo B") +
                                           " (dim Z = " + std::to_string(v.dim_Z) + ")"});
  }
  return out;
}

}  // namespace superdensity
