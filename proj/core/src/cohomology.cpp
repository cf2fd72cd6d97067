#include "superdensity/cohomology.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <tuple>

namespace superdensity {

namespace {

int twice_of(const Rational& r, const char* what) {
  const Rational t = r * Rational(2);
  if (!t.is_integer()) throw std::invalid_argument(std::string(what) + " must lie in 1/2 Z");
  return int(t.num().get_si());
}

// Rows keyed by an arbitrary ordered label, one column per unknown.
template <class Key>
class RowCollector {
public:
  explicit RowCollector(std::size_t cols) : cols_(cols) {}
  void add(const Key& key, std::size_t col, const Scalar& c) {
    auto it = rows_.try_emplace(key, PolyVector(cols_)).first;
    it->second[col] += c;
  }
  const std::map<Key, PolyVector>& rows() const { return rows_; }
  void flush(ParamMatrix& M) const {
    for (const auto& [k, r] : rows_) {
      if (std::any_of(r.begin(), r.end(), [](const ParamPoly& p) { return !p.is_zero(); })) M.add_row(r);
    }
  }

private:
  std::size_t cols_;
  std::map<Key, PolyVector> rows_;
};

PolyVector scaled_sum(const std::vector<PolyVector>& vs, const PolyVector& c, std::size_t len) {
  PolyVector r(len);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (c[i].is_zero()) continue;
    for (std::size_t j = 0; j < len; ++j) {
      if (!vs[i][j].is_zero()) r[j] += c[i] * vs[i][j];
    }
  }
  return r;
}

bool in_aff(const Monomial& m) { return (m.x == 0 && popcount(m.theta) <= 2) || (m.x == 1 && m.theta == 0); }

std::vector<Monomial> monomials_upto(int n, unsigned D) {
  std::vector<Monomial> r;
  for (unsigned a = 0; a <= D; ++a) {
    for (unsigned s = 0; s < (1u << n); ++s) r.push_back(Monomial{a, ThetaMask(s)});
  }
  return r;
}

// Unordered pairs ordered by (a + b, F, G).
std::vector<std::pair<Monomial, Monomial>> monomial_pairs(int n, unsigned D) {
  const auto mons = monomials_upto(n, D);
  std::vector<std::pair<Monomial, Monomial>> r;
  for (std::size_t i = 0; i < mons.size(); ++i) {
    for (std::size_t j = i; j < mons.size(); ++j) {
      if (mons[i].x + mons[j].x <= D) r.emplace_back(mons[i], mons[j]);
    }
  }
  std::stable_sort(r.begin(), r.end(), [](const auto& p, const auto& q) {
    return p.first.x + p.second.x < q.first.x + q.second.x;
  });
  return r;
}

SuperPoly mono(int n, const Monomial& m) { return SuperPoly::monomial(n, m.x, m.theta); }

// Rational square matrix inverse by Gauss-Jordan; throws when singular.
std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> a) {
  const std::size_t d = a.size();
  std::vector<std::vector<Rational>> inv(d, std::vector<Rational>(d));
  for (std::size_t i = 0; i < d; ++i) inv[i][i] = Rational(1);
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t p = c;
    while (p < d && a[p][c].is_zero()) ++p;
    if (p == d) throw std::logic_error("invert: singular matrix");
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    const Rational s = a[c][c].inverse();
    for (std::size_t j = 0; j < d; ++j) {
      a[c][j] *= s;
      inv[c][j] *= s;
    }
    for (std::size_t r = 0; r < d; ++r) {
      if (r == c || a[r][c].is_zero()) continue;
      const Rational f = a[r][c];
      for (std::size_t j = 0; j < d; ++j) {
        a[r][j] -= f * a[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

// Coordinates with respect to a fixed family of rational vectors.
class CoordinateSolver {
public:
  explicit CoordinateSolver(const std::vector<PolyVector>& basis) : basis_(basis) {
    const std::size_t d = basis.size();
    if (d == 0) return;
    const std::size_t len = basis[0].size();
    // greedy pivot columns
    std::vector<std::vector<Rational>> rows;
    std::vector<std::vector<Rational>> reduced;
    std::vector<std::size_t> lead;
    for (std::size_t i = 0; i < d; ++i) {
      std::vector<Rational> v(len);
      for (std::size_t j = 0; j < len; ++j) v[j] = basis[i][j].constant_value();
      for (std::size_t r = 0; r < reduced.size(); ++r) {
        if (v[lead[r]].is_zero()) continue;
        const Rational f = v[lead[r]] / reduced[r][lead[r]];
        for (std::size_t j = 0; j < len; ++j) v[j] -= f * reduced[r][j];
      }
      std::size_t p = 0;
      while (p < len && v[p].is_zero()) ++p;
      if (p == len) throw std::logic_error("CoordinateSolver: dependent basis");
      lead.push_back(p);
      reduced.push_back(std::move(v));
    }
    pivots_ = lead;
    std::vector<std::vector<Rational>> sub(d, std::vector<Rational>(d));
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t i = 0; i < d; ++i) sub[r][i] = basis[i][pivots_[r]].constant_value();
    }
    inv_ = invert(std::move(sub));
  }

  std::optional<PolyVector> solve(const PolyVector& v) const {
    const std::size_t d = basis_.size();
    PolyVector y(d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t r = 0; r < d; ++r) {
        if (!inv_[i][r].is_zero() && !v[pivots_[r]].is_zero()) y[i] += v[pivots_[r]] * ParamPoly(inv_[i][r]);
      }
    }
    PolyVector back = scaled_sum(basis_, y, v.size());
    if (back != v) return std::nullopt;
    return y;
  }

private:
  std::vector<PolyVector> basis_;
  std::vector<std::size_t> pivots_;
  std::vector<std::vector<Rational>> inv_;
};

AlgebraicCochain to_cochain(const Ansatz& a, const std::vector<AlgebraicScalar>& v) {
  AlgebraicCochain r;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) r[a.terms[i]] = v[i];
  }
  return r;
}

std::vector<AlgebraicScalar> combine(const std::vector<PolyVector>& coords, const std::vector<AlgebraicScalar>& y,
                                     std::size_t len) {
  std::vector<AlgebraicScalar> r(len);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (y[i].is_zero()) continue;
    for (std::size_t j = 0; j < len; ++j) {
      if (!coords[i][j].is_zero()) r[j] += y[i] * AlgebraicScalar(coords[i][j].constant_value());
    }
  }
  return r;
}

// Reduces v against an echelon list in place; returns true when v survives.
bool reduce_into(std::vector<std::vector<AlgebraicScalar>>& echelon, std::vector<std::size_t>& lead,
                 std::vector<AlgebraicScalar> v) {
  for (std::size_t r = 0; r < echelon.size(); ++r) {
    if (v[lead[r]].is_zero()) continue;
    const AlgebraicScalar f = v[lead[r]] / echelon[r][lead[r]];
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (!echelon[r][j].is_zero()) v[j] -= f * echelon[r][j];
    }
  }
  std::size_t p = 0;
  while (p < v.size() && v[p].is_zero()) ++p;
  if (p == v.size()) return false;
  lead.push_back(p);
  echelon.push_back(std::move(v));
  return true;
}

}  // namespace

bool in_span(const std::vector<std::vector<AlgebraicScalar>>& vectors, const std::vector<AlgebraicScalar>& v) {
  std::vector<std::vector<AlgebraicScalar>> ech;
  std::vector<std::size_t> lead;
  for (const auto& w : vectors) reduce_into(ech, lead, w);
  return !reduce_into(ech, lead, v);
}

std::size_t rank_of(const std::vector<std::vector<AlgebraicScalar>>& vectors) {
  std::vector<std::vector<AlgebraicScalar>> ech;
  std::vector<std::size_t> lead;
  for (const auto& w : vectors) reduce_into(ech, lead, w);
  return ech.size();
}

Ansatz build_ansatz(int n, const Rational& k, unsigned max_theta) {
  const int k2 = twice_of(k, "ansatz order k");
  if (k2 < 0 || k2 > 16) throw std::invalid_argument("ansatz order k out of range: need 0 <= 2k <= 16");
  Ansatz a{n, k, max_theta, k2 & 1, {}};
  const unsigned full = 1u << n;
  for (unsigned s = 0; s < full; ++s) {
    if (unsigned(popcount(ThetaMask(s))) > max_theta) continue;
    for (unsigned e1 = 0; e1 < full; ++e1) {
      for (unsigned e2 = 0; e2 < full; ++e2) {
        const int t = k2 - popcount(ThetaMask(e1)) - popcount(ThetaMask(e2)) + popcount(ThetaMask(s));
        if (t < 0 || (t & 1)) continue;
        const unsigned K = unsigned(t / 2);
        for (unsigned k1 = 0; k1 <= K; ++k1) {
          a.terms.push_back(BiKey{0, ThetaMask(s), Word{k1, ThetaMask(e1)}, Word{K - k1, ThetaMask(e2)}});
        }
      }
    }
  }
  std::sort(a.terms.begin(), a.terms.end());
  return a;
}

BiDiffOp ansatz_operator(const Ansatz& a, const PolyVector& coords, const Scalar& tau, const Scalar& lambda,
                         const Scalar& mu) {
  BiDiffOp J(a.n, tau, lambda, mu);
  for (std::size_t i = 0; i < a.terms.size(); ++i) {
    if (!coords[i].is_zero()) J.add(a.terms[i], coords[i]);
  }
  return J;
}

std::optional<PolyVector> ansatz_coordinates(const Ansatz& a, const BiDiffOp& J) {
  PolyVector r(a.terms.size());
  for (const auto& [key, c] : J.normal_form()) {
    auto it = std::lower_bound(a.terms.begin(), a.terms.end(), key);
    if (it == a.terms.end() || !(*it == key)) return std::nullopt;
    r[std::size_t(it - a.terms.begin())] = c;
  }
  return r;
}

InvariantFamily solve_invariance_bi(const Ansatz& a, const SubalgebraSpec& spec, const Scalar& tau,
                                    const Scalar& lambda) {
  const Scalar mu = tau + lambda + Scalar(a.k);
  const std::size_t N = a.terms.size();
  RowCollector<std::pair<std::size_t, BiKey>> rows(N);
  const auto gens = generators(spec);
  for (std::size_t j = 0; j < N; ++j) {
    BiDiffOp J(a.n, tau, lambda, mu);
    J.add(a.terms[j], Scalar(1));
    for (std::size_t h = 0; h < gens.size(); ++h) {
      for (const auto& [key, c] : act_on_bi(gens[h], J).normal_form()) rows.add({h, key}, j, c);
    }
  }
  ParamMatrix M(N);
  rows.flush(M);
  InvariantFamily fam{a, tau, lambda, mu, generic_nullspace(M), {}};
  for (const auto& v : fam.solutions.basis) fam.basis.push_back(ansatz_operator(a, v, tau, lambda, mu));
  return fam;
}

LinAnsatz build_lin_ansatz(int n, const Rational& shift, unsigned max_theta) {
  const int s2 = twice_of(shift, "shift");
  LinAnsatz a{n, shift, max_theta, s2 & 1, {}};
  const unsigned full = 1u << n;
  for (unsigned s = 0; s < full; ++s) {
    if (unsigned(popcount(ThetaMask(s))) > max_theta) continue;
    for (unsigned e = 0; e < full; ++e) {
      const int t = s2 - popcount(ThetaMask(e)) + popcount(ThetaMask(s));
      if (t < 0 || (t & 1)) continue;
      a.terms.push_back(OpWord{0, ThetaMask(s), unsigned(t / 2), ThetaMask(e)});
    }
  }
  std::sort(a.terms.begin(), a.terms.end());
  return a;
}

LinDiffOp lin_ansatz_operator(const LinAnsatz& a, const PolyVector& coords, const Scalar& lambda, const Scalar& mu) {
  LinDiffOp A(a.n, lambda, mu);
  for (std::size_t i = 0; i < a.terms.size(); ++i) {
    if (coords[i].is_zero()) continue;
    const OpWord& w = a.terms[i];
    A.add(Word{w.k, w.eta}, SuperPoly::monomial(a.n, w.a, w.theta, coords[i]));
  }
  return A;
}

LinInvariantFamily solve_invariance_lin(int n, const Rational& shift, const SubalgebraSpec& spec,
                                        const Scalar& lambda) {
  const LinAnsatz a = build_lin_ansatz(n, shift, unsigned(n));
  const Scalar mu = lambda + Scalar(shift);
  const std::size_t N = a.terms.size();
  RowCollector<std::pair<std::size_t, OpWord>> rows(N);
  const auto gens = generators(spec);
  for (std::size_t j = 0; j < N; ++j) {
    PolyVector e(N);
    e[j] = Scalar(1);
    const LinDiffOp A = lin_ansatz_operator(a, e, lambda, mu);
    for (std::size_t h = 0; h < gens.size(); ++h) {
      for (const auto& [w, c] : act_on_lin(gens[h], A).normal_form()) rows.add({h, w}, j, c);
    }
  }
  ParamMatrix M(N);
  rows.flush(M);
  LinInvariantFamily fam{a, lambda, mu, generic_nullspace(M), {}};
  for (const auto& v : fam.solutions.basis) fam.basis.push_back(lin_ansatz_operator(a, v, lambda, mu));
  return fam;
}

RelativeCochains relative_cochains(int n, const Rational& shift, bool impose_invariance) {
  const Rational k = shift + Rational(1);
  RelativeCochains rc{n, shift, build_ansatz(n, k), impose_invariance, {}, {}};
  const Scalar tau(-1);
  const Scalar lambda = lambda_param();
  const Scalar mu = lambda + Scalar(shift);
  const std::size_t N = rc.ansatz.terms.size();
  RowCollector<std::tuple<int, std::size_t, BiKey>> inv(N);
  RowCollector<std::pair<std::size_t, OpWord>> van(N);
  const auto gens = generators(SubalgebraSpec{SubalgebraKind::Aff, n, std::nullopt});
  for (std::size_t j = 0; j < N; ++j) {
    BiDiffOp J(n, tau, lambda, mu);
    J.add(rc.ansatz.terms[j], Scalar(1));
    for (std::size_t h = 0; h < gens.size(); ++h) {
      for (const auto& [w, c] : fix_first(J, gens[h]).normal_form()) van.add({h, w}, j, c);
      if (!impose_invariance) continue;
      for (const auto& [key, c] : act_on_bi(gens[h], J).normal_form()) inv.add({0, h, key}, j, c);
    }
  }
  ParamMatrix M(N);
  van.flush(M);
  inv.flush(M);
  if (!M.is_constant()) throw std::logic_error("relative_cochains: weight-dependent constraints");
  const SolutionSpace S = generic_nullspace(M);
  rc.coords = S.basis;
  for (const auto& v : S.basis) rc.basis.push_back(ansatz_operator(rc.ansatz, v, tau, lambda, mu));
  return rc;
}

LinDiffOp cocycle_defect(const BiDiffOp& J, const SuperPoly& F, const SuperPoly& G) {
  const int up = J.parity_bit();
  const int fp = F.parity_bit();
  const int gp = G.parity_bit();
  LinDiffOp r = act_on_lin(F, fix_first(J, G));
  if (fp & up) r *= Scalar(-1);
  const LinDiffOp t = act_on_lin(G, fix_first(J, F));
  if (gp & (fp ^ up)) {
    r += t;
  } else {
    r -= t;
  }
  r -= fix_first(J, contact_bracket(F, G));
  return r;
}

CocycleSystem cocycle_system(int n, const std::vector<BiDiffOp>& columns, unsigned degree_bound,
                             bool include_aff_pairs) {
  CocycleSystem sys{degree_bound, ParamMatrix(columns.size()), {}};
  if (columns.empty()) return sys;
  const auto mons = monomials_upto(n, degree_bound);
  std::map<Monomial, std::vector<LinDiffOp>> fixed;
  for (const auto& m : mons) {
    auto& v = fixed[m];
    for (const auto& J : columns) v.push_back(fix_first(J, mono(n, m)));
  }
  for (const auto& [F, G] : monomial_pairs(n, degree_bound)) {
    if (!include_aff_pairs && (in_aff(F) || in_aff(G))) continue;
    const SuperPoly f = mono(n, F), g = mono(n, G);
    const SuperPoly br = contact_bracket(f, g);
    const int fp = f.parity_bit(), gp = g.parity_bit();
    std::map<OpWord, PolyVector> rows;
    for (std::size_t j = 0; j < columns.size(); ++j) {
      const int up = columns[j].parity_bit();
      LinDiffOp r = act_on_lin(f, fixed[G][j]);
      if (fp & up) r *= Scalar(-1);
      const LinDiffOp t = act_on_lin(g, fixed[F][j]);
      if (gp & (fp ^ up)) {
        r += t;
      } else {
        r -= t;
      }
      r -= fix_first(columns[j], br);
      for (const auto& [w, c] : r.normal_form()) {
        auto it = rows.try_emplace(w, PolyVector(columns.size())).first;
        it->second[j] += c;
      }
    }
    for (auto& [w, row] : rows) {
      if (std::all_of(row.begin(), row.end(), [](const ParamPoly& p) { return p.is_zero(); })) continue;
      sys.matrix.add_row(std::move(row));
      sys.labels.push_back(CocycleRow{F, G, w});
    }
  }
  return sys;
}

std::optional<std::pair<Monomial, Monomial>> first_cocycle_failure(int n, const BiDiffOp& J, unsigned degree_bound) {
  for (const auto& [F, G] : monomial_pairs(n, degree_bound)) {
    if (!cocycle_defect(J, mono(n, F), mono(n, G)).is_zero()) return std::make_pair(F, G);
  }
  return std::nullopt;
}

unsigned default_degree_bound(const Rational& k) {
  const int k2 = twice_of(k, "k");
  return unsigned(std::max(0, k2) + 4);
}

BiDiffOp coboundary(const LinDiffOp& A) {
  const int n = A.arity();
  BiDiffOp r = compose_slot2(adjoint_action(n, A.mu()), A);
  r -= compose_left(A, adjoint_action(n, A.lambda()));
  r.set_weights(Scalar(-1), A.lambda(), A.mu());
  return r;
}

CoboundarySpace coboundary_space(int n, const Rational& shift, const Scalar& lambda) {
  CoboundarySpace cs{solve_invariance_lin(n, shift, SubalgebraSpec{SubalgebraKind::Aff, n, std::nullopt}, lambda), {}};
  const auto gens = generators(SubalgebraSpec{SubalgebraKind::Aff, n, std::nullopt});
  for (const auto& A : cs.zero_cochains.basis) {
    BiDiffOp d = coboundary(A);
    for (const auto& h : gens) {
      if (!fix_first(d, h).is_zero()) throw std::logic_error("coboundary does not vanish on aff");
    }
    cs.ops.push_back(std::move(d));
  }
  return cs;
}

namespace {

struct CellData {
  RelativeCochains rc;
  CocycleSystem sys;
  SolutionSpace Z;
  ParamMatrix Y{0};
  SolutionSpace B;
  std::vector<PolyVector> y;  // coordinates of the coboundaries
};

struct Dims {
  std::size_t z = 0, b = 0;
};

Dims dims_at(const CellData& c, const AlgebraicScalar& v) {
  Dims d;
  d.z = c.rc.basis.empty() ? 0 : specialize_and_solve(c.sys.matrix, v).dimension;
  d.b = c.y.empty() ? 0 : specialize_and_solve(c.Y, v).rank;
  return d;
}

std::vector<AlgebraicCochain> special_basis(const CellData& c, const AlgebraicScalar& v) {
  std::vector<AlgebraicCochain> out;
  if (c.rc.basis.empty()) return out;
  const std::size_t len = c.rc.ansatz.terms.size();
  std::vector<std::vector<AlgebraicScalar>> ech;
  std::vector<std::size_t> lead;
  for (const auto& yv : c.y) reduce_into(ech, lead, specialize(yv, v));
  for (const auto& z : specialize_and_solve(c.sys.matrix, v).basis) {
    if (reduce_into(ech, lead, z)) out.push_back(to_cochain(c.rc.ansatz, combine(c.rc.coords, z, len)));
  }
  return out;
}

std::size_t generic_rank(const std::vector<PolyVector>& cols_, std::size_t len) {
  if (cols_.empty()) return 0;
  ParamMatrix M(cols_.size());
  for (std::size_t i = 0; i < len; ++i) {
    PolyVector r(cols_.size());
    for (std::size_t j = 0; j < cols_.size(); ++j) r[j] = cols_[j][i];
    M.add_row(std::move(r));
  }
  return generic_nullspace(M).rank;
}

CellData build_cell(const RelativeCochains& rc, const std::vector<BiDiffOp>& cobs, unsigned D) {
  CellData c{rc, cocycle_system(rc.n, rc.basis, D), {}, ParamMatrix(cobs.size()), {}, {}};
  c.Z = generic_nullspace(c.sys.matrix);
  if (!cobs.empty()) {
    CoordinateSolver solver(rc.coords);
    for (const auto& op : cobs) {
      auto v = ansatz_coordinates(rc.ansatz, op);
      if (!v) throw std::logic_error("coboundary outside the ansatz");
      auto yv = rc.basis.empty() ? std::optional<PolyVector>(PolyVector{}) : solver.solve(*v);
      if (!yv) throw std::logic_error("coboundary outside the relative cochains");
      if (rc.basis.empty() && std::any_of(v->begin(), v->end(), [](const ParamPoly& p) { return !p.is_zero(); })) {
        throw std::logic_error("nonzero coboundary with no relative cochains");
      }
      c.y.push_back(*yv);
    }
    for (std::size_t i = 0; i < rc.basis.size(); ++i) {
      PolyVector r(cobs.size());
      for (std::size_t j = 0; j < cobs.size(); ++j) r[j] = c.y[j][i];
      c.Y.add_row(std::move(r));
    }
    if (rc.basis.empty()) c.y.clear();
    c.B = generic_nullspace(c.Y);
  }
  return c;
}

struct Locus {
  ParamPoly z, b;
  std::vector<std::pair<ParamPoly, AlgebraicScalar>> roots;
};

Locus locus_of(const CellData& c) {
  Locus l;
  auto add = [&](const ResonanceReport& r) {
    for (const auto& res : r.confirmed) {
      bool seen = false;
      for (const auto& [f, v] : l.roots) seen = seen || v == res.root;
      if (!seen) l.roots.emplace_back(res.factor, res.root);
    }
  };
  if (!c.rc.basis.empty()) {
    ResonanceReport rz = find_resonances(c.sys.matrix, c.Z);
    l.z = rz.candidate_locus;
    add(rz);
  }
  if (!c.y.empty()) {
    ResonanceReport rb = find_resonances(c.Y, c.B);
    l.b = rb.candidate_locus;
    add(rb);
  }
  return l;
}

std::string shift_text(int n, const Rational& s) { return "n=" + std::to_string(n) + " shift=" + s.to_string(); }

}  // namespace

H1Report h1(int n, const Rational& shift, const H1Options& opts) {
  if (n < 0 || n > 2) throw std::invalid_argument("h1: n must be 0, 1 or 2");
  const int s2 = twice_of(shift, "shift");
  if (s2 < -2 || s2 > 14) throw std::invalid_argument("h1: need -1 <= shift <= 7");
  H1Report rep;
  rep.n = n;
  rep.shift = shift;
  rep.lambda_value = opts.lambda_value;
  const Rational k = shift + Rational(1);
  rep.degree_bound = opts.degree_bound.value_or(default_degree_bound(k));

  const RelativeCochains rc = relative_cochains(n, shift);
  const CoboundarySpace cob = coboundary_space(n, shift);
  rep.relative_dim = rc.basis.size();
  const CellData cell = build_cell(rc, cob.ops, rep.degree_bound);

  // delta o delta = 0 and B inside Z, identically in lambda.
  for (const auto& yv : cell.y) {
    for (const auto& e : cell.sys.matrix.apply(yv)) rep.coboundaries_closed = rep.coboundaries_closed && e.is_zero();
  }
  rep.checks.push_back(std::string("coboundaries are cocycles: ") + (rep.coboundaries_closed ? "yes" : "NO"));

  rep.dim_Z = rc.basis.empty() ? 0 : cell.Z.generic_dimension;
  rep.dim_B = cell.y.empty() ? 0 : cell.B.rank;
  rep.dim_H1 = rep.dim_Z - rep.dim_B;

  const Locus loc = locus_of(cell);
  rep.cocycle_locus = loc.z;
  rep.coboundary_locus = loc.b;
  for (const auto& [f, v] : loc.roots) {
    const Dims d = dims_at(cell, v);
    H1Cell hc{v, f, d.z, d.b, d.z - d.b, {}};
    if (hc.dim_H1 != rep.dim_H1) {
      hc.basis = special_basis(cell, v);
      rep.resonances.push_back(std::move(hc));
    } else {
      rep.regular_roots.push_back(std::move(hc));
    }
  }

  // Generic basis: Z vectors independent of B over Q(lambda).
  if (rep.dim_H1 > 0) {
    const std::size_t len = rc.ansatz.terms.size();
    std::vector<PolyVector> cols = cell.y;
    std::size_t rank = generic_rank(cols, rc.basis.size());
    for (const auto& z : cell.Z.basis) {
      cols.push_back(z);
      const std::size_t r2 = generic_rank(cols, rc.basis.size());
      if (r2 == rank) {
        cols.pop_back();
        continue;
      }
      rank = r2;
      BiDiffOp op = ansatz_operator(rc.ansatz, scaled_sum(rc.coords, z, len), Scalar(-1), lambda_param(),
                                    lambda_param() + Scalar(shift));
      rep.basis.push_back(std::move(op));
      if (rep.basis.size() == rep.dim_H1) break;
    }
  }

  if (opts.lambda_value) {
    const Dims d = dims_at(cell, *opts.lambda_value);
    H1Cell hc{*opts.lambda_value, ParamPoly(), d.z, d.b, d.z - d.b, {}};
    hc.basis = special_basis(cell, *opts.lambda_value);
    rep.at_value = std::move(hc);
  }

  if (opts.stability_check && !rc.basis.empty()) {
    const CellData wider = build_cell(rc, cob.ops, rep.degree_bound + 2);
    const Locus loc2 = locus_of(wider);
    bool same = wider.Z.generic_dimension == cell.Z.generic_dimension && loc2.roots.size() == loc.roots.size();
    for (const auto& [f, v] : loc2.roots) {
      const Dims a = dims_at(wider, v), b = dims_at(cell, v);
      same = same && a.z == b.z;
    }
    for (const auto& [f, v] : loc.roots) {
      const Dims a = dims_at(wider, v), b = dims_at(cell, v);
      same = same && a.z == b.z;
    }
    rep.stable = same;
    rep.checks.push_back("degree bound " + std::to_string(rep.degree_bound) + " vs " +
                         std::to_string(rep.degree_bound + 2) + ": " + (same ? "stable" : "UNSTABLE"));
  }

  if (opts.random_checks > 0) {
    std::mt19937_64 rng(0x5eed ^ (std::uint64_t(n) << 8) ^ std::uint64_t(s2 + 16));
    std::uniform_int_distribution<long> num(-400, 400), den(1, 37);
    std::size_t done = 0, agree = 0;
    while (done < opts.random_checks) {
      const Rational v(num(rng), den(rng));
      bool on_locus = false;
      for (const auto& [f, r] : loc.roots) on_locus = on_locus || r == AlgebraicScalar(v);
      if (on_locus) continue;
      const Dims d = dims_at(cell, v);
      ++done;
      if (d.z - d.b == rep.dim_H1 && d.z == rep.dim_Z) ++agree;
    }
    rep.checks.push_back("random specializations agreeing with the generic dimension: " + std::to_string(agree) +
                         "/" + std::to_string(done));
    if (agree != done) rep.discrepancies.push_back(shift_text(n, shift) + ": random specialization disagrees");
  }
  if (!rep.coboundaries_closed) rep.discrepancies.push_back(shift_text(n, shift) + ": a coboundary fails the cocycle system");
  if (!rep.stable) rep.discrepancies.push_back(shift_text(n, shift) + ": unstable under D -> D+2");
  return rep;
}

}  // namespace superdensity
