#include "superdensity/param_linalg.hpp"

#include "superdensity/parse.hpp"
#include "superdensity/roots.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <unordered_set>

namespace superdensity {

void ParamMatrix::add_row(PolyVector r) {
  if (r.size() != cols_) throw std::invalid_argument("row length does not match column count");
  rows_.push_back(std::move(r));
}

bool ParamMatrix::is_constant() const {
  for (const auto& r : rows_) {
    for (const auto& e : r) {
      if (!e.is_constant()) return false;
    }
  }
  return true;
}

PolyVector ParamMatrix::apply(const PolyVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("vector length does not match column count");
  PolyVector out(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (!rows_[i][j].is_zero() && !v[j].is_zero()) out[i] += rows_[i][j] * v[j];
    }
  }
  return out;
}

namespace {

// Reduced row echelon form over a field, built one row at a time.
template <class K>
struct Echelon {
  std::size_t cols;
  std::vector<std::vector<K>> rows;
  std::vector<std::size_t> pivots;

  explicit Echelon(std::size_t c) : cols(c) {}

  bool insert(std::vector<K> r) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const K f = r[pivots[i]];
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        if (!rows[i][j].is_zero()) r[j] -= f * rows[i][j];
      }
    }
    std::size_t p = 0;
    while (p < cols && r[p].is_zero()) ++p;
    if (p == cols) return false;
    const K inv = K(1) / r[p];
    for (auto& e : r) {
      if (!e.is_zero()) e *= inv;
    }
    for (auto& row : rows) {
      const K f = row[p];
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        if (!r[j].is_zero()) row[j] -= f * r[j];
      }
    }
    auto pos = std::lower_bound(pivots.begin(), pivots.end(), p) - pivots.begin();
    pivots.insert(pivots.begin() + pos, p);
    rows.insert(rows.begin() + pos, std::move(r));
    return true;
  }

  std::vector<std::vector<K>> nullspace() const {
    std::vector<std::vector<K>> out;
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    for (std::size_t f = 0; f < cols; ++f) {
      if (is_pivot[f]) continue;
      std::vector<K> v(cols, K(0));
      v[f] = K(1);
      for (std::size_t i = 0; i < rows.size(); ++i) v[pivots[i]] = -rows[i][f];
      out.push_back(std::move(v));
    }
    return out;
  }
};

template <class K>
K eval_at(const ParamPoly& p, const std::vector<K>& point) {
  return p.evaluate<K>(std::span<const K>(point.data(), point.size()));
}

// Rational vector -> primitive integer polynomial vector.
PolyVector normalize_rational(const std::vector<Rational>& v) {
  mpz_class den = 1, num = 0;
  for (const auto& x : v) {
    if (x.is_zero()) continue;
    den = lcm(den, x.den());
    num = gcd(num, x.num());
  }
  PolyVector out(v.size());
  int sign = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    Rational s = v[i] * Rational(den) / Rational(num);
    if (sign == 0) sign = s.sign();
    out[i] = ParamPoly(sign < 0 ? -s : s);
  }
  return out;
}

// Divides a polynomial vector by the gcd of its entries and by a rational so
// that the coefficients are coprime integers and the first nonzero entry has a
// positive leading coefficient. Returns the polynomial part removed.
ParamPoly make_primitive(PolyVector& v) {
  ParamPoly g(0);
  for (const auto& e : v) {
    if (e.is_zero()) continue;
    g = g.is_zero() ? e.monic() : gcd(g, e);
    if (g.is_constant()) break;
  }
  if (g.is_zero()) return g;
  if (!g.is_constant()) {
    for (auto& e : v) {
      if (!e.is_zero()) e = divide_exact(e, g);
    }
  }
  mpz_class den = 1, num = 0;
  int sign = 0;
  for (const auto& e : v) {
    for (const auto& t : e.terms()) {
      den = lcm(den, t.coeff.den());
      num = gcd(num, t.coeff.num());
    }
    if (sign == 0 && !e.is_zero()) sign = e.leading_coeff().sign();
  }
  Rational scale = Rational(den) / Rational(num);
  if (sign < 0) scale = -scale;
  for (auto& e : v) {
    if (!e.is_zero()) e *= scale;
  }
  return g;
}

std::vector<Rational> random_point(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-100003, 100003), den(1, 997);
  std::vector<Rational> pt;
  for (std::size_t i = 0; i < ParamPoly::kMaxVars; ++i) pt.emplace_back(num(rng), den(rng));
  return pt;
}

std::size_t max_degree(const std::vector<PolyVector>& rows) {
  std::size_t d = 0;
  for (const auto& r : rows) {
    for (const auto& e : r) {
      if (!e.is_zero()) d = std::max<std::size_t>(d, std::size_t(e.total_degree()));
    }
  }
  return d;
}

bool univariate_or_constant(const ParamMatrix& M, int& var) {
  var = -1;
  for (std::size_t i = 0; i < M.rows(); ++i) {
    for (const auto& e : M.row(i)) {
      if (e.is_zero() || e.is_constant()) continue;
      int v;
      try {
        v = e.sole_variable();
      } catch (const std::invalid_argument&) {
        return false;
      }
      if (var >= 0 && v != var) return false;
      var = v;
    }
  }
  return true;
}

SolutionSpace constant_nullspace(const ParamMatrix& M) {
  Echelon<Rational> ech(M.cols());
  for (std::size_t i = 0; i < M.rows() && ech.rows.size() < M.cols(); ++i) {
    std::vector<Rational> r(M.cols());
    bool any = false;
    for (std::size_t j = 0; j < M.cols(); ++j) {
      if (M.at(i, j).is_zero()) continue;
      r[j] = M.at(i, j).constant_value();
      any = true;
    }
    if (any) ech.insert(std::move(r));
  }
  SolutionSpace S;
  S.cols = M.cols();
  S.rank = ech.rows.size();
  S.pivot_columns = ech.pivots;
  for (const auto& v : ech.nullspace()) S.basis.push_back(normalize_rational(v));
  S.generic_dimension = S.basis.size();
  return S;
}

// Fraction-free Gauss-Jordan on rows known to be generically independent.
void fraction_free(std::vector<PolyVector> rows, std::size_t cols, SolutionSpace& S, bool record) {
  auto note = [&S, record](const ParamPoly& p) {
    if (!record || p.is_zero() || p.is_constant()) return;
    ParamPoly q = p.monic();
    for (const auto& e : S.pivot_polynomials) {
      if (e == q) return;
    }
    S.pivot_polynomials.push_back(q);
  };
  for (auto& r : rows) note(make_primitive(r));
  std::size_t rank = 0;
  std::vector<std::size_t> pivcols;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t best = rows.size();
    int best_deg = 0;
    for (std::size_t r = rank; r < rows.size(); ++r) {
      const ParamPoly& e = rows[r][c];
      if (e.is_zero()) continue;
      const int d = e.total_degree();
      if (best == rows.size() || d < best_deg) {
        best = r;
        best_deg = d;
      }
    }
    if (best == rows.size()) continue;
    std::swap(rows[rank], rows[best]);
    const ParamPoly p = rows[rank][c];
    note(p);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c].is_zero()) continue;
      const ParamPoly a = rows[r][c];
      ParamPoly g = gcd(p, a);
      const ParamPoly pm = divide_exact(p, g), am = divide_exact(a, g);
      for (std::size_t j = 0; j < cols; ++j) {
        ParamPoly v = rows[r][j].is_zero() ? ParamPoly(0) : pm * rows[r][j];
        if (!rows[rank][j].is_zero()) v -= am * rows[rank][j];
        rows[r][j] = std::move(v);
      }
      note(make_primitive(rows[r]));
    }
    pivcols.push_back(c);
    ++rank;
  }
  S.rank = rank;
  S.pivot_columns = pivcols;
  // Back-substitution: x_f = L, x_{c_i} = -row_i[f] L / row_i[c_i].
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivcols) is_pivot[c] = true;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    ParamPoly L(1);
    for (std::size_t i = 0; i < rank; ++i) {
      if (rows[i][f].is_zero()) continue;
      const ParamPoly& d = rows[i][pivcols[i]];
      L = L * divide_exact(d, gcd(L, d));
    }
    PolyVector v(cols);
    v[f] = L;
    for (std::size_t i = 0; i < rank; ++i) {
      if (rows[i][f].is_zero()) continue;
      v[pivcols[i]] = -(rows[i][f] * divide_exact(L, rows[i][pivcols[i]]));
    }
    make_primitive(v);
    S.basis.push_back(std::move(v));
  }
  S.generic_dimension = S.basis.size();
}

bool vanishes_identically(const ParamMatrix& M, const std::vector<PolyVector>& basis, bool univariate) {
  if (basis.empty()) return true;
  if (!univariate) {
    for (const auto& v : basis) {
      for (const auto& e : M.apply(v)) {
        if (!e.is_zero()) return false;
      }
    }
    return true;
  }
  // A univariate polynomial of degree <= d vanishing at d + 1 points is zero.
  std::size_t d = 0;
  for (std::size_t i = 0; i < M.rows(); ++i) d = std::max(d, max_degree({M.row(i)}));
  d += max_degree(basis);
  for (std::size_t t = 0; t <= d; ++t) {
    std::vector<Rational> pt(ParamPoly::kMaxVars, Rational(long(t) * 7 - 3));
    for (const auto& v : basis) {
      std::vector<Rational> vv;
      for (const auto& e : v) vv.push_back(eval_at(e, pt));
      for (std::size_t i = 0; i < M.rows(); ++i) {
        Rational acc;
        for (std::size_t j = 0; j < M.cols(); ++j) {
          if (!M.at(i, j).is_zero() && !vv[j].is_zero()) acc += eval_at(M.at(i, j), pt) * vv[j];
        }
        if (!acc.is_zero()) return false;
      }
    }
  }
  return true;
}

}  // namespace

namespace {

// Picks rows that are independent at a random point, visiting rows in `order`.
std::vector<PolyVector> choose_rows(const ParamMatrix& M, const std::vector<std::size_t>& order, std::mt19937_64& rng) {
  const std::vector<Rational> pt = random_point(rng);
  Echelon<Rational> ech(M.cols());
  std::vector<std::size_t> picked;
  for (std::size_t i : order) {
    if (ech.rows.size() >= M.cols()) break;
    std::vector<Rational> r(M.cols());
    bool any = false;
    for (std::size_t j = 0; j < M.cols(); ++j) {
      if (M.at(i, j).is_zero()) continue;
      r[j] = eval_at(M.at(i, j), pt);
      any = any || !r[j].is_zero();
    }
    if (any && ech.insert(std::move(r))) picked.push_back(i);
  }
  std::sort(picked.begin(), picked.end());
  std::vector<PolyVector> rows;
  for (auto i : picked) rows.push_back(M.row(i));
  return rows;
}

std::size_t max_degree_all(const ParamMatrix& M) {
  std::size_t d = 0;
  for (std::size_t i = 0; i < M.rows(); ++i) d = std::max(d, max_degree({M.row(i)}));
  return d;
}

bool all_low_degree(const ParamPoly& p) {
  if (p.is_constant()) return true;
  try {
    irreducible_factors(p);
    return true;
  } catch (const std::domain_error&) {
    return false;
  }
}


// Determinant of a square rational matrix.
Rational determinant(std::vector<std::vector<Rational>> a) {
  const std::size_t d = a.size();
  Rational det(1);
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t p = c;
    while (p < d && a[p][c].is_zero()) ++p;
    if (p == d) return Rational(0);
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    const Rational inv = a[c][c].inverse();
    for (std::size_t r = c + 1; r < d; ++r) {
      if (a[r][c].is_zero()) continue;
      const Rational f = a[r][c] * inv;
      for (std::size_t j = c; j < d; ++j) {
        if (!a[c][j].is_zero()) a[r][j] -= f * a[c][j];
      }
    }
  }
  return det;
}

// Newton interpolation through (x_i, y_i), returned in variable `var`.
ParamPoly interpolate(const std::vector<Rational>& xs, std::vector<Rational> ys, const VarList& vars, std::size_t var) {
  const std::size_t m = xs.size();
  for (std::size_t j = 1; j < m; ++j) {
    for (std::size_t i = m - 1; i >= j; --i) {
      ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  }
  const ParamPoly x = ParamPoly::variable(vars, var);
  ParamPoly acc(ys[m - 1]);
  for (std::size_t i = m - 1; i-- > 0;) acc = acc * (x - ParamPoly(xs[i])) + ParamPoly(ys[i]);
  return acc;
}

// Common zeros of the r x r minors of a univariate matrix: the gcd of minors
// on random generically nonsingular row and column selections, stopping once
// every factor has degree <= 2 (or after a fixed number of rounds).
ParamPoly rank_drop_locus(const ParamMatrix& M, std::size_t r, std::size_t var, std::mt19937_64& rng) {
  if (r == 0) return ParamPoly(1);
  VarList vars;
  for (std::size_t i = 0; i < M.rows() && !vars; ++i) {
    for (const auto& e : M.row(i)) {
      if (!e.is_constant()) {
        vars = e.vars();
        break;
      }
    }
  }
  const std::size_t deg = r * std::max<std::size_t>(1, max_degree_all(M));
  std::vector<std::size_t> order(M.rows());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  ParamPoly locus;
  for (int round = 0; round < 8; ++round) {
    if (round > 0) std::shuffle(order.begin(), order.end(), rng);
    const std::vector<Rational> pt = random_point(rng);
    Echelon<Rational> ech(M.cols());
    std::vector<std::size_t> picked;
    for (std::size_t i : order) {
      if (ech.rows.size() >= r) break;
      std::vector<Rational> row(M.cols());
      for (std::size_t j = 0; j < M.cols(); ++j) {
        if (!M.at(i, j).is_zero()) row[j] = eval_at(M.at(i, j), pt);
      }
      if (ech.insert(std::move(row))) picked.push_back(i);
    }
    if (picked.size() < r) continue;
    const std::vector<std::size_t> cols = ech.pivots;
    std::vector<Rational> xs, ys;
    for (std::size_t t = 0; t <= deg; ++t) {
      const Rational x(long(t) * 3 - long(deg));
      std::vector<Rational> at(ParamPoly::kMaxVars, x);
      std::vector<std::vector<Rational>> sub(r, std::vector<Rational>(r));
      for (std::size_t a = 0; a < r; ++a) {
        for (std::size_t b = 0; b < r; ++b) {
          const ParamPoly& e = M.at(picked[a], cols[b]);
          if (!e.is_zero()) sub[a][b] = eval_at(e, at);
        }
      }
      xs.push_back(x);
      ys.push_back(determinant(std::move(sub)));
    }
    const ParamPoly minor = interpolate(xs, ys, vars, var);
    if (minor.is_zero()) continue;
    locus = locus.is_zero() ? minor.monic() : gcd(locus, minor);
    if (locus.is_constant()) return ParamPoly(1);
    if (round >= 1 && all_low_degree(locus)) break;
  }
  if (locus.is_zero()) throw std::runtime_error("rank_drop_locus: no nonsingular minor found");
  return square_free_part(locus);
}
}  // namespace

SolutionSpace generic_nullspace(const ParamMatrix& M) {
  if (M.is_constant()) return constant_nullspace(M);
  int var = -1;
  const bool univariate = univariate_or_constant(M, var);
  std::mt19937_64 rng(0x5eed);
  std::vector<std::size_t> order(M.rows());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  SolutionSpace S;
  bool found = false;
  for (int attempt = 0; attempt < 4 && !found; ++attempt) {
    S = SolutionSpace{};
    S.cols = M.cols();
    fraction_free(choose_rows(M, order, rng), M.cols(), S, !univariate);
    found = vanishes_identically(M, S.basis, univariate);
  }
  if (!found) throw std::runtime_error("generic_nullspace: random specialization kept hitting the degeneracy locus");
  if (!univariate) return S;
  const ParamPoly locus = rank_drop_locus(M, S.rank, std::size_t(var), rng);
  if (!locus.is_constant()) S.pivot_polynomials.push_back(locus);
  return S;
}

ParamPoly resonance_candidates(const SolutionSpace& S) {
  ParamPoly acc(1);
  int var = -1;
  for (const auto& p : S.pivot_polynomials) {
    if (p.is_constant()) continue;
    const int v = p.sole_variable();
    if (var >= 0 && v != var) throw std::invalid_argument("resonance analysis needs a single parameter");
    var = v;
    acc = acc * p;
  }
  return acc.is_constant() ? ParamPoly(1) : square_free_part(acc);
}

std::vector<AlgebraicScalar> specialize(const PolyVector& v, const AlgebraicScalar& value, std::size_t var) {
  std::vector<AlgebraicScalar> pt(ParamPoly::kMaxVars, AlgebraicScalar(0));
  pt.at(var) = value;
  std::vector<AlgebraicScalar> out;
  out.reserve(v.size());
  for (const auto& e : v) out.push_back(eval_at(e, pt));
  return out;
}

SpecialSolution specialize_and_solve(const ParamMatrix& M, const AlgebraicScalar& value, std::size_t var) {
  for (std::size_t i = 0; i < M.rows(); ++i) {
    for (const auto& e : M.row(i)) {
      for (const auto& t : e.terms()) {
        for (std::size_t k = 0; k < ParamPoly::kMaxVars; ++k) {
          if (k != var && t.exp[k] != 0) throw std::invalid_argument("specialize_and_solve: matrix involves another parameter");
        }
      }
    }
  }
  SpecialSolution out;
  if (value.is_rational()) {
    std::vector<Rational> pt(ParamPoly::kMaxVars, Rational(0));
    pt[var] = value.a();
    Echelon<Rational> ech(M.cols());
    for (std::size_t i = 0; i < M.rows() && ech.rows.size() < M.cols(); ++i) {
      std::vector<Rational> r(M.cols());
      for (std::size_t j = 0; j < M.cols(); ++j) {
        if (!M.at(i, j).is_zero()) r[j] = eval_at(M.at(i, j), pt);
      }
      ech.insert(std::move(r));
    }
    out.rank = ech.rows.size();
    for (const auto& v : ech.nullspace()) {
      std::vector<AlgebraicScalar> w;
      for (const auto& x : normalize_rational(v)) w.emplace_back(x.is_zero() ? Rational(0) : x.constant_value());
      out.basis.push_back(std::move(w));
    }
  } else {
    std::vector<AlgebraicScalar> pt(ParamPoly::kMaxVars, AlgebraicScalar(0));
    pt[var] = value;
    Echelon<AlgebraicScalar> ech(M.cols());
    for (std::size_t i = 0; i < M.rows() && ech.rows.size() < M.cols(); ++i) {
      std::vector<AlgebraicScalar> r(M.cols(), AlgebraicScalar(0));
      for (std::size_t j = 0; j < M.cols(); ++j) {
        if (!M.at(i, j).is_zero()) r[j] = eval_at(M.at(i, j), pt);
      }
      ech.insert(std::move(r));
    }
    out.rank = ech.rows.size();
    out.basis = ech.nullspace();
  }
  out.dimension = out.basis.size();
  return out;
}

std::vector<std::pair<ParamPoly, AlgebraicScalar>> exact_roots(const ParamPoly& p) {
  std::vector<std::pair<ParamPoly, AlgebraicScalar>> out;
  if (p.is_constant()) return out;
  for (const auto& f : irreducible_factors(p)) {
    const int v = f.sole_variable();
    if (f.degree(std::size_t(v)) == 1) {
      out.emplace_back(f, AlgebraicScalar(rational_roots(f).at(0)));
    } else {
      auto [r0, r1] = quadratic_split(f);
      out.emplace_back(f, r0);
      out.emplace_back(f, r1);
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return x.second.is_rational() && !y.second.is_rational();
  });
  return out;
}

ResonanceReport find_resonances(const ParamMatrix& M, const SolutionSpace& S, std::size_t var) {
  ResonanceReport rep;
  rep.generic_dimension = S.generic_dimension;
  rep.candidate_locus = resonance_candidates(S);
  for (const auto& [factor, root] : exact_roots(rep.candidate_locus)) {
    SpecialSolution sol = specialize_and_solve(M, root, var);
    Resonance r{factor, root, sol.dimension};
    (sol.dimension > S.generic_dimension ? rep.confirmed : rep.rejected).push_back(r);
  }
  return rep;
}

nlohmann::json to_json(const ParamMatrix& M) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < M.rows(); ++i) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& e : M.row(i)) r.push_back(e.to_string());
    rows.push_back(r);
  }
  return nlohmann::json{{"cols", M.cols()}, {"rows", rows}};
}

ParamMatrix param_matrix_from_json(const nlohmann::json& j) {
  ParamMatrix M(j.at("cols").get<std::size_t>());
  for (const auto& r : j.at("rows")) {
    PolyVector row;
    for (const auto& e : r) row.push_back(parse_scalar(e.get<std::string>()));
    M.add_row(std::move(row));
  }
  return M;
}

}  // namespace superdensity
