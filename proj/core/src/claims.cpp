#include "superdensity/claims.hpp"

#include "superdensity/parse.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace superdensity {

extern const char* const kBuiltinClaimsText;

namespace {

AlgebraicScalar algebraic_from_json(const nlohmann::json& j) {
  if (j.is_string()) return AlgebraicScalar(Rational::parse(j.get<std::string>()));
  return AlgebraicScalar(sqrt_field(j.at("radical").get<long>()), Rational::parse(j.at("a").get<std::string>()),
                         Rational::parse(j.at("b").get<std::string>()));
}

ClaimCoeff coeff_from_json(const nlohmann::json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  return algebraic_from_json(j);
}

ClaimTerm term_from_json(const nlohmann::json& j) {
  ClaimTerm t;
  t.coeff = coeff_from_json(j.at("coeff"));
  t.sigma_G = j.at("sign_G").get<bool>();
  t.g_dx = j.at("G").at("dx").get<unsigned>();
  t.g_eta = j.at("G").at("eta").get<std::vector<int>>();
  t.f_dx = j.at("F").at("dx").get<unsigned>();
  t.f_eta = j.at("F").at("eta").get<std::vector<int>>();
  return t;
}

std::vector<AlgebraicScalar> values_from_json(const nlohmann::json& j, const char* key) {
  std::vector<AlgebraicScalar> r;
  if (!j.contains(key)) return r;
  for (const auto& v : j.at(key)) r.push_back(algebraic_from_json(v));
  return r;
}

// x = p + q sqrt(D) with D the discriminant of the field.
struct Radical {
  Rational p, q, D;
};

Radical radical_form(const AlgebraicScalar& x) {
  if (x.is_rational() || !x.field()) return {x.a(), Rational(0), Rational(0)};
  const QuadraticField& f = *x.field();
  return {x.a() - x.b() * f.c1 / Rational(2), x.b() / Rational(2), f.discriminant()};
}

}  // namespace

std::shared_ptr<const QuadraticField> sqrt_field(long d) {
  static std::mutex m;
  static std::map<long, std::shared_ptr<const QuadraticField>> cache;
  std::lock_guard<std::mutex> lock(m);
  auto& f = cache[d];
  if (!f) f = std::make_shared<const QuadraticField>(QuadraticField{Rational(-d), Rational(0)});
  return f;
}

bool algebraic_equal(const AlgebraicScalar& x, const AlgebraicScalar& y) {
  const Radical a = radical_form(x), b = radical_form(y);
  if (a.p != b.p || a.q.sign() != b.q.sign()) return false;
  return a.q * a.q * a.D == b.q * b.q * b.D;
}

std::string algebraic_text(const AlgebraicScalar& x) {
  const Radical r = radical_form(x);
  if (r.q.is_zero()) return r.p.to_string();
  // sqrt(N/M) = sqrt(N M) / M, then pull squares out of N M.
  mpz_class rad = r.D.num() * r.D.den();
  Rational q = r.q / Rational(r.D.den());
  mpz_class out = 1;
  for (mpz_class f = 2; f * f <= rad; ++f) {
    while (rad % (f * f) == 0) {
      rad /= f * f;
      out *= f;
    }
  }
  q *= Rational(out);
  std::string s = r.p.is_zero() ? "" : r.p.to_string();
  const Rational mag = q.abs();
  const std::string root = "sqrt(" + rad.get_str() + ")";
  const std::string term = mag.is_one() ? root : mag.to_string() + "*" + root;
  if (s.empty()) return q.sign() < 0 ? "-" + term : term;
  return s + (q.sign() < 0 ? " - " : " + ") + term;
}

const CocycleClaim& PaperClaims::cocycle(const std::string& id) const {
  for (const auto& c : cocycles) {
    if (c.id == id) return c;
  }
  throw std::out_of_range("unknown claim id: " + id);
}

const TableClaim* PaperClaims::table(int n) const {
  for (const auto& t : tables) {
    if (t.n == n) return &t;
  }
  return nullptr;
}

PaperClaims parse_claims(const nlohmann::json& j) {
  PaperClaims pc;
  pc.version = j.at("version").get<int>();
  for (const auto& t : j.at("tables")) {
    TableClaim tc{t.at("n").get<int>(), t.at("max_twice_shift").get<int>(), {}};
    for (const auto& c : t.at("cells")) {
      TableCellClaim cell{Rational::parse(c.at("shift").get<std::string>()), c.at("generic").get<std::size_t>(), {}};
      if (c.contains("special")) {
        for (const auto& s : c.at("special")) {
          cell.special.emplace_back(algebraic_from_json(s.at("lambda")), s.at("dim").get<std::size_t>());
        }
      }
      tc.cells.push_back(std::move(cell));
    }
    pc.tables.push_back(std::move(tc));
  }
  for (const auto& c : j.at("cocycles")) {
    CocycleClaim cc;
    cc.id = c.at("id").get<std::string>();
    cc.label = c.at("label").get<std::string>();
    cc.n = c.at("n").get<int>();
    cc.shift = Rational::parse(c.at("shift").get<std::string>());
    const auto& lam = c.at("lambda");
    if (!(lam.is_string() && lam.get<std::string>() == "l")) cc.lambda = algebraic_from_json(lam);
    for (const auto& t : c.at("terms")) cc.terms.push_back(term_from_json(t));
    cc.excluded = values_from_json(c, "excluded");
    pc.cocycles.push_back(std::move(cc));
  }
  for (const auto& r : j.at("restrictions")) {
    if (r.at("factor").get<std::string>() != "-theta") throw std::invalid_argument("unsupported restriction factor");
    RestrictionClaim rc;
    rc.id = r.at("id").get<std::string>();
    rc.n = r.at("n").get<int>();
    rc.shift = Rational::parse(r.at("shift").get<std::string>());
    rc.statement = r.at("statement").get<std::string>();
    for (const auto& t : r.at("target")) rc.target.push_back(term_from_json(t));
    rc.excluded = values_from_json(r, "nontrivial_except");
    pc.restrictions.push_back(std::move(rc));
  }
  for (const auto& s : j.at("spans")) {
    pc.spans.push_back(SpanClaim{s.at("id").get<std::string>(), s.at("n").get<int>(),
                                 Rational::parse(s.at("shift").get<std::string>()),
                                 s.at("cocycles").get<std::vector<std::string>>()});
  }
  for (const auto& l : j.at("lni")) {
    pc.lni.push_back(LniClaim{l.at("family").get<std::string>(), l.at("shift").get<std::string>(),
                              l.at("n_min").get<int>(), l.at("operator").get<std::string>()});
  }
  return pc;
}

const nlohmann::json& builtin_claims_json() {
  static const nlohmann::json j = nlohmann::json::parse(kBuiltinClaimsText);
  return j;
}

const PaperClaims& builtin_claims() {
  static const PaperClaims pc = parse_claims(builtin_claims_json());
  return pc;
}

}  // namespace superdensity
