#include "superdensity/serialize.hpp"

#include "superdensity/parse.hpp"

#include <stdexcept>

namespace superdensity {

namespace {

const char* parity_name(Parity p, bool flip) {
  switch (p) {
    case Parity::Zero:
      return "zero";
    case Parity::Mixed:
      return "mixed";
    case Parity::Even:
      return flip ? "odd" : "even";
    case Parity::Odd:
      return flip ? "even" : "odd";
  }
  return "mixed";
}

Json word_json(const Word& w) { return Json{{"dx", w.k}, {"eta_mask", w.eta}}; }

Word word_from(const Json& j) { return Word{j.at("dx").get<unsigned>(), j.at("eta_mask").get<ThetaMask>()}; }

}  // namespace

Json scalar_to_json(const Scalar& s) { return s.to_string(); }

Scalar scalar_from_json(const Json& j) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  return parse_scalar(j.get<std::string>());
}

Json to_json(const BiDiffOp& J) {
  Json terms = Json::array();
  for (const auto& [key, c] : J.normal_form()) {
    terms.push_back(Json{{"coeff", scalar_to_json(c)},
                         {"x_deg", key.a},
                         {"theta_mask", key.theta},
                         {"slot1", word_json(key.w1)},
                         {"slot2", word_json(key.w2)}});
  }
  const bool flip = J.pi1() ^ J.pi2() ^ J.pi_t();
  return Json{{"n", J.arity()},
              {"tau", scalar_to_json(J.tau())},
              {"lambda", scalar_to_json(J.lambda())},
              {"mu", scalar_to_json(J.mu())},
              {"parity", parity_name(J.term_parity(), flip)},
              {"pi", {J.pi1(), J.pi2(), J.pi_t()}},
              {"terms", terms}};
}

BiDiffOp bidiffop_from_json(const Json& j) {
  const int n = j.at("n").get<int>();
  if (n < 0 || n > kMaxArity) throw std::invalid_argument("arity out of range");
  bool p1 = false, p2 = false, pt = false;
  if (j.contains("pi")) {
    const Json& pi = j.at("pi");
    p1 = pi.at(0).get<bool>();
    p2 = pi.at(1).get<bool>();
    pt = pi.at(2).get<bool>();
  }
  std::map<BiKey, Scalar> nf;
  for (const Json& t : j.at("terms")) {
    BiKey key{t.at("x_deg").get<unsigned>(), t.at("theta_mask").get<ThetaMask>(), word_from(t.at("slot1")),
              word_from(t.at("slot2"))};
    if ((key.theta | key.w1.eta | key.w2.eta) >> n) throw std::invalid_argument("mask exceeds arity");
    nf[key] += scalar_from_json(t.at("coeff"));
  }
  BiDiffOp J = BiDiffOp::from_normal_form(n, nf);
  J.set_weights(scalar_from_json(j.at("tau")), scalar_from_json(j.at("lambda")), scalar_from_json(j.at("mu")));
  J.set_pi(p1, p2, pt);
  return J;
}

Json to_json(const LinDiffOp& A) {
  Json terms = Json::array();
  for (const auto& [w, c] : A.normal_form()) {
    terms.push_back(Json{{"coeff", scalar_to_json(c)},
                         {"x_deg", w.a},
                         {"theta_mask", w.theta},
                         {"dx", w.k},
                         {"eta_mask", w.eta}});
  }
  return Json{{"n", A.arity()},
              {"lambda", scalar_to_json(A.lambda())},
              {"mu", scalar_to_json(A.mu())},
              {"parity", parity_name(A.term_parity(), A.pi_src() ^ A.pi_tgt())},
              {"pi", {A.pi_src(), A.pi_tgt()}},
              {"terms", terms}};
}

LinDiffOp lindiffop_from_json(const Json& j) {
  const int n = j.at("n").get<int>();
  if (n < 0 || n > kMaxArity) throw std::invalid_argument("arity out of range");
  bool src = false, tgt = false;
  if (j.contains("pi")) {
    src = j.at("pi").at(0).get<bool>();
    tgt = j.at("pi").at(1).get<bool>();
  }
  LinDiffOp A(n, scalar_from_json(j.at("lambda")), scalar_from_json(j.at("mu")), src, tgt);
  for (const Json& t : j.at("terms")) {
    const ThetaMask theta = t.at("theta_mask").get<ThetaMask>();
    const Word w{t.at("dx").get<unsigned>(), t.at("eta_mask").get<ThetaMask>()};
    if ((theta | w.eta) >> n) throw std::invalid_argument("mask exceeds arity");
    A.add(w, SuperPoly::monomial(n, t.at("x_deg").get<unsigned>(), theta, scalar_from_json(t.at("coeff"))));
  }
  return A;
}

}  // namespace superdensity
