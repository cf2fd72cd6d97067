#include "helpers.hpp"

#include "superdensity/diffop.hpp"

#include <gtest/gtest.h>

using namespace superdensity;

namespace {

const Scalar kL = lambda_param();
const Scalar kT = tau_param();
const Scalar kM = mu_param();

Word W(unsigned k, ThetaMask e = 0) { return Word{k, e}; }

}  // namespace

TEST(DiffOp, ApplyLin) {
  LinDiffOp dx = LinDiffOp::word(1, kL, kM, W(1), P("1", 1));
  EXPECT_EQ(apply_lin(dx, Density{P("x^3", 1), kL}).payload, P("3*x^2", 1));
  LinDiffOp e1 = LinDiffOp::word(1, kL, kM, W(0, 1), P("1", 1));
  Density r = apply_lin(e1, Density{P("t1", 1), kL});
  EXPECT_EQ(r.payload, P("1", 1));
  EXPECT_EQ(r.weight, kM);
  LinDiffOp e12 = LinDiffOp::word(2, kL, kM, W(0, 3), P("1", 2));
  SuperPoly f = P("t2*t1", 2);
  EXPECT_EQ(apply_lin(e12, Density{f, kL}).payload, eta(1, eta(2, f)));
  EXPECT_THROW(apply_lin(e12, Density{f, kM}), std::invalid_argument);
}

TEST(DiffOp, ApplyBi) {
  BiDiffOp J0(1, kT, kL, kT + kL);
  J0.add(WordPair{}, P("1", 1));
  EXPECT_EQ(apply_bi(J0, Density{P("t1", 1), kT}, Density{P("x", 1), kL}).payload, P("x*t1", 1));
  BiDiffOp ee(1, kT, kL, kM);
  ee.add(WordPair{W(0, 1), W(0, 1)}, P("1", 1));
  EXPECT_EQ(apply_bi(ee, Density{P("t1", 1), kT}, Density{P("t1", 1), kL}).payload, P("-1", 1));
  EXPECT_TRUE(apply_bi(ee, Density{P("0", 1), kT}, Density{P("x*t1", 1), kL}).payload.is_zero());
}

TEST(DiffOp, NormalOrderExamples) {
  using G = Generator;
  LinDiffOp a = normal_order(1, {G{G::Eta, 1}, G{G::Eta, 1}});
  EXPECT_EQ(a, LinDiffOp::word(1, kL, kL, W(1), P("-1", 1)));
  LinDiffOp b = normal_order(1, {G{G::Dx, 0}, G{G::X, 0}});
  LinDiffOp expect_b = LinDiffOp::word(1, kL, kL, W(1), P("x", 1)) + LinDiffOp::word(1, kL, kL, W(0), P("1", 1));
  EXPECT_EQ(b, expect_b);
  LinDiffOp c = normal_order(1, {G{G::Eta, 1}, G{G::Theta, 1}});
  LinDiffOp expect_c = LinDiffOp::word(1, kL, kL, W(0), P("1", 1)) + LinDiffOp::word(1, kL, kL, W(0, 1), P("-t1", 1));
  EXPECT_EQ(c, expect_c);
}

TEST(DiffOp, NormalOrderSoundness) {
  using G = Generator;
  const int n = 2;
  std::vector<G> alphabet{{G::X, 0}, {G::Theta, 1}, {G::Theta, 2}, {G::Dx, 0}, {G::Eta, 1}, {G::Eta, 2}};
  auto ms = monomials(n, 4);
  std::vector<std::vector<G>> words{{}};
  for (int len = 1; len <= 4; ++len) {
    std::vector<std::vector<G>> next;
    for (const auto& w : words) {
      if (int(w.size()) != len - 1) continue;
      for (const auto& g : alphabet) {
        auto v = w;
        v.push_back(g);
        next.push_back(v);
      }
    }
    words.insert(words.end(), next.begin(), next.end());
  }
  ASSERT_EQ(words.size(), 1u + 6 + 36 + 216 + 1296);
  for (const auto& w : words) {
    LinDiffOp op = normal_order(n, w);
    for (const auto& m : ms) {
      SuperPoly v = m;
      for (auto it = w.rbegin(); it != w.rend(); ++it) {
        switch (it->kind) {
          case G::X:
            v = SuperPoly::x(n) * v;
            break;
          case G::Theta:
            v = SuperPoly::theta(n, it->index) * v;
            break;
          case G::Dx:
            v = d_x(v);
            break;
          case G::Eta:
            v = eta(it->index, v);
            break;
        }
      }
      ASSERT_EQ(apply_lin(op, Density{m, Scalar(0)}).payload, v);
    }
  }
}

TEST(DiffOp, CompositionMatchesSequentialApplication) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    int n = trial % 3;
    LinDiffOp A = random_lin(rng, n, trial % 2, kL, kL);
    LinDiffOp B = random_lin(rng, n, (trial / 2) % 2, kL, kL);
    LinDiffOp AB = compose(A, B);
    for (const auto& m : monomials(n, 3)) {
      Density d{m, kL};
      ASSERT_EQ(apply_lin(AB, d), apply_lin(A, apply_lin(B, d)));
    }
  }
}

TEST(DiffOp, ActOnLinExamples) {
  LinDiffOp dx = LinDiffOp::word(1, kL, kL, W(1), P("1", 1));
  EXPECT_TRUE(act_on_lin(P("1", 1), dx).is_zero());
  for (unsigned k = 0; k <= 4; ++k) {
    LinDiffOp A = LinDiffOp::word(1, kL, kM, W(k), P("1", 1));
    LinDiffOp expected = A * (kM - kL - Scalar(long(k)));
    EXPECT_EQ(act_on_lin(P("x", 1), A), expected);
  }
  EXPECT_TRUE(act_on_lin(P("t1", 1), LinDiffOp::identity(1, kL)).is_zero());
}

TEST(DiffOp, LiftGenerator) {
  EXPECT_EQ(lift_generator(P("1", 1), kL), LinDiffOp::word(1, kL, kL, W(1), P("1", 1)));
  LinDiffOp lt = lift_generator(P("t1", 1), kL);
  EXPECT_EQ(apply_lin(lt, Density{P("x", 1), kL}).payload, P("1/2*t1", 1));
  EXPECT_EQ(apply_lin(lt, Density{P("x", 1), kL}), act(kL, P("t1", 1), Density{P("x", 1), kL}));
  EXPECT_EQ(apply_lin(lift_generator(P("x", 1), kL), Density{P("1", 1), kL}).payload, SuperPoly(1, kL));
  EXPECT_THROW(lift_generator(P("x^2", 1), kL), std::invalid_argument);
  for (int n = 0; n <= 2; ++n) {
    for (const auto& h : generators({SubalgebraKind::Aff, n, std::nullopt})) {
      LinDiffOp op = lift_generator(h, kL);
      for (const auto& m : monomials(n, 3)) {
        Density d{m, kL};
        ASSERT_EQ(apply_lin(op, d), act(h, d));
      }
    }
  }
}

TEST(DiffOp, ActOnLinRepresentation) {
  std::mt19937 rng(23);
  const int n = 2;
  auto gens = generators({SubalgebraKind::Aff, n, std::nullopt});
  auto ms = monomials(n, 2);
  std::vector<std::pair<SuperPoly, SuperPoly>> pairs;
  for (const auto& f : gens) {
    for (const auto& g : gens) pairs.emplace_back(f, g);
  }
  std::uniform_int_distribution<std::size_t> pick(0, ms.size() - 1);
  for (int i = 0; i < 20; ++i) pairs.emplace_back(ms[pick(rng)], ms[pick(rng)]);
  for (const auto& [F, G] : pairs) {
    for (int par = 0; par <= 1; ++par) {
      LinDiffOp A = random_lin(rng, n, par, kL, kM);
      const int s = (parity_of(F) && parity_of(G)) ? -1 : 1;
      LinDiffOp lhs = act_on_lin(contact_bracket(F, G), A);
      LinDiffOp rhs = act_on_lin(F, act_on_lin(G, A)) - act_on_lin(G, act_on_lin(F, A)) * Scalar(s);
      ASSERT_EQ(lhs, rhs) << F.to_string() << ", " << G.to_string();
    }
  }
}

TEST(DiffOp, BilinearCompositionsMatchEvaluation) {
  std::mt19937 rng(29);
  std::bernoulli_distribution coin;
  for (int trial = 0; trial < 48; ++trial) {
    const int n = 1 + trial % 2;
    const bool p1 = trial & 4, p2 = trial & 8, pt = trial & 16;
    const bool q1 = coin(rng), q2 = coin(rng), q0 = coin(rng);
    BiDiffOp J = random_bi(rng, n, trial % 2, p1, p2, pt);
    LinDiffOp L1 = random_lin(rng, n, (trial / 2) % 2, kT, kT, 1);
    L1.set_pi(q1, p1);
    LinDiffOp L2 = random_lin(rng, n, (trial / 3) % 2, kL, kL, 1);
    L2.set_pi(q2, p2);
    LinDiffOp L0 = random_lin(rng, n, (trial / 5) % 2, kM, kM, 1);
    L0.set_pi(pt, q0);
    BiDiffOp c0 = compose_left(L0, J), c1 = compose_slot1(J, L1), c2 = compose_slot2(J, L2);
    ASSERT_EQ(c1.pi1(), q1);
    ASSERT_EQ(c2.pi2(), q2);
    ASSERT_EQ(c0.pi_t(), q0);
    const int l2p = L2.parity_bit();
    for (const auto& f : monomials(n, 2)) {
      Density F{f, kT, p1}, F1{f, kT, q1};
      const int fp = F.parity_bit();
      for (const auto& g : monomials(n, 2)) {
        Density G{g, kL, p2}, G2{g, kL, q2};
        ASSERT_EQ(apply_bi(c0, F, G), apply_lin(L0, apply_bi(J, F, G)));
        ASSERT_EQ(apply_bi(c1, F1, G), apply_bi(J, apply_lin(L1, F1), G));
        Density expect = apply_bi(J, F, apply_lin(L2, G2));
        if (fp && l2p) expect.payload = -expect.payload;
        ASSERT_EQ(apply_bi(c2, F, G2), expect);
      }
    }
  }
}

TEST(DiffOp, ActOnBiMatchesEvaluation) {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 32; ++trial) {
    const int n = 1 + trial % 2;
    const bool p1 = trial & 2, p2 = trial & 4, pt = trial & 8;
    BiDiffOp J = random_bi(rng, n, trial % 2, p1, p2, pt);
    const int jp = J.parity_bit();
    for (const auto& H : monomials(n, 2)) {
      BiDiffOp XJ = act_on_bi(H, J);
      const int hp = parity_of(H);
      for (const auto& f : monomials(n, 1)) {
        Density F{f, kT, p1};
        for (const auto& g : monomials(n, 1)) {
          Density G{g, kL, p2};
          SuperPoly expect = act(H, apply_bi(J, F, G)).payload;
          SuperPoly tail = apply_bi(J, act(H, F), G).payload;
          SuperPoly t2 = apply_bi(J, F, act(H, G)).payload;
          tail += (hp && F.parity_bit()) ? -t2 : t2;
          expect -= (hp && jp) ? -tail : tail;
          ASSERT_EQ(apply_bi(XJ, F, G).payload, expect);
        }
      }
    }
  }
}

TEST(DiffOp, ActOnBiExamples) {
  BiDiffOp J0(2, kT, kL, kT + kL);
  J0.add(WordPair{}, P("1", 2));
  EXPECT_TRUE(act_on_bi(P("1", 2), J0).is_zero());
  EXPECT_TRUE(act_on_bi(P("t1", 2), J0).is_zero());
  EXPECT_TRUE(act_on_bi(P("t1*t2", 2), J0).is_zero());
  // grading: a shift-k term scales by (mu - tau - lambda - k)
  BiDiffOp J(1, kT, kL, kM);
  J.add(WordPair{W(2), W(1)}, P("1", 1));
  EXPECT_EQ(act_on_bi(P("x", 1), J), J * (kM - kT - kL - Scalar(3)));
}

TEST(DiffOp, ActOnBiRepresentation) {
  std::mt19937 rng(37);
  const int n = 2;
  auto gens = generators({SubalgebraKind::Aff, n, std::nullopt});
  for (int par = 0; par <= 1; ++par) {
    BiDiffOp J = random_bi(rng, n, par, false, par == 1, false);
    for (const auto& F : gens) {
      for (const auto& G : gens) {
        const int s = (parity_of(F) && parity_of(G)) ? -1 : 1;
        BiDiffOp lhs = act_on_bi(contact_bracket(F, G), J);
        BiDiffOp rhs = act_on_bi(F, act_on_bi(G, J)) - act_on_bi(G, act_on_bi(F, J)) * Scalar(s);
        ASSERT_EQ(lhs, rhs);
      }
    }
  }
}

TEST(DiffOp, ApplyBiKoszulSign) {
  // flips exactly when the slot-2 word and the first argument are both odd
  BiDiffOp J(1, kT, kL, kM);
  J.add(WordPair{W(0), W(0, 1)}, P("1", 1));
  Density even{P("x", 1), kT}, odd{P("t1", 1), kT};
  Density G{P("t1", 1), kL};
  EXPECT_EQ(apply_bi(J, even, G).payload, P("x", 1));
  EXPECT_EQ(apply_bi(J, odd, G).payload, P("-t1", 1));
  BiDiffOp K(1, kT, kL, kM);
  K.add(WordPair{W(0, 1), W(0)}, P("1", 1));
  EXPECT_EQ(apply_bi(K, odd, G).payload, P("t1", 1));
}

TEST(DiffOp, AdjointActionAndFixFirst) {
  const int n = 2;
  BiDiffOp A = adjoint_action(n, kL);
  for (const auto& g : monomials(n, 2)) {
    for (const auto& f : monomials(n, 2)) {
      Density d{f, kL};
      EXPECT_EQ(apply_bi(A, Density{g, Scalar(-1)}, d), act(g, d));
      EXPECT_EQ(apply_lin(fix_first(A, g), d), act(g, d));
    }
  }
}

TEST(DiffOp, SigmaOperator) {
  LinDiffOp s = sigma_op(2, kL);
  for (const auto& m : monomials(2, 3)) EXPECT_EQ(apply_lin(s, Density{m, kL}).payload, sigma(m));
}
