#include "helpers.hpp"

#include "superdensity/contact.hpp"

#include <gtest/gtest.h>

using namespace superdensity;

TEST(Contact, AffBracketTable) {
  EXPECT_EQ(contact_bracket(P("1", 1), P("x", 1)), P("1", 1));
  EXPECT_EQ(contact_bracket(P("t1", 1), P("t1", 1)), P("1/2", 1));
  EXPECT_EQ(contact_bracket(P("x", 1), P("t1", 1)), P("-1/2*t1", 1));
  EXPECT_TRUE(contact_bracket(P("1", 1), P("t1", 1)).is_zero());
  EXPECT_THROW(contact_bracket(P("1", 1), P("1", 2)), std::invalid_argument);
}

TEST(Contact, FieldApply) {
  EXPECT_EQ(field_apply(P("1", 2), P("x^2 + t1*t2", 2)), P("2*x", 2));
  EXPECT_EQ(field_apply(P("x", 1), P("t1", 1)), P("1/2*t1", 1));
  EXPECT_EQ(field_apply(P("t1", 1), P("x", 1)), P("1/2*t1", 1));
}

TEST(Contact, Generators) {
  auto names = [](const std::vector<SuperPoly>& gs) {
    std::vector<std::string> out;
    for (const auto& g : gs) out.push_back(g.to_string());
    return out;
  };
  EXPECT_EQ(names(generators({SubalgebraKind::Aff, 1, std::nullopt})), (std::vector<std::string>{"1", "x", "t1"}));
  EXPECT_EQ(names(generators({SubalgebraKind::Aff, 2, std::nullopt})),
            (std::vector<std::string>{"1", "x", "t1", "t2", "t1*t2"}));
  EXPECT_EQ(names(generators({SubalgebraKind::Aff, 0, std::nullopt})), (std::vector<std::string>{"1", "x"}));
  EXPECT_EQ(names(generators({SubalgebraKind::Aff, 2, 2})), (std::vector<std::string>{"1", "x", "t1"}));
  EXPECT_EQ(generators({SubalgebraKind::K, 2, std::nullopt}, 3).size(), 16u);
  EXPECT_EQ(generators({SubalgebraKind::K, 2, 1}, 3).size(), 8u);
}

TEST(Contact, HomomorphismAndAntisymmetry) {
  for (int n = 0; n <= 2; ++n) {
    auto ms = monomials(n, 2);
    for (const auto& F : ms) {
      for (const auto& G : ms) {
        const int s = (parity_of(F) && parity_of(G)) ? -1 : 1;
        SuperPoly FG = contact_bracket(F, G);
        ASSERT_EQ(FG, contact_bracket(G, F) * Scalar(-s));
        for (const auto& h : ms) {
          SuperPoly lhs = field_apply(FG, h);
          SuperPoly rhs = field_apply(F, field_apply(G, h)) - field_apply(G, field_apply(F, h)) * Scalar(s);
          ASSERT_EQ(lhs, rhs) << F.to_string() << " | " << G.to_string() << " | " << h.to_string();
        }
      }
    }
  }
}

TEST(Contact, Jacobi) {
  for (int n = 0; n <= 2; ++n) {
    auto ms = monomials(n, 2);
    for (const auto& F : ms) {
      for (const auto& G : ms) {
        for (const auto& H : ms) {
          if (F.x_degree() + G.x_degree() + H.x_degree() > 4) continue;
          const int s = (parity_of(F) && parity_of(G)) ? -1 : 1;
          SuperPoly lhs = contact_bracket(F, contact_bracket(G, H));
          SuperPoly rhs = contact_bracket(contact_bracket(F, G), H) + contact_bracket(G, contact_bracket(F, H)) * Scalar(s);
          ASSERT_EQ(lhs, rhs);
        }
      }
    }
  }
}
