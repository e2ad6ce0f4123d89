#include <gtest/gtest.h>

#include <random>

#include "kei/ev_group.hpp"

namespace kei {
namespace {

EVElement ev(int rho, std::initializer_list<Generator> word) {
  return {rho, ReducedWord::coxeter(word, 2)};
}

std::vector<EVElement> ev_ball(std::size_t radius) {
  std::vector<EVElement> out;
  for (const auto& w : ball_enumerate(2, WordMode::coxeter, radius)) {
    out.push_back({0, w});
    out.push_back({1, w});
  }
  return out;
}

TEST(EVGroup, InvolutionExamples) {
  EXPECT_TRUE(ev_is_involution(ev_rho()));
  EXPECT_FALSE(ev_is_involution(ev(1, {0})));
  EXPECT_EQ(ev_multiply(ev(1, {0}), ev(1, {0})), ev(0, {0, 1}));
  EXPECT_TRUE(ev_is_involution(ev(0, {0, 1, 0})));
  EXPECT_FALSE(ev_is_involution(ev_identity()));
  // σ τ·ρ squares to σ τ·τ σ = e.
  EXPECT_TRUE(ev_is_involution(ev(1, {0, 1})));
}

TEST(EVGroup, RhoSwapsSigmaAndTau) {
  EXPECT_EQ(ev_conjugate(ev_rho(), ev_sigma()), ev_tau());
  EXPECT_EQ(ev_conjugate(ev_rho(), ev_tau()), ev_sigma());
  EXPECT_EQ(ev_conjugate(ev_sigma(), ev_tau()), ev(0, {0, 1, 0}));
}

TEST(EVGroup, Format) {
  EXPECT_EQ(format_ev(ev_rho()), "ρ");
  EXPECT_EQ(format_ev(ev(0, {0, 1, 0})), "σ τ σ");
  EXPECT_EQ(format_ev(ev(1, {0, 1})), "σ τ ρ");
  EXPECT_EQ(format_ev(ev_identity()), "e");
}

TEST(EVGroup, GroupLawsOnRandomTriples) {
  auto ball = ev_ball(5);
  std::mt19937 rng(3);
  for (int i = 0; i < 5000; ++i) {
    const auto& a = ball[rng() % ball.size()];
    const auto& b = ball[rng() % ball.size()];
    const auto& c = ball[rng() % ball.size()];
    ASSERT_EQ(ev_multiply(ev_multiply(a, b), c), ev_multiply(a, ev_multiply(b, c)));
    ASSERT_EQ(ev_multiply(a, ev_inverse(a)), ev_identity());
    ASSERT_EQ(ev_multiply(ev_inverse(a), a), ev_identity());
  }
}

TEST(EVGroup, InvolutionsFormAnInvolutoryQuandle) {
  std::vector<EVElement> inv;
  for (const auto& x : ev_ball(7))
    if (ev_is_involution(x)) inv.push_back(x);
  ASSERT_FALSE(inv.empty());
  for (const auto& x : inv) {
    EXPECT_EQ(ev_conjugate(x, x), x);
    for (const auto& y : inv) {
      auto xy = ev_conjugate(x, y);
      ASSERT_TRUE(ev_is_involution(xy));
      ASSERT_EQ(ev_conjugate(x, xy), y);
    }
  }
  std::mt19937 rng(4);
  for (int i = 0; i < 5000; ++i) {
    const auto& x = inv[rng() % inv.size()];
    const auto& y = inv[rng() % inv.size()];
    const auto& z = inv[rng() % inv.size()];
    ASSERT_EQ(ev_conjugate(x, ev_conjugate(y, z)),
              ev_conjugate(ev_conjugate(x, y), ev_conjugate(x, z)));
  }
}

TEST(EVProbe, FindsTheSwapRelationAtDepthOne) {
  auto r = ev_freeness_probe(1);
  ASSERT_TRUE(r.relation);
  FreeKei free(ev_generator_alphabet());
  EXPECT_EQ(free.format_operation(r.relation->lhs), "ρ▷σ");
  EXPECT_EQ(free.format_operation(r.relation->rhs), "τ");
  EXPECT_EQ(*r.value, ev_tau());
  EXPECT_EQ(r.relation->depth(), 1u);
  EXPECT_FALSE(ev_freeness_probe(0).relation);
}

}  // namespace
}  // namespace kei
