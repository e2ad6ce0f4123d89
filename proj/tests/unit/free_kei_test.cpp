#include <gtest/gtest.h>

#include <set>

#include "kei/error.hpp"
#include "kei/free_kei.hpp"
#include "oracles.hpp"

namespace kei {
namespace {

const FreeKei kST(Alphabet({"σ", "τ"}));
const FreeKei kRST(Alphabet({"ρ", "σ", "τ"}));

TEST(FreeKei, Embed) {
  auto s = kST.embed(0);
  EXPECT_TRUE(s.prefix.empty());
  EXPECT_EQ(s.center, Generator{0});
  EXPECT_EQ(kST.format(kST.embed(1)), "τ");
  EXPECT_THROW(kST.embed(2), ValidationError);
}

TEST(FreeKei, MakeEnforcesCanonicalForm) {
  EXPECT_THROW(kST.make(ReducedWord::coxeter({0}, 2), 0), ValidationError);
  EXPECT_THROW(kST.make(ReducedWord::coxeter({2}, 3), 0), ValidationError);
  EXPECT_EQ(kST.format(kST.make(ReducedWord::coxeter({0, 1}, 2), 0)), "σ τ σ τ σ");
}

TEST(FreeKei, OperationExamples) {
  auto s = kST.embed(0), t = kST.embed(1);
  auto st = kST.op(s, t);
  EXPECT_EQ(st.prefix, ReducedWord::coxeter({0}, 2));
  EXPECT_EQ(st.center, Generator{1});
  EXPECT_EQ(kST.format(st), "σ τ σ");
  EXPECT_EQ(kST.op(s, s), s);
  auto sts = kST.op(st, s);
  EXPECT_EQ(sts.prefix, ReducedWord::coxeter({0, 1}, 2));
  EXPECT_EQ(sts.center, Generator{0});
  EXPECT_EQ(kST.format(sts), "σ τ σ τ σ");
}

TEST(FreeKei, FormatOperation) {
  auto s = kRST.embed(1), t = kRST.embed(2), r = kRST.embed(0);
  EXPECT_EQ(kRST.format_operation(kRST.op(r, s)), "ρ▷σ");
  EXPECT_EQ(kRST.format_operation(s), "σ");
  EXPECT_EQ(kRST.format_operation(kRST.op(r, kRST.op(s, t))), "ρ▷(σ▷τ)");
}

TEST(FreeKei, ParseCanonicalises) {
  auto x = kST.parse("σ τ σ");
  EXPECT_EQ(x, kST.op(kST.embed(0), kST.embed(1)));
  EXPECT_EQ(kST.parse("σ σ τ"), kST.embed(1));
  EXPECT_THROW(kST.parse("σ τ"), ValidationError);
  EXPECT_THROW(kST.parse("e"), ValidationError);
}

TEST(FreeKei, BallExamples) {
  auto names = [](const FreeKei& f, std::size_t r) {
    std::vector<std::string> out;
    for (const auto& x : f.ball(r)) out.push_back(f.format(x));
    return out;
  };
  EXPECT_EQ(names(kST, 1), (std::vector<std::string>{"σ", "τ"}));
  EXPECT_EQ(names(kST, 3), (std::vector<std::string>{"σ", "τ", "σ τ σ", "τ σ τ"}));
  EXPECT_EQ(names(FreeKei(Alphabet({"σ"})), 5), (std::vector<std::string>{"σ"}));
  EXPECT_TRUE(kST.ball(0).empty());
}

TEST(FreeKei, BallSizeRankTwoIsRadiusPlusOne) {
  for (std::size_t r = 1; r <= 21; r += 2) EXPECT_EQ(kST.ball(r).size(), r + 1);
}

TEST(FreeKei, BallIsSortedAndMatchesPalindromeEnumeration) {
  const FreeKei free(Alphabet::standard(3));
  auto ball = free.ball(9);
  EXPECT_TRUE(std::is_sorted(ball.begin(), ball.end()));
  std::set<ReducedWord> expanded;
  for (const auto& x : ball) expanded.insert(free.expand(x));
  EXPECT_EQ(expanded.size(), ball.size());
  std::size_t palindromes = 0;
  for (const auto& gens : oracle::coxeter_words(3, 9)) {
    auto rev = gens;
    std::reverse(rev.begin(), rev.end());
    if (gens.size() % 2 == 1 && rev == gens) {
      ++palindromes;
      std::vector<Letter> l;
      for (auto g : gens) l.push_back({g, false});
      EXPECT_TRUE(expanded.contains(ReducedWord::reduce(l, WordMode::coxeter, 3)));
    }
  }
  EXPECT_EQ(palindromes, ball.size());
}

TEST(FreeKei, AxiomsOnBalls) {
  for (auto [rank, radius] : {std::pair<std::size_t, std::size_t>{2, 7}, {3, 5}}) {
    const FreeKei free(Alphabet::standard(rank));
    auto ball = free.ball(radius);
    for (const auto& x : ball) {
      EXPECT_EQ(free.op(x, x), x);
      for (const auto& y : ball) {
        EXPECT_EQ(free.op(x, free.op(x, y)), y);
        for (const auto& z : ball)
          ASSERT_EQ(free.op(x, free.op(y, z)), free.op(free.op(x, y), free.op(x, z)));
      }
    }
  }
}

TEST(FreeKei, OperationAgreesWithWordConjugation) {
  const FreeKei free(Alphabet::standard(3));
  auto ball = free.ball(7);
  for (const auto& x : ball)
    for (const auto& y : ball) {
      auto ex = free.expand(x), ey = free.expand(y);
      auto r = free.op(x, y);
      EXPECT_EQ(free.expand(r), multiply(multiply(ex, ey), ex));
      EXPECT_EQ(r.center, y.center);
      EXPECT_TRUE(is_involution(free.expand(r)));
      EXPECT_EQ(free.from_word(free.expand(x)), x);
    }
}

TEST(FreeKei, FixedPointProperty) {
  auto ball = kST.ball(7);
  for (const auto& x : ball)
    for (const auto& y : ball)
      if (kST.op(x, y) == y) EXPECT_EQ(x, y);
}

TEST(FreeKei, NotTheSwapRelation) {
  auto rs = kRST.op(kRST.embed(0), kRST.embed(1));
  EXPECT_EQ(kRST.format(rs), "ρ σ ρ");
  EXPECT_NE(rs, kRST.embed(2));
}

TEST(UniversalExtend, ExampleInDihedralThree) {
  auto eval = universal_extend(kST, dihedral_quandle(3), {0, 1});
  EXPECT_EQ(eval(kST.parse("σ τ σ")), 2u);
  EXPECT_EQ(eval(kST.embed(0)), 0u);
  EXPECT_EQ(eval(kST.embed(1)), 1u);
}

TEST(UniversalExtend, RejectsBadTargetsAndAssignments) {
  EXPECT_THROW(universal_extend(kST, conj_quandle(symmetric_group(4)), {0, 1}), ContractError);
  FiniteQuandle shift(2, {1, 0, 1, 0});
  EXPECT_THROW(universal_extend(kST, shift, {0, 1}), ContractError);
  EXPECT_THROW(universal_extend(kST, dihedral_quandle(3), {0}), ValidationError);
  EXPECT_THROW(universal_extend(kST, dihedral_quandle(3), {0, 3}), ValidationError);
}

TEST(UniversalExtend, AllAssignmentsIntoDihedralThree) {
  auto t = dihedral_quandle(3);
  auto ball = kST.ball(7);
  std::set<std::vector<Element>> signatures;
  for (Element a = 0; a < 3; ++a)
    for (Element b = 0; b < 3; ++b) {
      auto eval = universal_extend(kST, t, {a, b});
      EXPECT_EQ(eval(kST.embed(0)), a);
      EXPECT_EQ(eval(kST.embed(1)), b);
      std::vector<Element> sig;
      for (const auto& x : ball) {
        sig.push_back(eval(x));
        for (const auto& y : ball) ASSERT_EQ(eval(kST.op(x, y)), t.op(eval(x), eval(y)));
      }
      signatures.insert(sig);
    }
  EXPECT_EQ(signatures.size(), 9u);
}

TEST(UniversalExtend, GeneratorOperationIntoDihedralFive) {
  auto t = dihedral_quandle(5);
  auto st = kST.op(kST.embed(0), kST.embed(1));
  for (Element a = 0; a < 5; ++a)
    for (Element b = 0; b < 5; ++b) {
      auto eval = universal_extend(kST, t, {a, b});
      EXPECT_EQ(eval(st), (2 * a + 5 - b) % 5);
    }
}

TEST(UniversalExtend, UnreducedConjugatorsEvaluateAlike) {
  // Inserting g·g into the conjugator must not change the value; this is
  // where λ_g² = id is needed.
  auto t = inv_quandle(symmetric_group(4)).quandle;
  const FreeKei free(Alphabet::standard(3));
  auto eval = universal_extend(free, t, {0, 3, 5});
  const auto& img = eval.images();
  for (const auto& x : free.ball(7)) {
    auto letters = x.prefix.letters();
    for (std::size_t cut = 0; cut <= letters.size(); ++cut)
      for (Generator g = 0; g < 3; ++g) {
        Element v = img[x.center];
        for (std::size_t i = letters.size(); i-- > cut;) v = t.op(img[letters[i].gen], v);
        v = t.op(img[g], t.op(img[g], v));
        for (std::size_t i = cut; i-- > 0;) v = t.op(img[letters[i].gen], v);
        EXPECT_EQ(v, eval(x));
      }
  }
}

TEST(FreenessProbe, DihedralThreeFindsARelation) {
  std::vector<Element> gens{0, 1};
  auto q = dihedral_quandle(3);
  auto r = freeness_probe(q, gens, 3);
  ASSERT_TRUE(r.relation);
  EXPECT_NE(r.relation->lhs, r.relation->rhs);
  EXPECT_LT(r.relation->rhs, r.relation->lhs);
  auto eval = universal_extend(kST, q, gens);
  EXPECT_EQ(eval(r.relation->lhs), eval(r.relation->rhs));
  EXPECT_EQ(*r.value, eval(r.relation->lhs));
  // σ, τ, στσ take all three values; τστ is the first repeat.
  EXPECT_EQ(r.elements_checked, 4u);
}

TEST(FreenessProbe, SingleGeneratorDepthZero) {
  std::vector<Element> gens{2};
  auto r = freeness_probe(dihedral_quandle(5), gens, 0);
  EXPECT_FALSE(r.relation);
  EXPECT_EQ(r.elements_checked, 1u);
}

TEST(FreenessProbe, EqualGeneratorsCollideImmediately) {
  std::vector<Element> gens{1, 1};
  auto r = freeness_probe(dihedral_quandle(5), gens, 2);
  ASSERT_TRUE(r.relation);
  EXPECT_EQ(r.elements_checked, 2u);
}

TEST(FreenessProbe, RespectsLimits) {
  std::vector<Element> gens{0, 1, 2};
  Limits small;
  small.max_word_length = 5;
  EXPECT_THROW(freeness_probe(dihedral_quandle(7), gens, 3, small), LimitError);
}

}  // namespace
}  // namespace kei
