#include <gtest/gtest.h>

#include "oracles.hpp"
#include "wordrep/error.hpp"
#include "wordrep/feinj.hpp"
#include "wordrep/periodicity.hpp"

using namespace wordrep;

TEST(AFactorization, Examples) {
  auto f = a_factorization(Word("bbccabcbca"), 'a');
  ASSERT_TRUE(f.has_value());
  EXPECT_EQ(f->w1.str(), "bbcc");
  EXPECT_EQ(f->w2.str(), "bcbc");
  EXPECT_EQ(f->w3.str(), "");
  EXPECT_EQ(f->k, 1u);

  f = a_factorization(Word("abab"), 'a');
  ASSERT_TRUE(f.has_value());
  EXPECT_EQ(f->w1.str(), "");
  EXPECT_EQ(f->w2.str(), "b");
  EXPECT_EQ(f->w3.str(), "b");
  EXPECT_EQ(f->k, 1u);

  EXPECT_FALSE(a_factorization(Word("aabba"), 'a').has_value());
  EXPECT_FALSE(a_factorization(Word("bcb"), 'a').has_value());
}

TEST(AFactorization, SingleOccurrenceHasEmptyGap) {
  auto f = a_factorization(Word("bcabb"), 'a');
  ASSERT_TRUE(f.has_value());
  EXPECT_EQ(f->k, 0u);
  EXPECT_EQ(f->w2.str(), "");
  EXPECT_EQ(f->assemble().str(), "bcabb");
}

TEST(AFactorization, ReassemblesAndAvoidsTheLetter) {
  for (const auto& s : oracle::words_up_to("abc", 7, 1)) {
    Word w(s);
    for (const auto& f : a_factorizations(w)) {
      ASSERT_EQ(f.assemble(), w) << s;
      ASSERT_EQ(f.w1.count(f.letter) + f.w2.count(f.letter) + f.w3.count(f.letter), 0u) << s;
    }
  }
}

TEST(ClassifyBinary, Examples) {
  EXPECT_EQ(classify_binary(Word("abab")).tag, FeInjTag::Infinite);
  EXPECT_EQ(classify_binary(Word("abababba")).tag, FeInjTag::Finite);
  auto unary = classify_binary(Word("aaa"));
  EXPECT_EQ(unary.tag, FeInjTag::Infinite);
  ASSERT_TRUE(unary.witness.has_value());
  EXPECT_GE(unary.witness->exponent, Rational(6));
  EXPECT_THROW(classify_binary(Word("abc")), PreconditionError);
}

TEST(ClassifyGeneral, Examples) {
  EXPECT_EQ(classify_general(Word("abab"), 3).tag, FeInjTag::Infinite);
  auto unknown = classify_general(Word("bbccabcbca"), 3);
  EXPECT_EQ(unknown.tag, FeInjTag::Unknown);
  EXPECT_EQ(unknown.search_bound, 3u);
  auto v = classify_general(Word("abcabc"), 3);
  EXPECT_EQ(v.tag, FeInjTag::Infinite);
  EXPECT_EQ(v.factorization->letter, 'a');
  EXPECT_EQ(v.provenance, "identity on letter 'a'");
  EXPECT_EQ(classify_general(Word("abababba"), 2).tag, FeInjTag::Finite);
}

TEST(ClassifyGeneral, ThreadCountDoesNotChangeTheVerdict) {
  for (const auto& s : {"abcacbab", "abcbacbcab", "aabcaabc", "cabcacab"}) {
    ClassifyOptions one, four;
    four.threads = 4;
    auto a = classify_general(Word(s), one);
    auto b = classify_general(Word(s), four);
    ASSERT_EQ(a.tag, b.tag) << s;
    ASSERT_EQ(a.provenance, b.provenance) << s;
    if (a.witness) ASSERT_EQ(a.witness->morphism, b.witness->morphism) << s;
  }
}

TEST(PumpWitness, Examples) {
  Word abab("abab");
  auto f = a_factorization(abab, 'a');
  auto witness = pump_witness(abab, *f, Morphism::identity(abab.alphabet()), Rational(5));
  EXPECT_GE(witness.exponent, Rational(5));
  EXPECT_EQ(exponent_of(witness.morphism.apply(abab.view())), witness.exponent);
  EXPECT_TRUE(witness.morphism.is_injective());

  Word aaa("aaa");
  f = a_factorization(aaa, 'a');
  witness = pump_witness(aaa, *f, Morphism::identity(aaa.alphabet()), Rational(100));
  EXPECT_GE(witness.exponent, Rational(100));

  Word three("abcabca");
  f = a_factorization(three, 'a');
  witness = pump_witness(three, *f, Morphism::identity(three.alphabet()), Rational(3));
  EXPECT_GE(witness.exponent, Rational(3));
  EXPECT_TRUE(witness.morphism.is_injective());
}

TEST(PumpWitness, RejectsBadInputs) {
  Word w("bbccabcbca");
  auto f = a_factorization(w, 'a');
  EXPECT_THROW(pump_witness(w, *f, Morphism::identity(w.alphabet()), Rational(5)), PreconditionError);
  Word abab("abab");
  auto g = a_factorization(abab, 'a');
  EXPECT_THROW(pump_witness(abab, *g, Morphism::identity(abab.alphabet()), Rational(1, 2)), PreconditionError);
}

TEST(PumpWitness, BinaryCodomainKeepsTheTarget) {
  Word w("abcabc");
  auto f = a_factorization(w, 'a');
  PumpOptions options;
  options.binary_codomain = true;
  auto witness = pump_witness(w, *f, Morphism::identity(w.alphabet()), Rational(7), options);
  EXPECT_EQ(witness.morphism.codomain().symbols(), "01");
  EXPECT_GE(witness.exponent, Rational(7));
  EXPECT_TRUE(witness.morphism.is_injective());
}

TEST(LowerBound, Examples) {
  // h_1 = {a -> cdc, b -> dc} has images of length <= 3.
  auto bound = fe_inj_lower_bound(Word("abababba"), 3, 2);
  EXPECT_GE(bound.best, Rational(5, 3));
  EXPECT_LT(bound.best, lowpower_limit(3));
  EXPECT_EQ(exponent_of(bound.argmax.apply(std::string_view("abababba"))), bound.best);

  auto two = fe_inj_lower_bound(Word("ababba"), 3, 2);
  EXPECT_EQ(two.best, Rational(15, 7));

  auto identity = fe_inj_lower_bound(Word("abcab"), 1, 3);
  EXPECT_GE(identity.best, exponent_of("abcab"));
}

TEST(LowerBound, GrowsWithImageLength) {
  Rational previous(0);
  for (std::size_t len = 1; len <= 4; ++len) {
    auto bound = fe_inj_lower_bound(Word("ab"), len, 2);
    EXPECT_GE(bound.best, previous);
    previous = bound.best;
  }
  // Oracle: best over all injective pairs of binary words of length <= 4.
  Rational best(0);
  for (const auto& x : oracle::words_up_to("01", 4, 1)) {
    for (const auto& y : oracle::words_up_to("01", 4, 1)) {
      if (oracle::collision({{'a', x}, {'b', y}}, 6)) continue;
      auto e = oracle::exponent(x + y);
      best = std::max(best, Rational(e.first, e.second));
    }
  }
  EXPECT_EQ(previous, best);
}

TEST(LowerBound, ThreadsAgree) {
  auto a = fe_inj_lower_bound(Word("abcab"), 2, 2, 1);
  auto b = fe_inj_lower_bound(Word("abcab"), 2, 2, 3);
  EXPECT_EQ(a.best, b.best);
  EXPECT_EQ(a.argmax, b.argmax);
  EXPECT_EQ(a.morphisms_examined, b.morphisms_examined);
}

TEST(Families, LowpowerExamples) {
  auto f = lowpower_morphism(2, 1);
  EXPECT_EQ(f.word.str(), "ababba");
  EXPECT_EQ(f.morphism.str(), "a=cdc,b=dc");
  EXPECT_EQ(f.expected, Rational(15, 7));
  auto g = lowpower_morphism(2, 0);
  EXPECT_EQ(g.expected, Rational(9, 5));
  // Worked by hand: h_0(ababba) = c dc c dc dc c = cdccdcdcc, period 5.
  EXPECT_EQ(g.morphism.apply(g.word).str(), "cdccdcdcc");
  EXPECT_EQ(exponent_of("cdccdcdcc"), Rational(9, 5));
  EXPECT_EQ(lowpower_limit(10), Rational(11, 9));
  EXPECT_LT(lowpower_morphism(10, 1000).expected, lowpower_limit(10));
  EXPECT_THROW(lowpower_morphism(1, 0), PreconditionError);
}

TEST(Families, HighpowerExamples) {
  EXPECT_EQ(highpower_word(2).expected, Rational(24, 13));
  EXPECT_EQ(highpower_word(3).expected, Rational(54, 19));
  for (std::size_t n = 2; n <= 6; ++n) {
    auto f = highpower_word(n);
    EXPECT_EQ(f.word.size(), 6 * n);
    EXPECT_EQ(oracle::period(f.word.str()), f.word.size());
    EXPECT_TRUE(f.morphism.is_injective());
  }
  EXPECT_THROW(highpower_word(1), PreconditionError);
}
