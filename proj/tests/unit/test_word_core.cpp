#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "wordrep/error.hpp"
#include "wordrep/periodicity.hpp"

using namespace wordrep;

namespace {

Rational to_rational(std::pair<std::int64_t, std::int64_t> e) { return Rational(e.first, e.second); }

}  // namespace

TEST(Alphabet, RejectsDuplicatesAndKeepsOrder) {
  Alphabet sigma("cab");
  EXPECT_EQ(sigma.size(), 3u);
  EXPECT_EQ(sigma.index_of('a'), 1u);
  EXPECT_FALSE(sigma.contains('d'));
  EXPECT_THROW(Alphabet("aba"), Error);
  EXPECT_EQ(Alphabet::of("banana").symbols(), "abn");
}

TEST(Alphabet, FreshSymbolIsUnused) {
  Alphabet sigma("abc");
  char c = sigma.fresh_symbol();
  EXPECT_FALSE(sigma.contains(c));
}

TEST(Word, ValidatesAgainstAlphabet) {
  EXPECT_NO_THROW(Word("abba", Alphabet("ab")));
  try {
    Word("abca", Alphabet("ab"));
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
}

TEST(Word, FactorsAndPowers) {
  Word w("abcab");
  EXPECT_EQ(w.factor(1, 3).str(), "bca");
  EXPECT_EQ(w.prefix(2).str(), "ab");
  EXPECT_EQ(w.suffix(2).str(), "ab");
  EXPECT_EQ(Word("ab").power(3).str(), "ababab");
  EXPECT_EQ(Word("abc").periodic_prefix(4).str(), "abca");
  EXPECT_THROW(w.factor(4, 2), Error);
}

TEST(Rational, ArithmeticAndParsing) {
  EXPECT_EQ(Rational(6, 4).str(), "3/2");
  EXPECT_EQ(Rational(4, 2).str(), "2");
  EXPECT_EQ(Rational(-1, -3), Rational(1, 3));
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational(1, 2) * Rational(2, 3), Rational(1, 3));
  EXPECT_LT(Rational(2, 3), Rational(3, 4));
  EXPECT_EQ(Rational::parse("15/7"), Rational(15, 7));
  EXPECT_EQ(Rational::parse("3"), Rational(3));
  EXPECT_THROW(Rational::parse("1/0"), ParseError);
  EXPECT_THROW(Rational::parse("x"), ParseError);
  EXPECT_THROW(Rational(1) / Rational(0), Error);
  EXPECT_EQ(Rational(7, 2).floor(), 3);
  EXPECT_EQ(Rational(7, 2).ceil(), 4);
  EXPECT_EQ(Rational(-7, 2).floor(), -4);
}

TEST(Periodicity, SmallestPeriodExamples) {
  EXPECT_EQ(smallest_period(Word("ababab")), 2u);
  EXPECT_EQ(smallest_period(Word("a")), 1u);
  EXPECT_EQ(smallest_period(Word("aabb")), 4u);
  EXPECT_THROW(smallest_period(Word("")), PreconditionError);
}

TEST(Periodicity, FractionalExponentExamples) {
  auto e = fractional_exponent(Word("ababab"));
  EXPECT_EQ(e.base.str(), "ab");
  EXPECT_EQ(e.exponent, Rational(3));
  e = fractional_exponent(Word("abca"));
  EXPECT_EQ(e.base.str(), "abc");
  EXPECT_EQ(e.exponent, Rational(4, 3));
  e = fractional_exponent(Word("aabb"));
  EXPECT_EQ(e.base.str(), "aabb");
  EXPECT_EQ(e.exponent, Rational(1));
}

TEST(Periodicity, IntegerExponentExamples) {
  auto p = integer_exponent(Word("abab"));
  EXPECT_EQ(p.count, 2u);
  EXPECT_EQ(p.root.str(), "ab");
  EXPECT_EQ(integer_exponent(Word("abc")).count, 1u);
  p = integer_exponent(Word("aaaaaa"));
  EXPECT_EQ(p.count, 6u);
  EXPECT_EQ(p.root.str(), "a");
}

TEST(Periodicity, PrimitiveAndConjugate) {
  EXPECT_TRUE(is_primitive(Word("ab")));
  EXPECT_FALSE(is_primitive(Word("abab")));
  EXPECT_TRUE(is_primitive(Word("aabab")));
  EXPECT_TRUE(is_conjugate(Word("abc"), Word("cab")));
  EXPECT_FALSE(is_conjugate(Word("abc"), Word("acb")));
  EXPECT_TRUE(is_conjugate(Word("aab"), Word("aba")));
}

TEST(Periodicity, ComparabilityExamples) {
  EXPECT_TRUE(prefix_comparable(Word("ab"), Word("abba")));
  EXPECT_FALSE(prefix_comparable(Word("ba"), Word("abba")));
  EXPECT_TRUE(suffix_comparable(Word("ba"), Word("abba")));
  EXPECT_TRUE(prefix_comparable(Word(""), Word("abba")));
}

TEST(Periodicity, FineWilfRoot) {
  auto root = fine_wilf_root(Word("abab"), Word("ab"));
  ASSERT_TRUE(root.has_value());
  EXPECT_EQ(root->str(), "ab");
  EXPECT_FALSE(fine_wilf_root(Word("ab"), Word("ba")).has_value());
  // (aabaa)^w and (aabaaaab)^w differ at offset 10, below 5 + 8 - 1.
  EXPECT_EQ(common_power_prefix("aabaa", "aabaaaab", 100), 10u);
  EXPECT_FALSE(fine_wilf_root(Word("aabaa"), Word("aabaaaab")).has_value());
}

TEST(Periodicity, MaxExponentFactorExamples) {
  auto f = max_exponent_factor(Word("abaab"), 1);
  EXPECT_EQ(f.factor.str(), "aa");
  EXPECT_EQ(f.exponent, Rational(2));
  f = max_exponent_factor(Word("ababab"), 2);
  EXPECT_EQ(f.factor.str(), "ababab");
  EXPECT_EQ(f.exponent, Rational(3));
  f = max_exponent_factor(Word("abc"), 1);
  EXPECT_EQ(f.factor.str(), "a");
  EXPECT_EQ(f.offset, 0u);
  EXPECT_EQ(f.exponent, Rational(1));
  EXPECT_THROW(max_exponent_factor(Word("abc"), 0), PreconditionError);
  EXPECT_THROW(max_exponent_factor(Word("abc"), 4), PreconditionError);
}

TEST(Periodicity, AgreesWithBruteForceOnAllShortWords) {
  for (const auto& s : oracle::words_up_to("abc", 7, 1)) {
    Word w(s);
    ASSERT_EQ(smallest_period(w), oracle::period(s)) << s;
    ASSERT_EQ(fractional_exponent(w).exponent, to_rational(oracle::exponent(s))) << s;
    auto [count, root] = oracle::integer_power(s);
    auto p = integer_exponent(w);
    ASSERT_EQ(p.count, count) << s;
    ASSERT_EQ(p.root.str(), root) << s;
    ASSERT_EQ(is_primitive(w), count == 1) << s;
  }
}

TEST(Periodicity, MaxExponentFactorMatchesExhaustiveSearch) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 400; ++trial) {
    std::size_t len = 1 + rng() % 14;
    std::string s;
    for (std::size_t i = 0; i < len; ++i) s.push_back("ab"[rng() % 2]);
    if (trial % 3 == 0) s[rng() % len] = 'c';
    std::size_t min_len = 1 + rng() % len;
    auto expected = oracle::max_exponent_factor(s, min_len);
    auto actual = max_exponent_factor(Word(s), min_len);
    ASSERT_EQ(actual.exponent, to_rational(expected.exponent)) << s << " min " << min_len;
    ASSERT_EQ(actual.offset, expected.offset) << s;
    ASSERT_EQ(actual.factor.size(), expected.length) << s;
  }
}

TEST(Periodicity, MinPeriodProfileMatchesRunOracle) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t len = 1 + rng() % 40;
    std::string s;
    for (std::size_t i = 0; i < len; ++i) s.push_back("ab"[rng() % 2]);
    auto profile = min_period_profile(s);
    auto expected = oracle::min_periods_by_runs(s);
    for (std::size_t n = 1; n <= len; ++n) {
      ASSERT_EQ(profile.period[n], expected[n]) << s << " n=" << n;
      ASSERT_TRUE(oracle::has_period(s.substr(profile.offset[n], n), profile.period[n]));
    }
  }
}
