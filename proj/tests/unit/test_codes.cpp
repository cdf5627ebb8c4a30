#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "wordrep/codes.hpp"
#include "wordrep/error.hpp"

using namespace wordrep;

namespace {

std::vector<std::string> strings(const CodeSet& x) {
  std::vector<std::string> out;
  for (const auto& w : x.words()) out.push_back(w.str());
  return out;
}

}  // namespace

TEST(CodeSet, Parse) {
  auto x = CodeSet::parse("X=ab,ba");
  EXPECT_EQ(x.size(), 2u);
  EXPECT_EQ(x.str(), "ab,ba");
  EXPECT_EQ(CodeSet::parse("a,bb").max_len(), 2u);
  EXPECT_THROW(CodeSet::parse("ab,,ba"), ParseError);
  EXPECT_THROW(CodeSet::parse("ab,ab"), ParseError);
  EXPECT_THROW(CodeSet::parse(""), ParseError);
}

TEST(CodeSet, IsCode) {
  EXPECT_TRUE(CodeSet::parse("ab,ba").is_code());
  EXPECT_FALSE(CodeSet::parse("a,aa").is_code());
  EXPECT_TRUE(CodeSet::parse("a,ab").is_code());
}

TEST(Interpretations, Examples) {
  // "a" is a suffix of "ba" and "b" a prefix of it, so ab also splits.
  auto x = CodeSet::parse("ab,ba");
  auto all = x_interpretations(Word("ab"), x);
  ASSERT_EQ(all.size(), 2u);
  EXPECT_TRUE(all[0].cuts.empty());
  EXPECT_EQ(all[1].cuts, (std::vector<std::size_t>{1}));
  EXPECT_EQ(all[1].str(), "(a|b)@[1]");

  auto single = x_interpretations(Word("a"), CodeSet::parse("aa"));
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single[0].pieces.size(), 1u);

  EXPECT_THROW(x_interpretations(Word(""), x), PreconditionError);
}

TEST(Interpretations, MatchBruteForce) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<std::string> elements;
    std::size_t count = 1 + rng() % 3;
    while (elements.size() < count) {
      auto len = 1 + rng() % 3;
      std::string e;
      for (std::size_t i = 0; i < len; ++i) e.push_back("ab"[rng() % 2]);
      if (std::find(elements.begin(), elements.end(), e) == elements.end()) elements.push_back(e);
    }
    std::vector<Word> words(elements.begin(), elements.end());
    CodeSet x(words);
    std::string w;
    for (std::size_t i = 0, len = 1 + rng() % 10; i < len; ++i) w.push_back("ab"[rng() % 2]);
    auto expected = oracle::interpretations(w, elements);
    auto actual = x_interpretations(Word(w), x);
    ASSERT_EQ(actual.size(), expected.size()) << w << " X=" << x.str();
    for (std::size_t i = 0; i < actual.size(); ++i) ASSERT_EQ(actual[i].cuts, expected[i]);
    ASSERT_EQ(x_interpretation_count(Word(w), x), expected.size());
    ASSERT_EQ(x_degree(Word(w), x), oracle::disjoint_family(expected)) << w << " X=" << x.str();
    ASSERT_EQ(x_factorization_count(Word(w), x), oracle::factorizations(w, elements));
  }
}

TEST(Degree, Examples) {
  EXPECT_EQ(x_degree(Word("aa"), CodeSet::parse("a")), 1u);
  EXPECT_EQ(x_degree(Word("ccc"), CodeSet::parse("ab")), 0u);
  EXPECT_EQ(x_degree(Word("abab"), CodeSet::parse("ab,ba")), 2u);
}

TEST(Factorizations, Examples) {
  EXPECT_EQ(x_factorization_count(Word("abab"), CodeSet::parse("ab")), 1u);
  EXPECT_EQ(x_factorization_count(Word("aaaa"), CodeSet::parse("a,aa")), 5u);
}

TEST(Synchronizing, Examples) {
  auto x = CodeSet::parse("ab,ba");
  // ab occurs in ab.ab (boundary at 0) and in ba.ba (boundary at 1 only).
  EXPECT_FALSE(is_synchronizing(Word("ab"), x, 12).has_value());
  EXPECT_EQ(oracle::synchronizing_split("ab", strings(x), 12), std::nullopt);
  // A separator letter that only occurs at the start of one element.
  auto y = CodeSet::parse("cab,ab");
  EXPECT_EQ(is_synchronizing(Word("c"), y, 12), std::optional<std::size_t>(0));
  EXPECT_THROW(is_synchronizing(Word("a"), CodeSet::parse("a,aa")), PreconditionError);
}

TEST(Synchronizing, MatchesXStarEnumeration) {
  std::vector<std::vector<std::string>> codes = {
      {"ab", "ba"}, {"a", "ab"}, {"aab", "ab", "b"}, {"a", "ab", "bb"}, {"a", "bb", "bab"}, {"aa", "ab", "b"}};
  const std::size_t probe = 12;
  for (const auto& elements : codes) {
    CodeSet x(std::vector<Word>(elements.begin(), elements.end()));
    ASSERT_TRUE(x.is_code()) << x.str();
    for (const auto& w : oracle::words_up_to("ab", 4, 1)) {
      auto expected = oracle::synchronizing_split(w, elements, probe);
      ASSERT_EQ(is_synchronizing(Word(w), x, probe), expected) << w << " X=" << x.str();
    }
  }
}

TEST(Synchronizing, OccurrenceContextsAreRealisable) {
  auto x = CodeSet::parse("a,bb,bab");
  for (const auto& ctx : occurrence_contexts(Word("abba"), x)) {
    EXPECT_GE(ctx.shortest_realisation, 4u);
    EXPECT_TRUE(std::is_sorted(ctx.boundaries.begin(), ctx.boundaries.end()));
  }
}
