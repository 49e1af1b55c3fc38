#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <oclattice/words.hpp>

#include "helpers.hpp"

using namespace oclattice;
using testing_helpers::W;

TEST(Words, ParseWord)
{
  EXPECT_EQ(parse_word("xy"), (Word{Letter(24), Letter(25)}));
  EXPECT_EQ(parse_word("xxy").size(), 3u);
  EXPECT_EQ(to_string(parse_word("xxy")), "xxy");
  EXPECT_EQ(parse_word("x12"), Word{Letter(12)});
  EXPECT_EQ(parse_word("ax27b").size(), 3u);
  EXPECT_EQ(parse_word("ax27b")[1], Letter(27));
  EXPECT_EQ(to_string(parse_word("x27x28")), "x27x28");
}

TEST(Words, ParseErrors)
{
  auto code_of = [](auto f) {
    try {
      f();
    } catch (Error const &e) {
      return e.code();
    }
    return ErrorCode::InvariantViolation;
  };
  EXPECT_EQ(code_of([] { parse_word(""); }), ErrorCode::EmptyWord);
  EXPECT_EQ(code_of([] { parse_word("x0"); }), ErrorCode::UnknownSymbol);
  EXPECT_EQ(code_of([] { parse_word("xY"); }), ErrorCode::UnknownSymbol);
  EXPECT_EQ(code_of([] { parse_word("x-y"); }), ErrorCode::UnknownSymbol);
  EXPECT_EQ(code_of([] { parse_content(""); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_content("x:0"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_content("x2"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_partition("1,2"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_partition("2,0"); }), ErrorCode::ParseError);
}

TEST(Words, ContentOf)
{
  EXPECT_EQ(content_of(W("xxy")), (Content{{Letter(24), 2}, {Letter(25), 1}}));
  EXPECT_EQ(content_of(W("x")), (Content{{Letter(24), 1}}));
  EXPECT_EQ(content_of(W("xyzt")).size(), 4u);
  EXPECT_EQ(parse_content("x:2,y:1"), content_of(W("xxy")));
}

TEST(Words, Balanced)
{
  EXPECT_TRUE(is_balanced(W("xy"), W("yx")));
  EXPECT_FALSE(is_balanced(W("xy"), W("x")));
  EXPECT_TRUE(is_balanced(W("xxyy"), W("xyxy")));
}

TEST(Words, PartitionOf)
{
  EXPECT_EQ(partition_of(content_of(W("xyy"))), Partition({2, 1}));
  EXPECT_EQ(partition_of(content_of(W("xxxyyy"))), Partition({3, 3}));
  EXPECT_EQ(partition_of(content_of(W("x"))), Partition({1}));
  EXPECT_EQ(to_string(parse_partition("3,2,1")), "3,2,1");
}

TEST(Words, Enumerate)
{
  auto ws = enumerate_words(parse_content("x:2,y:1"));
  std::vector<std::string> got;
  for (auto const &w : ws)
    got.push_back(to_string(w));
  EXPECT_EQ(got, (std::vector<std::string>{"xxy", "xyx", "yxx"}));
  EXPECT_EQ(enumerate_words(parse_content("x:1,y:1,z:1")).size(), 6u);
  EXPECT_EQ(enumerate_words(parse_content("x:1")).size(), 1u);
}

TEST(Words, EnumerateCaps)
{
  Caps caps;
  caps.max_words = 5;
  EXPECT_THROW(enumerate_words(parse_content("x:1,y:1,z:1"), caps), Error);
  Caps letters;
  letters.max_letters = 3;
  EXPECT_THROW(enumerate_words(parse_content("x:2,y:2"), letters), Error);
  EXPECT_THROW(enumerate_words(Content{}), Error);
}

TEST(Words, ReverseAndSimple)
{
  EXPECT_EQ(reverse(W("xxy")), W("yxx"));
  EXPECT_EQ(reverse(W("x")), W("x"));
  EXPECT_EQ(reverse(reverse(W("xyzt"))), W("xyzt"));
  EXPECT_TRUE(is_simple(parse_letter("y"), W("xyx")));
  EXPECT_FALSE(is_simple(parse_letter("x"), W("xyx")));
  try {
    is_simple(parse_letter("z"), W("xyx"));
    FAIL();
  } catch (Error const &e) {
    EXPECT_EQ(e.code(), ErrorCode::LetterAbsent);
  }
}

TEST(Words, IndexOf)
{
  auto ws = enumerate_words(parse_content("x:2,y:2,z:1"));
  for (std::size_t i = 0; i < ws.size(); ++i)
    EXPECT_EQ(ws.index_of(ws[i]), i);
  EXPECT_FALSE(ws.index_of(W("xyz")).has_value());
}

namespace
{

// All contents over letters 1..m with total size t, multiplicities >= 1.
void for_each_content(std::uint32_t max_total, std::function<void(Content const &)> const &f)
{
  for (std::uint32_t total = 1; total <= max_total; ++total) {
    std::vector<std::uint32_t> parts;
    std::function<void(std::uint32_t)> rec = [&](std::uint32_t left) {
      if (left == 0) {
        Content c;
        for (std::size_t i = 0; i < parts.size(); ++i)
          c[Letter(static_cast<std::uint32_t>(i + 1))] = parts[i];
        f(c);
        return;
      }
      for (std::uint32_t p = 1; p <= left; ++p) {
        parts.push_back(p);
        rec(left - p);
        parts.pop_back();
      }
    };
    rec(total);
  }
}

// n! / prod(m_i!) by Pascal-style recursion on the number of words ending in each letter.
std::uint64_t count_words_oracle(std::map<std::uint32_t, std::uint32_t> c)
{
  std::uint32_t total = 0;
  for (auto [x, m] : c)
    total += m;
  if (total <= 1)
    return 1;
  std::uint64_t sum = 0;
  for (auto &[x, m] : c) {
    if (m == 0)
      continue;
    --m;
    sum += count_words_oracle(c);
    ++m;
  }
  return sum;
}

} // namespace

TEST(WordsProperty, CountMatchesRecursiveOracleUpTo8)
{
  std::size_t checked = 0;
  for_each_content(8, [&](Content const &c) {
    std::map<std::uint32_t, std::uint32_t> raw;
    for (auto [x, m] : c)
      raw[x.index] = m;
    auto ws = enumerate_words(c);
    ASSERT_EQ(ws.size(), count_words_oracle(raw)) << to_string(c);
    ASSERT_EQ(multinomial(c), ws.size());
    std::set<Word> distinct(ws.begin(), ws.end());
    ASSERT_EQ(distinct.size(), ws.size());
    ASSERT_TRUE(std::is_sorted(ws.begin(), ws.end()));
    for (auto const &w : ws) {
      ASSERT_EQ(content_of(w), c);
      ASSERT_EQ(reverse(reverse(w)), w);
      ASSERT_EQ(content_of(reverse(w)), c);
    }
    ++checked;
  });
  EXPECT_GT(checked, 200u);
}

TEST(WordsProperty, PartitionInvariantUnderRenaming)
{
  std::vector<Content> contents{parse_content("x:3,y:1,z:2"), parse_content("a:1,b:1"), parse_content("x5:4,x9:4,c:1")};
  for (auto const &c : contents) {
    std::vector<std::uint32_t> counts;
    for (auto [x, m] : c)
      counts.push_back(m);
    std::sort(counts.begin(), counts.end());
    do {
      Content renamed;
      std::uint32_t i = 40;
      for (auto m : counts)
        renamed[Letter(i--)] = m;
      EXPECT_EQ(partition_of(renamed), partition_of(c));
    } while (std::next_permutation(counts.begin(), counts.end()));
  }
}
